#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chu/script.hpp"

namespace {

std::string read_all(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Chu-category toolkit"};
  std::string script_path;
  chu::ExecOptions opts;
  std::string format = "text";
  std::string out_path;
  app.add_option("script", script_path, "script file ('-' for stdin)")->required();
  app.add_option("--seed", opts.seed, "PRNG seed (default 0)");
  app.add_option("--threads", opts.threads, "worker threads (default 1)");
  app.add_option("--samples", opts.default_samples, "default samples per law suite");
  app.add_option("--dims", opts.default_dims, "default max carrier dimension");
  app.add_option("--format", format, "default report format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write the default report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (script_path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(script_path);
    if (!in) {
      std::cerr << "error: cannot open " << script_path << "\n";
      return 2;
    }
    text = read_all(in);
  }

  chu::Script script;
  try {
    script = chu::parse_program(text);
  } catch (const chu::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  chu::Report report;
  try {
    report = chu::execute(script, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto emit_to = [&](const std::string& fmt, const std::string& path) -> bool {
    std::string body = report.emit(fmt);
    if (path.empty()) {
      std::cout << body;
      return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return false;
    }
    out << body;
    return static_cast<bool>(out);
  };

  const auto& directives = chu::report_directives(script);
  if (directives.empty()) {
    if (!emit_to(format, out_path)) return 2;
  } else {
    for (const auto& d : directives)
      if (!emit_to(d.format, d.path.value_or(out_path))) return 2;
  }
  return report.exit_code();
}
