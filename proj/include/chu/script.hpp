#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chu/json_io.hpp"

namespace chu {

inline constexpr const char* kToolVersion = "0.1.0";

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(l) + ":" +
                           std::to_string(c) + ": " + msg),
        line(l), col(c) {}
};

// Line-oriented grammar:
//   field INT | ring INT INT
//   NAME := chu A X [[..]]
//   NAME := dual|S|E NAME
//   NAME := tensor|hom NAME NAME
//   NAME := cyclic INT
//   NAME := presented [d..] {gen-rows}
//   check CHECKNAME ARGS* FLAGS*
//   laws all|Lk FLAGS*
//   replay JSON
//   report text|json [PATH]
// '#' starts a comment. Names are bound before use; exactly one field/ring
// context per script, ahead of anything that needs it.
struct Script;

Script parse_program(const std::string& text);

struct ExecOptions {
  std::uint64_t seed = 0;
  int threads = 1;
  int default_samples = 200;
  int default_dims = 4;
};

struct CheckResult {
  enum class Status { Pass, Fail, Error };
  std::string name;
  Status status = Status::Pass;
  std::string details;
  json counterexample;  // null unless a replayable counterexample exists
  json law_report;      // null unless the check is a law suite entry
};

struct Report {
  std::string version = kToolVersion;
  std::uint64_t seed = 0;
  json context;
  std::vector<CheckResult> results;

  bool all_pass() const;
  json to_json() const;
  std::string emit(const std::string& format) const;  // "text" | "json"
  int exit_code() const;                               // 0 pass, 1 any fail/error
};

Report execute(const Script& s, const ExecOptions& opts);

struct ReportDirective {
  std::string format;  // "text" | "json"
  std::optional<std::string> path;
};
const std::vector<ReportDirective>& report_directives(const Script& s);

// --- implementation detail, exposed for the interpreter and tests ---------

struct Statement {
  enum class Kind { Context, Binding, Check, Laws, Replay, Report };
  Kind kind;
  int line = 0;

  // Context
  bool is_ring = false;
  i64 p = 0;
  int n = 0;

  // Binding
  std::string name;
  std::string op;  // chu|dual|S|E|tensor|hom|cyclic|presented
  std::vector<std::string> args;
  std::vector<int> dims;               // chu dims / cyclic order / factors
  std::vector<Vec> literal_rows;       // chu pairing rows or presented generators

  // Check / Laws
  std::string check_name;              // check name or law id ("all" for suites)
  std::map<std::string, i64> flags;

  // Replay
  std::string payload;

  // Report
  ReportDirective directive;
};

struct Script {
  std::vector<Statement> statements;
  std::vector<ReportDirective> directives;
  bool has_field = false;
  bool has_ring = false;
  i64 context_p = 0;
  int context_n = 0;
};

}  // namespace chu
