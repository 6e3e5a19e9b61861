#include <doctest.h>

#include <fstream>
#include <sstream>

#include "chu/script.hpp"

using namespace chu;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Report run_text(const std::string& text, ExecOptions opts = {}) {
  return execute(parse_program(text), opts);
}

}  // namespace

TEST_SUITE("script") {

TEST_CASE("parse basics") {
  Script s = parse_program("field 2\nA := chu 1 1 [[1]]\ncheck involution A\n");
  CHECK(s.statements.size() == 3);
  CHECK(s.has_field);

  CHECK_THROWS_AS(parse_program("field 4\n"), ParseError);
  CHECK_THROWS_AS(parse_program("field 2\ncheck involution B\n"), ParseError);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_program("field 2\ncheck involution B\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 18);  // 1-based position of the unbound name
  }
}

TEST_CASE("grammar corners") {
  CHECK_THROWS_AS(parse_program("field 2\nfield 3\n"), ParseError);      // one context
  CHECK_THROWS_AS(parse_program("field 2\nring 2 2\n"), ParseError);     // not both
  CHECK_THROWS_AS(parse_program("A := chu 1 1 [[1]]\n"), ParseError);    // needs field
  CHECK_THROWS_AS(parse_program("ring 2 2\nlaws all\n"), ParseError);    // wrong context
  CHECK_THROWS_AS(parse_program("field 2\nA := chu 1 1 [[1]\n"), ParseError);
  CHECK_THROWS_AS(parse_program("field 2\nA := chu 1 1 [[1]]\nA := dual A\n"),
                  ParseError);  // rebinding
  CHECK_THROWS_AS(parse_program("field 2\nV := presented [1] {}\ncheck involution V\n"),
                  ParseError);  // type mismatch
  CHECK_THROWS_AS(parse_program("field 2\nnonsense 1\n"), ParseError);
  CHECK_THROWS_AS(parse_program("field 2\nlaws L11\n"), ParseError);
  CHECK_THROWS_AS(parse_program("field 2\ncheck L5 A\n"), ParseError);   // arity
  CHECK_NOTHROW(parse_program("# comment only\n\n"));
  CHECK_NOTHROW(parse_program("field 2\nA := chu 0 0 []\ncheck involution A\n"));
}

TEST_CASE("execute: unit involution script passes") {
  Report r = run_text("field 2\nA := chu 1 1 [[1]]\ncheck involution A\n");
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].status == CheckResult::Status::Pass);
  CHECK(r.all_pass());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("execute: failures do not abort later checks") {
  Report r = run_text(
      "field 2\n"
      "A := chu 1 1 [[0]]\n"
      "check separated A\n"
      "check involution A\n");
  REQUIRE(r.results.size() == 2);
  CHECK(r.results[0].status == CheckResult::Status::Fail);
  CHECK(r.results[1].status == CheckResult::Status::Pass);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("execute: ring context campaign") {
  Report r = run_text("ring 2 3\ncheck selfinjective --dims 4 --samples 10\n");
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].status == CheckResult::Status::Pass);
  CHECK(r.context.at("kind") == "ring");
  // --dim is accepted as an alias; a full-size campaign still passes
  Report r2 = run_text("ring 2 3\ncheck selfinjective --dim 6 --samples 100\n");
  REQUIRE(r2.results.size() == 1);
  CHECK(r2.results[0].status == CheckResult::Status::Pass);
}

TEST_CASE("laws statement produces one entry per law") {
  Report r = run_text("field 3\nlaws all --samples 3 --dims 2\n");
  CHECK(r.results.size() == 10);
  CHECK(r.all_pass());
  Report single = run_text("field 3\nlaws L7 --samples 5 --dims 2\n");
  REQUIRE(single.results.size() == 1);
  CHECK(single.results[0].name == "laws L7");
  CHECK(!single.results[0].law_report.is_null());
}

TEST_CASE("byte determinism across seeds and thread counts") {
  std::string text = slurp(std::string(GOLDEN_DIR) + "/chu_field.chu");
  Script s = parse_program(text);
  ExecOptions a{0, 1, 200, 4};
  ExecOptions b{0, 4, 200, 4};
  CHECK(execute(s, a).emit("json") == execute(s, b).emit("json"));
  ExecOptions c{1, 1, 200, 4};
  CHECK(execute(s, a).emit("json") != execute(s, c).emit("json"));
}

TEST_CASE("golden reports byte-match") {
  for (const char* base : {"chu_field", "ring", "fail_law"}) {
    CAPTURE(base);
    std::string text = slurp(std::string(GOLDEN_DIR) + "/" + base + ".chu");
    std::string expected = slurp(std::string(GOLDEN_DIR) + "/" + base + ".json");
    Report r = execute(parse_program(text), {});
    CHECK(r.emit("json") == expected);
  }
}

TEST_CASE("induced law failure carries a replayable counterexample") {
  std::string text = slurp(std::string(GOLDEN_DIR) + "/fail_law.chu");
  Report r = execute(parse_program(text), {});
  CHECK(r.exit_code() == 1);
  REQUIRE(!r.results.empty());
  const CheckResult& failed = r.results.front();
  REQUIRE(failed.status == CheckResult::Status::Fail);
  REQUIRE(!failed.counterexample.is_null());

  // feed it back through a replay statement: same failure, same detail
  std::string replay_script =
      "field 2\nreplay " + failed.counterexample.dump() + "\n";
  Report rr = run_text(replay_script);
  REQUIRE(rr.results.size() == 1);
  CHECK(rr.results[0].status == CheckResult::Status::Fail);
  json original_failure = failed.law_report.at("failures").at(0);
  json replayed_failure = rr.results[0].law_report.at("failures").at(0);
  CHECK(original_failure.at("detail") == replayed_failure.at("detail"));
  CHECK(original_failure.at("objects") == replayed_failure.at("objects"));
}

TEST_CASE("text format mentions every check") {
  Report r = run_text(
      "field 2\nA := chu 1 1 [[1]]\ncheck involution A\ncheck separated A\n");
  std::string text = r.emit("text");
  CHECK(text.find("involution A") != std::string::npos);
  CHECK(text.find("separated A") != std::string::npos);
  CHECK(text.find("summary: 2 checks, 2 pass") != std::string::npos);
}

TEST_CASE("report directives are collected in order") {
  Script s = parse_program("field 2\nreport text\nreport json out.json\n");
  const auto& d = report_directives(s);
  REQUIRE(d.size() == 2);
  CHECK(d[0].format == "text");
  CHECK(!d[0].path.has_value());
  CHECK(d[1].format == "json");
  CHECK(d[1].path.value() == "out.json");
}

TEST_CASE("json interchange roundtrips") {
  FieldSpec f5(5);
  Matrix m = Matrix::from_rows(f5, {{1, 2, 3}, {4, 0, 1}}, 3);
  CHECK(matrix_from_json(to_json(m)) == m);

  ChuObject o{f5, 2, 3, m};
  CHECK(chu_from_json(to_json(o)) == o);

  ChuMorphism id = identity_morphism(o);
  ChuMorphism id_back = chu_morphism_from_json(to_json(id));
  CHECK(id_back == id);

  PresentedSpace v = make_presented(FieldSpec(2), {1, 2}, {{1, 0, 1}});
  CHECK(presented_from_json(to_json(v)) == v);

  NilModule mod = cyclic(RingSpec(FieldSpec(3), 3), 2);
  CHECK(nilmodule_from_json(to_json(mod)) == mod);

  ChuKObject reg = chuK_regular(RingSpec(FieldSpec(2), 2));
  CHECK(chuk_from_json(to_json(reg)) == reg);

  // malformed payloads are rejected, not silently accepted
  json bad = to_json(mod);
  bad["X"] = json::array({1, 0, 0, 1});  // identity is not nilpotent
  CHECK_THROWS(nilmodule_from_json(bad));
}

TEST_CASE("internal errors become error entries") {
  // replay with valid JSON shape but a law the objects cannot satisfy the
  // arity for is caught at parse; an execution error needs a deeper fault,
  // so drive one through a presented-space check with huge oracle input
  Report r = run_text(
      "field 2\n"
      "V := presented [1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1] {}\n"
      "check factor V\n");
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].status == CheckResult::Status::Error);
  CHECK(r.exit_code() == 1);
}

}  // TEST_SUITE
