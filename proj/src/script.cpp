#include "chu/script.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

namespace chu {

namespace {

enum class ValueType { Chu, Presented, Module };

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t start = i;
    if (line[i] == '[' || line[i] == '{') {
      char open = line[i], close = open == '[' ? ']' : '}';
      int depth = 0;
      while (i < line.size()) {
        if (line[i] == open) ++depth;
        if (line[i] == close) --depth;
        ++i;
        if (depth == 0) break;
      }
      if (depth != 0)
        throw ParseError(line_no, static_cast<int>(start) + 1, "unbalanced bracket");
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != '#')
        ++i;
    }
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

i64 parse_int(const Token& t, int line) {
  try {
    size_t pos = 0;
    i64 v = std::stoll(t.text, &pos);
    if (pos != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line, t.col, "expected an integer, got '" + t.text + "'");
  }
}

std::vector<Vec> parse_rows(const Token& t, int line) {
  // bracketed matrix literal: [[1,0],[0,1]] or []; generator sets use {...}
  std::string body = t.text;
  if (!body.empty() && body.front() == '{') {
    body = "[" + body.substr(1, body.size() - 2) + "]";
  }
  json j;
  try {
    j = json::parse(body);
  } catch (...) {
    throw ParseError(line, t.col, "malformed matrix literal");
  }
  if (!j.is_array()) throw ParseError(line, t.col, "matrix literal must be an array");
  std::vector<Vec> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError(line, t.col, "matrix rows must be arrays");
    rows.push_back(r.get<Vec>());
  }
  return rows;
}

std::vector<int> parse_int_list(const Token& t, int line) {
  json j;
  try {
    j = json::parse(t.text);
  } catch (...) {
    throw ParseError(line, t.col, "malformed list literal");
  }
  if (!j.is_array()) throw ParseError(line, t.col, "expected a list");
  return j.get<std::vector<int>>();
}

struct CheckSig {
  int n_args;                 // bound-name arguments
  ValueType arg_type;         // homogeneous argument type
  bool needs_field;
  bool needs_ring;
};

std::optional<CheckSig> check_signature(const std::string& name) {
  static const std::map<std::string, CheckSig> table = {
      {"involution", {1, ValueType::Chu, true, false}},
      {"separated", {1, ValueType::Chu, true, false}},
      {"extensional", {1, ValueType::Chu, true, false}},
      {"fr", {1, ValueType::Chu, true, false}},
      {"rf", {1, ValueType::Presented, true, false}},
      {"endk", {0, ValueType::Chu, true, false}},
      {"factor", {1, ValueType::Presented, true, false}},
      {"sigma", {1, ValueType::Presented, true, false}},
      {"selfinjective", {0, ValueType::Module, false, true}},
      {"cogenerator", {0, ValueType::Module, false, true}},
      {"selfdual", {0, ValueType::Module, false, true}},
      {"tensortable", {0, ValueType::Module, false, true}},
      {"baer", {0, ValueType::Module, false, true}},
      {"appendix", {0, ValueType::Chu, false, false}},
  };
  auto it = table.find(name);
  if (it != table.end()) return it->second;
  return std::nullopt;
}

bool is_law_name(const std::string& s) {
  try {
    law_from_name(s);
    return true;
  } catch (...) {
    return false;
  }
}

void parse_flags(const std::vector<Token>& toks, size_t from, int line, Statement* st) {
  for (size_t i = from; i < toks.size(); i += 2) {
    const std::string& f = toks[i].text;
    if (f.rfind("--", 0) != 0)
      throw ParseError(line, toks[i].col, "expected a --flag, got '" + f + "'");
    if (i + 1 >= toks.size())
      throw ParseError(line, toks[i].col, "flag " + f + " needs a value");
    std::string key = f.substr(2);
    if (key == "dim") key = "dims";
    st->flags[key] = parse_int(toks[i + 1], line);
  }
}

}  // namespace

const std::vector<ReportDirective>& report_directives(const Script& s) {
  return s.directives;
}

Script parse_program(const std::string& text) {
  Script script;
  std::map<std::string, ValueType> env;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  auto require_field = [&](int l, int col) {
    if (!script.has_field) throw ParseError(l, col, "needs a 'field' context");
  };
  auto require_ring = [&](int l, int col) {
    if (!script.has_ring) throw ParseError(l, col, "needs a 'ring' context");
  };
  auto require_bound = [&](const Token& t, int l, ValueType want) {
    auto it = env.find(t.text);
    if (it == env.end()) throw ParseError(l, t.col, "unbound name '" + t.text + "'");
    if (it->second != want) throw ParseError(l, t.col, "name '" + t.text + "' has the wrong type");
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> toks = tokenize(line, line_no);
    if (toks.empty()) continue;
    Statement st;
    st.line = line_no;
    const std::string& head = toks[0].text;

    if (head == "field" || head == "ring") {
      if (script.has_field || script.has_ring)
        throw ParseError(line_no, toks[0].col, "only one field/ring context per script");
      if (head == "field") {
        if (toks.size() != 2) throw ParseError(line_no, toks[0].col, "usage: field P");
        i64 p = parse_int(toks[1], line_no);
        try {
          FieldSpec f(p);
        } catch (const std::exception& e) {
          throw ParseError(line_no, toks[1].col, e.what());
        }
        st.kind = Statement::Kind::Context;
        st.p = p;
        script.has_field = true;
        script.context_p = p;
      } else {
        if (toks.size() != 3) throw ParseError(line_no, toks[0].col, "usage: ring P N");
        i64 p = parse_int(toks[1], line_no);
        i64 n = parse_int(toks[2], line_no);
        try {
          RingSpec r(FieldSpec(p), static_cast<int>(n));
        } catch (const std::exception& e) {
          throw ParseError(line_no, toks[1].col, e.what());
        }
        st.kind = Statement::Kind::Context;
        st.is_ring = true;
        st.p = p;
        st.n = static_cast<int>(n);
        script.has_ring = true;
        script.context_p = p;
        script.context_n = static_cast<int>(n);
      }
      script.statements.push_back(std::move(st));
      continue;
    }

    if (toks.size() >= 2 && toks[1].text == ":=") {
      if (toks.size() < 3) throw ParseError(line_no, toks[1].col, "missing expression");
      st.kind = Statement::Kind::Binding;
      st.name = head;
      if (env.count(head)) throw ParseError(line_no, toks[0].col, "name '" + head + "' rebound");
      const std::string& op = toks[2].text;
      st.op = op;
      if (op == "chu") {
        require_field(line_no, toks[2].col);
        if (toks.size() != 6) throw ParseError(line_no, toks[2].col, "usage: NAME := chu A X [[..]]");
        st.dims = {static_cast<int>(parse_int(toks[3], line_no)),
                   static_cast<int>(parse_int(toks[4], line_no))};
        st.literal_rows = parse_rows(toks[5], line_no);
        env[head] = ValueType::Chu;
      } else if (op == "dual" || op == "S" || op == "E") {
        require_field(line_no, toks[2].col);
        if (toks.size() != 4) throw ParseError(line_no, toks[2].col, "usage: NAME := " + op + " NAME");
        require_bound(toks[3], line_no, ValueType::Chu);
        st.args = {toks[3].text};
        env[head] = ValueType::Chu;
      } else if (op == "tensor" || op == "hom") {
        require_field(line_no, toks[2].col);
        if (toks.size() != 5) throw ParseError(line_no, toks[2].col, "usage: NAME := " + op + " A B");
        require_bound(toks[3], line_no, ValueType::Chu);
        require_bound(toks[4], line_no, ValueType::Chu);
        st.args = {toks[3].text, toks[4].text};
        env[head] = ValueType::Chu;
      } else if (op == "cyclic") {
        require_ring(line_no, toks[2].col);
        if (toks.size() != 4) throw ParseError(line_no, toks[2].col, "usage: NAME := cyclic I");
        st.dims = {static_cast<int>(parse_int(toks[3], line_no))};
        env[head] = ValueType::Module;
      } else if (op == "presented") {
        require_field(line_no, toks[2].col);
        if (toks.size() != 5)
          throw ParseError(line_no, toks[2].col, "usage: NAME := presented [d..] {rows}");
        st.dims = parse_int_list(toks[3], line_no);
        st.literal_rows = parse_rows(toks[4], line_no);
        env[head] = ValueType::Presented;
      } else {
        throw ParseError(line_no, toks[2].col, "unknown constructor '" + op + "'");
      }
      script.statements.push_back(std::move(st));
      continue;
    }

    if (head == "check") {
      if (toks.size() < 2) throw ParseError(line_no, toks[0].col, "missing check name");
      st.kind = Statement::Kind::Check;
      st.check_name = toks[1].text;
      size_t next = 2;
      if (is_law_name(st.check_name)) {
        require_field(line_no, toks[1].col);
        LawId id = law_from_name(st.check_name);
        int arity = law_arity(id);
        for (int k = 0; k < arity; ++k) {
          if (next >= toks.size())
            throw ParseError(line_no, toks[1].col,
                             "law " + st.check_name + " needs " + std::to_string(arity) + " names");
          require_bound(toks[next], line_no, ValueType::Chu);
          st.args.push_back(toks[next].text);
          ++next;
        }
      } else {
        auto sig = check_signature(st.check_name);
        if (!sig) throw ParseError(line_no, toks[1].col, "unknown check '" + st.check_name + "'");
        if (sig->needs_field) require_field(line_no, toks[1].col);
        if (sig->needs_ring) require_ring(line_no, toks[1].col);
        for (int k = 0; k < sig->n_args; ++k) {
          if (next >= toks.size())
            throw ParseError(line_no, toks[1].col, "check needs " + std::to_string(sig->n_args) +
                                                        " bound names");
          require_bound(toks[next], line_no, sig->arg_type);
          st.args.push_back(toks[next].text);
          ++next;
        }
      }
      parse_flags(toks, next, line_no, &st);
      script.statements.push_back(std::move(st));
      continue;
    }

    if (head == "laws") {
      if (toks.size() < 2) throw ParseError(line_no, toks[0].col, "usage: laws all|Lk FLAGS");
      require_field(line_no, toks[0].col);
      st.kind = Statement::Kind::Laws;
      st.check_name = toks[1].text;
      if (st.check_name != "all" && !is_law_name(st.check_name))
        throw ParseError(line_no, toks[1].col, "unknown law '" + st.check_name + "'");
      parse_flags(toks, 2, line_no, &st);
      script.statements.push_back(std::move(st));
      continue;
    }

    if (head == "replay") {
      auto pos = line.find("replay");
      std::string rest = line.substr(pos + 6);
      size_t b = rest.find_first_not_of(" \t");
      if (b == std::string::npos)
        throw ParseError(line_no, toks[0].col, "replay needs a counterexample");
      st.kind = Statement::Kind::Replay;
      st.payload = rest.substr(b);
      try {
        json j = json::parse(st.payload);
        counterexample_from_json(j);
      } catch (const std::exception& e) {
        throw ParseError(line_no, toks[0].col, std::string("bad counterexample: ") + e.what());
      }
      script.statements.push_back(std::move(st));
      continue;
    }

    if (head == "report") {
      if (toks.size() < 2 || (toks[1].text != "text" && toks[1].text != "json"))
        throw ParseError(line_no, toks[0].col, "usage: report text|json [PATH]");
      if (toks.size() > 3) throw ParseError(line_no, toks[0].col, "usage: report text|json [PATH]");
      st.kind = Statement::Kind::Report;
      st.directive.format = toks[1].text;
      if (toks.size() == 3) st.directive.path = toks[2].text;
      script.directives.push_back(st.directive);
      script.statements.push_back(std::move(st));
      continue;
    }

    throw ParseError(line_no, toks[0].col, "unrecognized statement '" + head + "'");
  }
  return script;
}

namespace {

using Value = std::variant<ChuObject, PresentedSpace, NilModule>;

struct TaskOutcome {
  std::vector<CheckResult> results;
};

CheckResult pass(std::string name, std::string details = "") {
  return {std::move(name), CheckResult::Status::Pass, std::move(details), nullptr, nullptr};
}

CheckResult fail(std::string name, std::string details, json counterexample = nullptr) {
  return {std::move(name), CheckResult::Status::Fail, std::move(details),
          std::move(counterexample), nullptr};
}

CheckResult law_result(std::string name, const LawReport& rep) {
  CheckResult r;
  r.name = std::move(name);
  r.status = rep.pass() ? CheckResult::Status::Pass : CheckResult::Status::Fail;
  r.details = std::to_string(rep.trials) + " trials, " +
              std::to_string(rep.failures.size()) + " failures";
  if (!rep.failures.empty()) r.counterexample = to_json(rep.failures.front());
  r.law_report = to_json(rep);
  return r;
}

// ---- the individual checks ----

CheckResult run_pinned_law(const std::string& name, LawId id,
                           const std::vector<ChuObject>& objs) {
  LawReport rep;
  rep.law = id;
  rep.trials = 1;
  WitnessResult w = check_law_instance(id, objs);
  if (!w.ok) rep.failures.push_back({id, 0, objs, w.detail});
  return law_result(name, rep);
}

CheckResult run_factor_check(const std::string& name, const PresentedSpace& v) {
  int compared = 0;
  // the full dual basis, plus every functional when the dual is enumerably small
  std::vector<FunctionalP> phis = hom_functionals(v);
  double total = std::pow(static_cast<double>(v.field.p), v.dim());
  if (total <= 64) {
    for (i64 code = 0; code < static_cast<i64>(total); ++code) {
      FunctionalP phi;
      phi.coeffs.assign(v.dim(), 0);
      i64 c = code;
      for (int i = 0; i < v.dim(); ++i) {
        phi.coeffs[i] = c % v.field.p;
        c /= v.field.p;
      }
      phis.push_back(phi);
    }
  }
  for (const auto& phi : phis) {
    FactorizationResult fr = factor_functional(v, phi);
    std::vector<int> oracle = minimal_j_oracle(v, phi);
    if (fr.j != oracle)
      return fail(name, "minimal J disagrees with the pointwise oracle");
    // phi0 o pi_J = phi on the subspace basis
    Vec psi = extend_functional(v, phi);
    for (int r = 0; r < v.dim(); ++r) {
      Vec row = v.sub.basis().row(r);
      i64 acc = 0;
      for (int j = 0; j < v.ambient_dim(); ++j)
        acc = v.field.add(acc, v.field.mul(v.field.reduce(psi[j]), row[j]));
      if (acc != v.field.reduce(phi.coeffs[r]))
        return fail(name, "extension does not restrict to the functional");
    }
    ++compared;
  }
  return pass(name, std::to_string(compared) + " functionals factored and matched");
}

CheckResult run_sigma_check(const std::string& name, const PresentedSpace& v) {
  PresentedSpace s1 = sigma(v);
  if (!(sigma(s1) == s1)) return fail(name, "sigma is not idempotent");
  if (!is_weak_iso(sigma_unit(v))) return fail(name, "v -> sigma(v) is not a weak isomorphism");
  if (static_cast<int>(hom_functionals(s1).size()) != v.dim())
    return fail(name, "sigma changed the functionals");
  return pass(name, "idempotent; unit is a weak isomorphism");
}

CheckResult run_selfinjective(const std::string& name, RingSpec ring, int max_dim,
                              int samples, std::uint64_t seed) {
  for (int trial = 0; trial < samples; ++trial) {
    Rng rng(mix_seed(seed, trial));
    NilModule b = random_module(rng, ring, max_dim);
    if (b.dim == 0) continue;
    KLinearMap incl = random_submodule_inclusion(rng, b, 3);
    KLinearMap phi = random_functional(rng, incl.source);
    auto psi = extend_hom(incl, phi);
    if (!psi) {
      json cx{{"module", to_json(b)},
              {"inclusion", to_json(incl.map)},
              {"functional", to_json(phi.map)},
              {"trial", trial}};
      return fail(name, "NoExtension event at trial " + std::to_string(trial), cx);
    }
    if (!(psi->map * incl.map == phi.map)) {
      json cx{{"module", to_json(b)}, {"trial", trial}};
      return fail(name, "extension does not restrict exactly", cx);
    }
  }
  return pass(name, std::to_string(samples) + " extensions found, all exact");
}

CheckResult run_cogenerator(const std::string& name, RingSpec ring, int max_dim,
                            int samples, std::uint64_t seed) {
  for (int trial = 0; trial < samples; ++trial) {
    Rng rng(mix_seed(seed ^ 0xC06E, trial));
    NilModule m = random_module(rng, ring, max_dim);
    CogeneratorEmbedding emb;
    try {
      emb = cogenerator_embed(m);
    } catch (const std::exception& e) {
      return fail(name, std::string("embedding failed: ") + e.what(),
                  json{{"module", to_json(m)}, {"trial", trial}});
    }
    if (kernel(emb.embedding.map).dim() != 0)
      return fail(name, "embedding is not injective", json{{"module", to_json(m)}});
    int summands = m.dim - rank(m.x_action);
    if (emb.r > summands)
      return fail(name, "more components than cyclic summands",
                  json{{"module", to_json(m)}});
  }
  // the closed-form embedding x^j m -> x^{n-i+j} on every (n <= 4, i <= n)
  for (int n = 1; n <= 4; ++n) {
    RingSpec r(ring.k, n);
    for (int i = 1; i <= n; ++i) {
      KLinearMap e = embed_cyclic(r, i);
      Matrix expected(ring.k, n, i);
      for (int jj = 0; jj < i; ++jj) expected.set(n - i + jj, jj, 1);
      if (!(e.map == expected)) return fail(name, "embed_cyclic drifts from x^{n-i+j}");
      if (kernel(e.map).dim() != 0) return fail(name, "embed_cyclic is not injective");
    }
  }
  return pass(name, std::to_string(samples) + " modules embedded injectively");
}

CheckResult run_selfdual(const std::string& name, RingSpec ring) {
  KLinearMap f = self_dual_iso(ring);
  if (rank(f.map) != ring.n) return fail(name, "self-dual map is not bijective");
  if (!is_k_linear(f)) return fail(name, "self-dual map is not K-linear");
  return pass(name, "K ~ Hom_k(K,k), rank " + std::to_string(ring.n));
}

CheckResult run_tensortable(const std::string& name, RingSpec ring, int max_i) {
  int cap = std::min(max_i, ring.n);
  for (int i = 1; i <= cap; ++i)
    for (int j = 1; j <= cap; ++j) {
      KTensor t = tensor_K(cyclic(ring, i), cyclic(ring, j));
      int oracle = tensor_dim_oracle(cyclic(ring, i), cyclic(ring, j));
      if (t.module.dim != std::min(i, j) || oracle != std::min(i, j))
        return fail(name, "dim K/(x^" + std::to_string(i) + ") (x) K/(x^" +
                              std::to_string(j) + ") != min(i,j)");
    }
  return pass(name, "table matches min(i,j) up to " + std::to_string(cap));
}

CheckResult run_baer(const std::string& name, RingSpec ring, int samples,
                     std::uint64_t seed) {
  for (int i = 1; i <= ring.n; ++i) {
    CheckReport r = baer_adjunction_check(cyclic(ring, i));
    if (!r.ok) return fail(name, "cyclic(" + std::to_string(i) + "): " + r.detail);
  }
  for (int trial = 0; trial < samples; ++trial) {
    Rng rng(mix_seed(seed ^ 0xBAE5, trial));
    NilModule m = random_module(rng, ring, 5);
    CheckReport r = baer_adjunction_check(m);
    if (!r.ok) return fail(name, r.detail, json{{"module", to_json(m)}});
  }
  return pass(name, "hom-tensor bijection exhibited on all bases");
}

CheckResult run_appendix(const std::string& name) {
  std::vector<SituationData> situations = {situation_trivial(), situation_poset2(),
                                           situation_nonthin()};
  std::string summary;
  for (const auto& s : situations) {
    auto bad = validate_instance(s);
    if (!bad.empty()) return fail(name, s.name + ": " + bad.front());
    TheoremReport thm = check_theorem(s);
    if (!thm.ok) return fail(name, s.name + ": " + thm.failures.front());
    CorollaryReport cor = check_corollaries(s);
    if (!cor.ok) return fail(name, s.name + ": " + cor.failures.front());
    TwoAdjReport two = check_2adj(triple_from_situation(s));
    if (!two.ok) return fail(name, s.name + ": 2adj: " + two.detail);
    summary += s.name + "(" + std::to_string(thm.hom_pairs_checked) + " hom pairs) ";
  }
  for (const auto& t : {triple_identity(), triple_zero_object()}) {
    TwoAdjReport two = check_2adj(t);
    if (!two.ok) return fail(name, t.name + ": " + two.detail);
  }
  return pass(name, summary + "and canned triples verified");
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& r : results)
    if (r.status != CheckResult::Status::Pass) return false;
  return true;
}

json Report::to_json() const {
  json results_json = json::array();
  for (const auto& r : results) {
    json e{{"name", r.name},
           {"status", r.status == CheckResult::Status::Pass   ? "pass"
                      : r.status == CheckResult::Status::Fail ? "fail"
                                                              : "error"},
           {"details", r.details}};
    if (!r.counterexample.is_null()) e["counterexample"] = r.counterexample;
    if (!r.law_report.is_null()) e["report"] = r.law_report;
    results_json.push_back(e);
  }
  return json{{"version", version}, {"seed", seed}, {"context", context},
              {"results", results_json}};
}

std::string Report::emit(const std::string& format) const {
  if (format == "json") return to_json().dump(1) + "\n";
  std::ostringstream out;
  out << "chu " << version << " (seed " << seed << ")\n";
  out << "context: " << context.dump() << "\n";
  int npass = 0, nfail = 0, nerror = 0;
  for (const auto& r : results) {
    const char* tag = r.status == CheckResult::Status::Pass   ? "pass"
                      : r.status == CheckResult::Status::Fail ? "FAIL"
                                                              : "ERROR";
    (r.status == CheckResult::Status::Pass
         ? ++npass
         : r.status == CheckResult::Status::Fail ? ++nfail : ++nerror);
    out << "[" << tag << "] " << r.name;
    if (!r.details.empty()) out << " -- " << r.details;
    out << "\n";
    if (!r.counterexample.is_null())
      out << "  counterexample: " << r.counterexample.dump() << "\n";
  }
  out << "summary: " << results.size() << " checks, " << npass << " pass, " << nfail
      << " fail, " << nerror << " error\n";
  return out.str();
}

int Report::exit_code() const { return all_pass() ? 0 : 1; }

Report execute(const Script& s, const ExecOptions& opts) {
  Report rep;
  rep.seed = opts.seed;
  if (s.has_ring)
    rep.context = json{{"kind", "ring"}, {"p", s.context_p}, {"n", s.context_n}};
  else if (s.has_field)
    rep.context = json{{"kind", "field"}, {"p", s.context_p}};
  else
    rep.context = json{{"kind", "none"}};

  // bindings are evaluated sequentially; checks become independent tasks
  std::map<std::string, Value> env;
  std::optional<FieldSpec> field;
  std::optional<RingSpec> ring;
  struct Task {
    size_t slot;
    std::string name;
    std::function<CheckResult()> run;
  };
  std::vector<Task> tasks;
  size_t n_slots = 0;

  for (size_t idx = 0; idx < s.statements.size(); ++idx) {
    const Statement& st = s.statements[idx];
    const std::uint64_t stmt_seed = mix_seed(opts.seed, idx);
    switch (st.kind) {
      case Statement::Kind::Context: {
        if (st.is_ring)
          ring = RingSpec(FieldSpec(st.p), st.n);
        else
          field = FieldSpec(st.p);
        break;
      }
      case Statement::Kind::Binding: {
        if (st.op == "chu") {
          Matrix p = Matrix::from_rows(*field, st.literal_rows, st.dims[1]);
          if (p.rows() != st.dims[0])
            throw ParseError(st.line, 1, "pairing literal has the wrong row count");
          env.emplace(st.name, ChuObject{*field, st.dims[0], st.dims[1], p});
        } else if (st.op == "dual") {
          env.emplace(st.name, dual(std::get<ChuObject>(env.at(st.args[0]))));
        } else if (st.op == "S") {
          env.emplace(st.name,
                      reflect(std::get<ChuObject>(env.at(st.args[0])), ReflectSide::Separated)
                          .object);
        } else if (st.op == "E") {
          env.emplace(st.name, reflect(std::get<ChuObject>(env.at(st.args[0])),
                                       ReflectSide::Extensional)
                                   .object);
        } else if (st.op == "tensor") {
          env.emplace(st.name, tensor(std::get<ChuObject>(env.at(st.args[0])),
                                      std::get<ChuObject>(env.at(st.args[1]))));
        } else if (st.op == "hom") {
          env.emplace(st.name, internal_hom(std::get<ChuObject>(env.at(st.args[0])),
                                            std::get<ChuObject>(env.at(st.args[1]))));
        } else if (st.op == "cyclic") {
          env.emplace(st.name, cyclic(*ring, st.dims[0]));
        } else if (st.op == "presented") {
          env.emplace(st.name, make_presented(*field, st.dims, st.literal_rows));
        }
        break;
      }
      case Statement::Kind::Check: {
        std::string result_name = st.check_name;
        for (const auto& a : st.args) result_name += " " + a;
        std::function<CheckResult()> fn;
        if (is_law_name(st.check_name)) {
          LawId id = law_from_name(st.check_name);
          std::vector<ChuObject> objs;
          for (const auto& a : st.args) objs.push_back(std::get<ChuObject>(env.at(a)));
          fn = [result_name, id, objs] { return run_pinned_law(result_name, id, objs); };
        } else if (st.check_name == "involution") {
          ChuObject o = std::get<ChuObject>(env.at(st.args[0]));
          fn = [result_name, o] {
            return dual(dual(o)) == o ? pass(result_name, "byte-identical")
                                      : fail(result_name, "(T*)* != T", to_json(o));
          };
        } else if (st.check_name == "separated" || st.check_name == "extensional") {
          ChuObject o = std::get<ChuObject>(env.at(st.args[0]));
          bool want_sep = st.check_name == "separated";
          fn = [result_name, o, want_sep] {
            SepExtFlags fl = sep_ext_flags(o);
            bool got = want_sep ? fl.separated : fl.extensional;
            return got ? pass(result_name)
                       : fail(result_name, "flag is false", to_json(o));
          };
        } else if (st.check_name == "fr") {
          ChuObject o = std::get<ChuObject>(env.at(st.args[0]));
          fn = [result_name, o] {
            TheoremCheck c = check_FR_identity(o);
            return c.ok ? pass(result_name, c.detail)
                        : fail(result_name, c.detail, to_json(o));
          };
        } else if (st.check_name == "rf") {
          PresentedSpace v = std::get<PresentedSpace>(env.at(st.args[0]));
          fn = [result_name, v] {
            TheoremCheck c = check_RF_equals_sigma(v);
            return c.ok ? pass(result_name, c.detail) : fail(result_name, c.detail);
          };
        } else if (st.check_name == "endk") {
          FieldSpec f = *field;
          fn = [result_name, f] {
            TheoremCheck c = end_of_K_check(f);
            return c.ok ? pass(result_name, c.detail) : fail(result_name, c.detail);
          };
        } else if (st.check_name == "factor") {
          PresentedSpace v = std::get<PresentedSpace>(env.at(st.args[0]));
          fn = [result_name, v] { return run_factor_check(result_name, v); };
        } else if (st.check_name == "sigma") {
          PresentedSpace v = std::get<PresentedSpace>(env.at(st.args[0]));
          fn = [result_name, v] { return run_sigma_check(result_name, v); };
        } else if (st.check_name == "selfinjective") {
          RingSpec r = *ring;
          int dims = static_cast<int>(st.flags.count("dims") ? st.flags.at("dims")
                                                             : opts.default_dims);
          int samples = static_cast<int>(st.flags.count("samples") ? st.flags.at("samples")
                                                                   : opts.default_samples);
          fn = [result_name, r, dims, samples, stmt_seed] {
            return run_selfinjective(result_name, r, dims, samples, stmt_seed);
          };
        } else if (st.check_name == "cogenerator") {
          RingSpec r = *ring;
          int dims = static_cast<int>(st.flags.count("dims") ? st.flags.at("dims")
                                                             : opts.default_dims);
          int samples = static_cast<int>(st.flags.count("samples") ? st.flags.at("samples")
                                                                   : opts.default_samples);
          fn = [result_name, r, dims, samples, stmt_seed] {
            return run_cogenerator(result_name, r, dims, samples, stmt_seed);
          };
        } else if (st.check_name == "selfdual") {
          RingSpec r = *ring;
          fn = [result_name, r] { return run_selfdual(result_name, r); };
        } else if (st.check_name == "tensortable") {
          RingSpec r = *ring;
          int cap = static_cast<int>(st.flags.count("max") ? st.flags.at("max") : r.n);
          fn = [result_name, r, cap] { return run_tensortable(result_name, r, cap); };
        } else if (st.check_name == "baer") {
          RingSpec r = *ring;
          int samples = static_cast<int>(st.flags.count("samples") ? st.flags.at("samples") : 25);
          fn = [result_name, r, samples, stmt_seed] {
            return run_baer(result_name, r, samples, stmt_seed);
          };
        } else if (st.check_name == "appendix") {
          fn = [result_name] { return run_appendix(result_name); };
        } else {
          throw ParseError(st.line, 1, "unknown check '" + st.check_name + "'");
        }
        tasks.push_back({n_slots++, result_name, std::move(fn)});
        break;
      }
      case Statement::Kind::Laws: {
        FieldSpec f = *field;
        int dims = static_cast<int>(st.flags.count("dims") ? st.flags.at("dims")
                                                           : opts.default_dims);
        int samples = static_cast<int>(st.flags.count("samples") ? st.flags.at("samples")
                                                                 : opts.default_samples);
        std::vector<LawId> ids;
        if (st.check_name == "all") {
          for (int i = 0; i < 10; ++i) ids.push_back(static_cast<LawId>(i));
        } else {
          ids.push_back(law_from_name(st.check_name));
        }
        for (LawId id : ids) {
          std::string result_name = std::string("laws ") + law_name(id);
          tasks.push_back({n_slots++, result_name,
                           [result_name, id, f, dims, samples, stmt_seed] {
                             TrialSpec spec{f, dims, samples, stmt_seed};
                             return law_result(result_name, run_law(id, spec));
                           }});
        }
        break;
      }
      case Statement::Kind::Replay: {
        Counterexample cx = counterexample_from_json(json::parse(st.payload));
        std::string result_name = std::string("replay ") + law_name(cx.law);
        tasks.push_back({n_slots++, result_name, [result_name, cx] {
                           return run_pinned_law(result_name, cx.law, cx.objects);
                         }});
        break;
      }
      case Statement::Kind::Report:
        break;  // handled by the caller via report_directives
    }
  }

  // run tasks; results land in slots, so scheduling cannot affect the report
  std::vector<CheckResult> slots(n_slots);
  auto run_task = [&](const Task& t) {
    try {
      slots[t.slot] = t.run();
    } catch (const std::exception& e) {
      CheckResult r;
      r.name = t.name;
      r.status = CheckResult::Status::Error;
      r.details = e.what();
      slots[t.slot] = std::move(r);
    }
  };
  int workers = std::max(1, opts.threads);
  if (workers == 1 || tasks.size() <= 1) {
    for (const auto& t : tasks) run_task(t);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(
        std::min(static_cast<size_t>(workers), tasks.size()));
    pool.reserve(spawn);
    for (int w = 0; w < spawn; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          run_task(tasks[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  rep.results = std::move(slots);
  return rep;
}

}  // namespace chu
