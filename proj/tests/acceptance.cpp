// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chu/fincat.hpp"
#include "chu/json_io.hpp"
#include "chu/laws.hpp"
#include "chu/modring.hpp"
#include "chu/script.hpp"
#include "chu/topo.hpp"
#include "corpus.hpp"

using namespace chu;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, bool ok, const std::string& what, double elapsed) {
  std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id,
              what.c_str(), elapsed);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// --- 1 & 2: the law suites -------------------------------------------------

void criterion_1_and_2() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (i64 p : {2, 3, 5}) {
    for (int law = 0; law < 10 && ok; ++law) {
      TrialSpec spec{FieldSpec(p), 4, 200,
                     0x1000 * static_cast<std::uint64_t>(p) + law};
      LawReport rep = run_law(static_cast<LawId>(law), spec);
      if (!rep.pass()) {
        ok = false;
        detail = std::string("law ") + law_name(rep.law) + " over F_" +
                 std::to_string(p) + ": " + rep.failures.front().detail;
      }
    }
  }
  double t = seconds_since(start);
  bool in_time = t < 30.0;
  report(1, ok && in_time,
         "L1..L10 over p in {2,3,5}, dims <= 4, 200 samples each, zero failures" +
             (detail.empty() ? "" : " -- " + detail) +
             (in_time ? "" : " -- OVER TIME BUDGET"),
         t);

  // criterion 2 re-runs the closure law with its own seeds and verifies the
  // constructed objects trialwise
  start = Clock::now();
  bool ok2 = true;
  for (i64 p : {2, 3, 5}) {
    Rng rng(0x2000 + static_cast<std::uint64_t>(p));
    for (int trial = 0; trial < 200 && ok2; ++trial) {
      ChuObject s = random_sep_ext(rng, FieldSpec(p), 4);
      ChuObject u = random_sep_ext(rng, FieldSpec(p), 4);
      SepExtFlags h = sep_ext_flags(internal_hom(s, u));
      SepExtFlags x = sep_ext_flags(tensor(s, u));
      ok2 = h.separated && h.extensional && x.separated && x.extensional;
    }
  }
  report(2, ok2, "hom and tensor of 200 sep+ext pairs per field stay sep+ext",
         seconds_since(start));
}

// --- 3: the main theorem ---------------------------------------------------

void criterion_3() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (i64 p : {2, 3, 5}) {
    Rng rng(0x3000 + static_cast<std::uint64_t>(p));
    for (int trial = 0; trial < 100 && ok; ++trial) {
      ChuObject o = random_sep_ext(rng, FieldSpec(p), 4);
      TheoremCheck c = check_FR_identity(o);
      if (!c.ok) {
        ok = false;
        detail = "FR: " + c.detail;
      }
    }
    for (int trial = 0; trial < 100 && ok; ++trial) {
      int m = 1 + static_cast<int>(rng.below(3));
      std::vector<int> factors;
      int total = 0;
      for (int i = 0; i < m; ++i) {
        factors.push_back(1 + static_cast<int>(rng.below(3)));
        total += factors.back();
      }
      std::vector<Vec> gens;
      int g = static_cast<int>(rng.below(4));
      for (int i = 0; i < g; ++i) {
        Vec v(total);
        for (auto& x : v) x = rng.below(p);
        gens.push_back(v);
      }
      TheoremCheck c = check_RF_equals_sigma(make_presented(FieldSpec(p), factors, gens));
      if (!c.ok) {
        ok = false;
        detail = "RF=sigma: " + c.detail;
      }
    }
    if (ok && !end_of_K_check(FieldSpec(p)).ok) {
      ok = false;
      detail = "End(K) over F_" + std::to_string(p);
    }
  }
  report(3, ok,
         "FR identity on 100 sep+ext objects, RF = sigma on 100 presented spaces, "
         "End(K) one-dimensional, per field" + (detail.empty() ? "" : " -- " + detail),
         seconds_since(start));
}

// --- 4: the factorization lemma, exhaustive corpus + seeded cases -----------

void criterion_4(std::vector<PresentedSpace>* corpus_out) {
  auto start = Clock::now();
  bool ok = true;
  int cases = 0;
  std::vector<PresentedSpace> corpus;
  for (int m = 0; m <= 5 && ok; ++m) {
    for (const Subspace& sub : corpus::all_subspaces(2, m)) {
      PresentedSpace v{FieldSpec(2), std::vector<int>(m, 1), sub};
      corpus.push_back(v);
      i64 total = i64{1} << sub.dim();
      for (i64 code = 0; code < total && ok; ++code) {
        FunctionalP phi;
        phi.coeffs.assign(sub.dim(), 0);
        for (int i = 0; i < sub.dim(); ++i) phi.coeffs[i] = (code >> i) & 1;
        FactorizationResult fr = factor_functional(v, phi);
        if (fr.j != minimal_j_oracle(v, phi) || !fr.certified) ok = false;
        Vec psi = extend_functional(v, phi);
        for (int r = 0; r < sub.dim() && ok; ++r) {
          Vec row = sub.basis().row(r);
          i64 acc = 0;
          for (int j = 0; j < v.ambient_dim(); ++j) acc = (acc + psi[j] * row[j]) % 2;
          if (acc != phi.coeffs[r]) ok = false;
        }
        ++cases;
      }
    }
  }
  // 100 seeded larger cases (multi-dimensional factors)
  Rng rng(0x4000);
  for (int trial = 0; trial < 100 && ok; ++trial) {
    int m = 1 + static_cast<int>(rng.below(4));
    std::vector<int> factors;
    int total = 0;
    for (int i = 0; i < m; ++i) {
      factors.push_back(1 + static_cast<int>(rng.below(3)));
      total += factors.back();
    }
    std::vector<Vec> gens;
    for (int i = 0; i < 3; ++i) {
      Vec v(total);
      for (auto& x : v) x = rng.below(2);
      gens.push_back(v);
    }
    PresentedSpace v = make_presented(FieldSpec(2), factors, gens);
    FunctionalP phi;
    phi.coeffs.resize(v.dim());
    for (auto& c : phi.coeffs) c = rng.below(2);
    FactorizationResult fr = factor_functional(v, phi);
    if (fr.j != minimal_j_oracle(v, phi)) ok = false;
    ++cases;
  }
  report(4, ok,
         "factor_functional matches the oracle (J and tie-break) and restricts "
         "exactly on " + std::to_string(cases) + " cases",
         seconds_since(start));
  *corpus_out = std::move(corpus);
}

// --- 5: self-injectivity ---------------------------------------------------

void criterion_5() {
  auto start = Clock::now();
  bool ok = true;
  int campaigns = 0;
  for (i64 p : {2, 3}) {
    for (int n : {2, 3, 4}) {
      RingSpec ring(FieldSpec(p), n);
      Rng rng(0x5000 + 16 * static_cast<std::uint64_t>(p) + n);
      int done = 0;
      while (done < 100 && ok) {
        NilModule b = random_module(rng, ring, 6);
        if (b.dim == 0) continue;
        KLinearMap incl = random_submodule_inclusion(rng, b, 3);
        KLinearMap phi = random_functional(rng, incl.source);
        auto psi = extend_hom(incl, phi);
        if (!psi || !(psi->map * incl.map == phi.map)) ok = false;
        ++done;
        ++campaigns;
      }
    }
  }
  report(5, ok,
         "extend_hom succeeded and restricted exactly on " +
             std::to_string(campaigns) + " seeded inclusions (zero NoExtension)",
         seconds_since(start));
}

// --- 6: cogenerator ----------------------------------------------------------

void criterion_6() {
  auto start = Clock::now();
  bool ok = true;
  for (i64 p : {2, 3}) {
    for (int n : {2, 3, 4}) {
      RingSpec ring(FieldSpec(p), n);
      Rng rng(0x6000 + 16 * static_cast<std::uint64_t>(p) + n);
      for (int trial = 0; trial < 100 && ok; ++trial) {
        NilModule m = random_module(rng, ring, 6);
        CogeneratorEmbedding emb;
        try {
          emb = cogenerator_embed(m);
        } catch (const std::exception&) {
          ok = false;
          break;
        }
        if (kernel(emb.embedding.map).dim() != 0) ok = false;
        if (emb.r > m.dim - rank(m.x_action)) ok = false;
      }
    }
  }
  // the embedding formula on all (n <= 4, i <= n)
  for (i64 p : {2, 3}) {
    for (int n = 1; n <= 4 && ok; ++n) {
      RingSpec ring(FieldSpec(p), n);
      for (int i = 1; i <= n && ok; ++i) {
        KLinearMap e = embed_cyclic(ring, i);
        Matrix expected(ring.k, n, i);
        for (int j = 0; j < i; ++j) expected.set(n - i + j, j, 1);
        if (!(e.map == expected)) ok = false;
        if (kernel(e.map).dim() != 0) ok = false;
      }
    }
  }
  report(6, ok,
         "cogenerator_embed injective with r <= cyclic summands on 600 modules; "
         "embed_cyclic matches x^{n-i+j}",
         seconds_since(start));
}

// --- 7: self-dual iso + tensor table -----------------------------------------

void criterion_7() {
  auto start = Clock::now();
  bool ok = true;
  for (i64 p : {2, 3, 5}) {
    for (int n = 1; n <= 6 && ok; ++n) {
      KLinearMap f = self_dual_iso(RingSpec(FieldSpec(p), n));
      if (rank(f.map) != n || !is_k_linear(f)) ok = false;
    }
  }
  for (i64 p : {2, 3, 5}) {
    for (int n = 1; n <= 4 && ok; ++n) {
      RingSpec ring(FieldSpec(p), n);
      for (int i = 1; i <= n && ok; ++i)
        for (int j = 1; j <= n && ok; ++j) {
          int got = tensor_K(cyclic(ring, i), cyclic(ring, j)).module.dim;
          int oracle = tensor_dim_oracle(cyclic(ring, i), cyclic(ring, j));
          if (got != std::min(i, j) || oracle != std::min(i, j)) ok = false;
        }
    }
  }
  report(7, ok,
         "self_dual_iso has rank n and commutes with x (n <= 6); tensor table "
         "equals min(i,j) against the bilinear-form oracle (n <= 4)",
         seconds_since(start));
}

// --- 8: the appendix ----------------------------------------------------------

void criterion_8() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& s : {situation_trivial(), situation_poset2(), situation_nonthin()}) {
    auto bad = validate_instance(s);
    if (!bad.empty()) {
      ok = false;
      detail = s.name + ": " + bad.front();
      break;
    }
    TheoremReport thm = check_theorem(s);
    if (!thm.ok) {
      ok = false;
      detail = s.name + ": theorem";
      break;
    }
    TwoAdjReport two = check_2adj(triple_from_situation(s));
    if (!two.ok) {
      ok = false;
      detail = s.name + ": 2adj";
      break;
    }
    CorollaryReport cor = check_corollaries(s);
    if (!cor.ok) {
      ok = false;
      detail = s.name + ": " + cor.failures.front();
      break;
    }
  }
  if (ok) {
    for (const auto& t : {triple_identity(), triple_zero_object()})
      if (!check_2adj(t).ok) ok = false;
  }
  double t = seconds_since(start);
  bool in_time = t < 5.0;
  report(8, ok && in_time,
         "three canned instances: validate, mu/nu inverse exhaustively, 2adj "
         "biconditional, TI -| SJ equivalence" +
             (detail.empty() ? "" : " -- " + detail) +
             (in_time ? "" : " -- OVER TIME BUDGET"),
         t);
}

// --- 9: topo-model propositions ------------------------------------------------

void criterion_9(const std::vector<PresentedSpace>& corpus) {
  auto start = Clock::now();
  bool ok = true;
  FieldSpec f(2);

  // weak-iso closure under finite products, exhaustive for total dim <= 4:
  // invertible maps enumerated on spaces drawn from subspaces of F_2^m, m <= 2
  std::vector<PresentedSpace> pool;
  for (int m = 0; m <= 2; ++m)
    for (const Subspace& s : corpus::all_subspaces(2, m))
      pool.push_back({f, std::vector<int>(m, 1), s});

  auto all_grids = [&](int rows, int cols) {
    std::vector<Matrix> out;
    i64 total = i64{1} << (rows * cols);
    for (i64 code = 0; code < total; ++code) {
      Matrix m(f, rows, cols);
      for (int i = 0; i < rows * cols; ++i) m.set(i / cols, i % cols, (code >> i) & 1);
      out.push_back(m);
    }
    return out;
  };

  for (const auto& v1 : pool)
    for (const auto& v2 : pool) {
      if (v1.dim() + v2.dim() > 4) continue;
      for (const Matrix& m1 : all_grids(v1.dim(), v1.dim())) {
        if (rank(m1) != v1.dim()) continue;
        for (const Matrix& m2 : all_grids(v2.dim(), v2.dim())) {
          if (rank(m2) != v2.dim()) continue;
          PresentedSpace pv = product({v1, v2});
          Matrix block(f, pv.dim(), pv.dim());
          for (int i = 0; i < m1.rows(); ++i)
            for (int j = 0; j < m1.cols(); ++j) block.set(i, j, m1(i, j));
          for (int i = 0; i < m2.rows(); ++i)
            for (int j = 0; j < m2.cols(); ++j)
              block.set(m1.rows() + i, m1.cols() + j, m2(i, j));
          if (!is_weak_iso({pv, pv, block})) ok = false;
        }
      }
    }

  // pullback stability, exhaustive for total dim <= 4
  for (const auto& w : pool)
    for (const auto& v : pool)
      for (const auto& vp : pool) {
        if (w.dim() + v.dim() + vp.dim() > 4) continue;
        if (vp.dim() != v.dim()) continue;
        for (const Matrix& fm : all_grids(v.dim(), w.dim()))
          for (const Matrix& gm : all_grids(v.dim(), vp.dim())) {
            if (rank(gm) != gm.rows() || gm.rows() != gm.cols()) continue;
            PullbackResult pr = pullback_weak_iso({w, v, fm}, {vp, v, gm});
            if (!pr.weak_iso_flag) ok = false;
          }
      }

  // sigma idempotence on the criterion-4 corpus
  for (const auto& v : corpus) {
    PresentedSpace s1 = sigma(v);
    if (!(sigma(s1) == s1)) ok = false;
    if (!is_weak_iso(sigma_unit(v))) ok = false;
  }

  report(9, ok,
         "weak isos closed under products and pullbacks (exhaustive, total dim "
         "<= 4); sigma idempotent on the criterion-4 corpus",
         seconds_since(start));
}

// --- 10: the CLI golden suite ----------------------------------------------------

int run_cli(const std::string& cli, const std::string& args, const std::string& out_file) {
  std::string cmd = cli + " " + args + " > " + out_file + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  if (rc < 0) return -1;
  return WEXITSTATUS(rc);
}

void criterion_10(const std::string& cli, const std::string& golden) {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;

  auto check = [&](bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  };

  int rc = run_cli(cli, golden + "/chu_field.chu", "/tmp/acc_field.json");
  check(rc == 0, "field script exit code " + std::to_string(rc));
  check(slurp("/tmp/acc_field.json") == slurp(golden + "/chu_field.json"),
        "field report drifted from the golden bytes");

  rc = run_cli(cli, golden + "/ring.chu", "/tmp/acc_ring.json");
  check(rc == 0, "ring script exit code " + std::to_string(rc));
  check(slurp("/tmp/acc_ring.json") == slurp(golden + "/ring.json"),
        "ring report drifted from the golden bytes");

  rc = run_cli(cli, golden + "/fail_law.chu", "/tmp/acc_fail.json");
  check(rc == 1, "failure fixture exit code " + std::to_string(rc));
  check(slurp("/tmp/acc_fail.json") == slurp(golden + "/fail_law.json"),
        "failure report drifted from the golden bytes");

  // the counterexample replays to the same failure
  try {
    json fail_rep = json::parse(slurp("/tmp/acc_fail.json"));
    json cx = fail_rep.at("results").at(0).at("counterexample");
    std::ofstream replay("/tmp/acc_replay.chu");
    replay << "field 2\nreplay " << cx.dump() << "\nreport json\n";
    replay.close();
    rc = run_cli(cli, "/tmp/acc_replay.chu", "/tmp/acc_replay.json");
    check(rc == 1, "replay exit code " + std::to_string(rc));
    json replay_rep = json::parse(slurp("/tmp/acc_replay.json"));
    check(replay_rep.at("results").at(0).at("status") == "fail", "replay did not fail");
    check(replay_rep.at("results").at(0).at("report").at("failures").at(0).at("detail") ==
              fail_rep.at("results").at(0).at("report").at("failures").at(0).at("detail"),
          "replay failure differs from the original");
  } catch (const std::exception& e) {
    check(false, std::string("replay flow: ") + e.what());
  }

  rc = run_cli(cli, golden + "/malformed.chu", "/tmp/acc_malformed.out");
  check(rc == 2, "malformed script exit code " + std::to_string(rc));

  // an unwritable report path is an I/O error
  {
    std::ofstream io_script("/tmp/acc_iofail.chu");
    io_script << "field 2\nA := chu 1 1 [[1]]\ncheck involution A\n"
              << "report json /nonexistent-dir/report.json\n";
  }
  rc = run_cli(cli, "/tmp/acc_iofail.chu", "/tmp/acc_iofail.out");
  check(rc == 2, "unwritable report path exit code " + std::to_string(rc));

  // byte-identical across thread configurations
  rc = run_cli(cli, golden + "/chu_field.chu --threads 1", "/tmp/acc_t1.json");
  check(rc == 0, "threads=1 run failed");
  rc = run_cli(cli, golden + "/chu_field.chu --threads 4", "/tmp/acc_t4.json");
  check(rc == 0, "threads=4 run failed");
  check(slurp("/tmp/acc_t1.json") == slurp("/tmp/acc_t4.json"),
        "reports differ across thread configurations");

  report(10, ok,
         "CLI golden suite: byte-stable reports, exit codes 0/1/2, replayable "
         "counterexample, thread-count independence" +
             (detail.empty() ? "" : " -- " + detail),
         seconds_since(start));
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : CLI_BINARY;
  std::string golden = argc > 2 ? argv[2] : GOLDEN_DIR;

  auto start = Clock::now();
  criterion_1_and_2();
  criterion_3();
  std::vector<PresentedSpace> corpus;
  criterion_4(&corpus);
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9(corpus);
  criterion_10(cli, golden);
  double total = seconds_since(start);
  std::printf("acceptance total: %.2fs, %d criterion failure(s)\n", total, g_failures);
  if (total >= 60.0) {
    std::printf("[FAIL] full-suite runtime budget exceeded (60s)\n");
    ++g_failures;
  }
  return g_failures;
}
