#include <doctest.h>

#include "chu/matrix.hpp"
#include "chu/rng.hpp"

using namespace chu;

namespace {

Matrix mk(i64 p, const std::vector<Vec>& rows, int cols = -1) {
  return Matrix::from_rows(FieldSpec(p), rows, cols);
}

// every vector of F_p^n, for brute-force comparisons
std::vector<Vec> all_vectors(i64 p, int n) {
  std::vector<Vec> out;
  i64 total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (i64 code = 0; code < total; ++code) {
    Vec v(n, 0);
    i64 c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = c % p;
      c /= p;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("field modulus validation") {
  CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(0), std::invalid_argument);
  CHECK_NOTHROW(FieldSpec(2));
  CHECK_NOTHROW(FieldSpec(7919));
}

TEST_CASE("field arithmetic") {
  FieldSpec f(5);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.sub(1, 3) == 3);
  CHECK(f.mul(3, 4) == 2);
  CHECK(f.inv(2) == 3);
  CHECK(f.inv(4) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.reduce(-1) == 4);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("rref canonical forms") {
  CHECK(rref(mk(2, {{1, 1}, {1, 1}})) == mk(2, {{1, 1}}));
  CHECK(rref(mk(2, {{0, 1}, {1, 0}})) == mk(2, {{1, 0}, {0, 1}}));
  CHECK(rref(mk(5, {{2, 4}, {1, 2}})) == mk(5, {{1, 2}}));
}

TEST_CASE("rref is idempotent and rank-preserving: exhaustive 2x2 over F_2") {
  for (int code = 0; code < 16; ++code) {
    Matrix m(FieldSpec(2), 2, 2);
    for (int k = 0; k < 4; ++k) m.set(k / 2, k % 2, (code >> k) & 1);
    Matrix r = rref(m);
    CHECK(rref(r) == r);
    CHECK(r.rows() == rank(m));
    // row space preserved
    Subspace s1 = Subspace::from_matrix_rows(m);
    Subspace s2 = Subspace::from_matrix_rows(r);
    CHECK(s1 == s2);
  }
}

TEST_CASE("rref randomized up to 6x6 over p in {2,3,5}") {
  Rng rng(11);
  for (i64 p : {2, 3, 5}) {
    FieldSpec f(p);
    for (int trial = 0; trial < 50; ++trial) {
      int r = static_cast<int>(rng.below(7));
      int c = static_cast<int>(rng.below(7));
      Matrix m = random_matrix(rng, f, r, c);
      Matrix rr = rref(m);
      CHECK(rref(rr) == rr);
      CHECK(rr.rows() == rank(m));
      CHECK(Subspace::from_matrix_rows(m) == Subspace::from_matrix_rows(rr));
    }
  }
}

TEST_CASE("kernel basics") {
  CHECK(kernel(Matrix::identity(FieldSpec(3), 2)).dim() == 0);
  Subspace k = kernel(mk(2, {{1, 1}}));
  CHECK(k.dim() == 1);
  CHECK(k.contains(Vec{1, 1}));
  CHECK(kernel(Matrix(FieldSpec(5), 2, 3)) == Subspace::full(FieldSpec(5), 3));
}

TEST_CASE("rank-nullity on random matrices") {
  Rng rng(12);
  for (i64 p : {2, 3, 5}) {
    FieldSpec f(p);
    for (int trial = 0; trial < 40; ++trial) {
      int r = static_cast<int>(rng.below(6));
      int c = static_cast<int>(rng.below(6));
      Matrix m = random_matrix(rng, f, r, c);
      CHECK(kernel(m).dim() + rank(m) == c);
      // kernel vectors are genuine
      Subspace k = kernel(m);
      for (int i = 0; i < k.dim(); ++i) {
        Vec im = m.apply(k.basis().row(i));
        CHECK(std::all_of(im.begin(), im.end(), [](i64 v) { return v == 0; }));
      }
    }
  }
}

TEST_CASE("solve basics") {
  auto s1 = solve(Matrix::identity(FieldSpec(3), 2), Vec{1, 2});
  REQUIRE(s1.has_value());
  CHECK(*s1 == Vec{1, 2});

  auto s2 = solve(mk(2, {{1, 1}}), Vec{1});
  REQUIRE(s2.has_value());
  CHECK(*s2 == Vec{1, 0});  // free variable zeroed

  CHECK(!solve(mk(2, {{0, 0}}), Vec{1}).has_value());
  CHECK_THROWS_AS(solve(mk(2, {{1, 1}}), Vec{1, 0}), std::invalid_argument);
}

TEST_CASE("solve returns exact solutions on random systems") {
  Rng rng(13);
  FieldSpec f(5);
  for (int trial = 0; trial < 60; ++trial) {
    int r = static_cast<int>(rng.below(5)) + 1;
    int c = static_cast<int>(rng.below(5)) + 1;
    Matrix m = random_matrix(rng, f, r, c);
    Vec x(c);
    for (auto& v : x) v = rng.below(f.p);
    Vec b = m.apply(x);
    auto got = solve(m, b);
    REQUIRE(got.has_value());
    CHECK(m.apply(*got) == b);
  }
}

TEST_CASE("kron basics and laws") {
  CHECK(kron(mk(5, {{3}}), mk(5, {{4}})) == mk(5, {{2}}));
  FieldSpec f2(2);
  CHECK(kron(Matrix::identity(f2, 2), Matrix::identity(f2, 2)) ==
        Matrix::identity(f2, 4));
  CHECK(kron(mk(2, {{1, 1}}), mk(2, {{1}, {1}})) == mk(2, {{1, 1}, {1, 1}}));

  Rng rng(14);
  FieldSpec f(3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, f, 1 + rng.below(3), 1 + rng.below(3));
    Matrix b = random_matrix(rng, f, 1 + rng.below(3), 1 + rng.below(3));
    Matrix c = random_matrix(rng, f, 1 + rng.below(2), 1 + rng.below(2));
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    CHECK(rank(kron(a, b)) == rank(a) * rank(b));
  }
  CHECK_THROWS_AS(kron(mk(2, {{1}}), mk(3, {{1}})), std::invalid_argument);
}

TEST_CASE("pullback_pair basics") {
  FieldSpec f2(2);
  Subspace diag = pullback_pair(Matrix::identity(f2, 1), Matrix::identity(f2, 1));
  CHECK(diag.dim() == 1);
  CHECK(diag.contains(Vec{1, 1}));

  Subspace full = pullback_pair(Matrix(f2, 1, 1), Matrix(f2, 1, 1));
  CHECK(full == Subspace::full(f2, 2));

  FieldSpec f3(3);
  Subspace right = pullback_pair(Matrix::identity(f3, 1), Matrix(f3, 1, 1));
  CHECK(right.dim() == 1);
  CHECK(right.contains(Vec{0, 1}));
  CHECK(!right.contains(Vec{1, 0}));

  CHECK_THROWS_AS(pullback_pair(Matrix(f2, 2, 1), Matrix(f2, 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("pullback_pair equals brute force for total dim <= 8 over F_2") {
  Rng rng(15);
  FieldSpec f(2);
  for (int trial = 0; trial < 30; ++trial) {
    int da = static_cast<int>(rng.below(4));
    int db = static_cast<int>(rng.below(4));
    int dc = static_cast<int>(rng.below(3));
    Matrix fm = random_matrix(rng, f, dc, da);
    Matrix gm = random_matrix(rng, f, dc, db);
    Subspace got = pullback_pair(fm, gm);
    std::vector<Vec> good;
    for (const Vec& a : all_vectors(2, da))
      for (const Vec& b : all_vectors(2, db)) {
        if (fm.apply(a) != gm.apply(b)) continue;
        Vec ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        good.push_back(ab);
      }
    CHECK(got == Subspace::from_generators(f, da + db, good));
  }
}

TEST_CASE("quotient_map basics") {
  FieldSpec f2(2);
  CHECK(quotient_map(2, Subspace(f2, 2)) == Matrix::identity(f2, 2));
  CHECK(quotient_map(2, Subspace::full(f2, 2)).rows() == 0);
  // pivot-complement rule on span{(1,1)}: the plain pivot projection [[1,0]]
  // would not kill (1,1); the rule yields [[1,1]], whose kernel is the span.
  Matrix q = quotient_map(2, Subspace::from_generators(f2, 2, {{1, 1}}));
  CHECK(q == mk(2, {{1, 1}}));
}

TEST_CASE("quotient_map kernel is exactly the subspace") {
  Rng rng(16);
  for (i64 p : {2, 3, 5}) {
    FieldSpec f(p);
    for (int trial = 0; trial < 40; ++trial) {
      int n = static_cast<int>(rng.below(6));
      int g = static_cast<int>(rng.below(4));
      std::vector<Vec> gens;
      for (int i = 0; i < g; ++i) {
        Vec v(n);
        for (auto& x : v) x = rng.below(p);
        gens.push_back(v);
      }
      Subspace s = Subspace::from_generators(f, n, gens);
      Matrix q = quotient_map(n, s);
      CHECK(q.rows() == n - s.dim());
      CHECK(rank(q) == q.rows());
      CHECK(kernel(q) == s);
    }
  }
}

TEST_CASE("subspace meet, join, contains") {
  FieldSpec f2(2);
  Subspace u = Subspace::from_generators(f2, 2, {{1, 0}});
  Subspace v = Subspace::from_generators(f2, 2, {{0, 1}});
  CHECK(u.meet(v).dim() == 0);
  CHECK(u.join(v) == Subspace::full(f2, 2));
  CHECK(u.meet(u) == u);
  CHECK(u.join(u) == u);
  CHECK(u.contains(u));
  CHECK(!u.contains(v));

  FieldSpec f5(5);
  Subspace a = Subspace::from_generators(f5, 2, {{1, 1}});
  Subspace b = Subspace::from_generators(f5, 2, {{1, 2}});
  CHECK(a.meet(b).dim() == 0);
  CHECK(a.join(b) == Subspace::full(f5, 2));

  CHECK_THROWS_AS(u.meet(Subspace::from_generators(f2, 3, {{1, 0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("subspace coordinates and equality semantics") {
  FieldSpec f5(5);
  Subspace s = Subspace::from_generators(f5, 3, {{1, 2, 0}, {0, 0, 1}});
  auto c = s.coordinates(Vec{2, 4, 3});
  REQUIRE(c.has_value());
  CHECK(*c == Vec{2, 3});
  CHECK(!s.coordinates(Vec{0, 1, 0}).has_value());
  // canonical form makes equality structural
  Subspace t = Subspace::from_generators(f5, 3, {{2, 4, 3}, {0, 0, 2}});
  CHECK(s == t);
}

TEST_CASE("zero-dimensional shapes are first-class") {
  FieldSpec f2(2);
  Matrix empty(f2, 0, 3);
  CHECK(rref(empty) == empty);
  CHECK(kernel(empty) == Subspace::full(f2, 3));
  Matrix zero_cols(f2, 3, 0);
  CHECK(kernel(zero_cols).ambient_dim() == 0);
  CHECK((empty * zero_cols).rows() == 0);
  CHECK((empty * zero_cols).cols() == 0);
  Subspace z(f2, 0);
  CHECK(quotient_map(0, z).rows() == 0);
  auto s = solve(zero_cols, Vec{0, 0, 0});
  REQUIRE(s.has_value());
  CHECK(s->empty());
}

TEST_CASE("inverse") {
  FieldSpec f5(5);
  Matrix m = mk(5, {{1, 2}, {3, 4}});
  auto mi = inverse(m);
  REQUIRE(mi.has_value());
  CHECK((m * *mi).is_identity());
  CHECK(!inverse(mk(5, {{1, 2}, {2, 4}})).has_value());
}

}  // TEST_SUITE
