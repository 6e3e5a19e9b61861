#include "chu/chu_core.hpp"

#include "chu/linsys.hpp"

namespace chu {

ChuObject::ChuObject(FieldSpec f, int a, int x, Matrix p)
    : field(f), dim_a(a), dim_x(x), pairing(std::move(p)) {
  validate_object(*this);
}

void validate_object(const ChuObject& o) {
  if (o.dim_a < 0 || o.dim_x < 0) throw std::invalid_argument("negative carrier dim");
  if (o.pairing.rows() != o.dim_a || o.pairing.cols() != o.dim_x)
    throw std::invalid_argument("pairing shape mismatch");
  if (!(o.pairing.field() == o.field)) throw std::invalid_argument("field mismatch");
}

i64 eval_pairing(const ChuObject& o, const Vec& a, const Vec& x) {
  if (static_cast<int>(a.size()) != o.dim_a || static_cast<int>(x.size()) != o.dim_x)
    throw std::invalid_argument("eval_pairing: dimension mismatch");
  Vec px = o.pairing.apply(x);
  i64 acc = 0;
  for (int i = 0; i < o.dim_a; ++i) acc = (acc + o.field.reduce(a[i]) * px[i]) % o.field.p;
  return acc;
}

std::optional<std::pair<int, int>> morphism_defect(const ChuMorphism& m) {
  if (m.f.rows() != m.target.dim_a || m.f.cols() != m.source.dim_a ||
      m.g.rows() != m.source.dim_x || m.g.cols() != m.target.dim_x)
    throw std::invalid_argument("morphism component shape mismatch");
  Matrix lhs = m.f.transpose() * m.target.pairing;
  Matrix rhs = m.source.pairing * m.g;
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

void validate_morphism(const ChuMorphism& m) {
  if (auto d = morphism_defect(m)) throw AdjointnessViolated(d->first, d->second);
}

bool is_morphism(const ChuMorphism& m) { return !morphism_defect(m).has_value(); }

ChuMorphism identity_morphism(const ChuObject& o) {
  return {o, o, Matrix::identity(o.field, o.dim_a), Matrix::identity(o.field, o.dim_x)};
}

ChuMorphism compose(const ChuMorphism& m2, const ChuMorphism& m1) {
  if (!(m1.target == m2.source)) throw std::invalid_argument("compose: boundary mismatch");
  return {m1.source, m2.target, m2.f * m1.f, m1.g * m2.g};
}

bool is_isomorphism(const ChuMorphism& m) {
  if (!is_morphism(m)) return false;
  if (m.f.rows() != m.f.cols() || m.g.rows() != m.g.cols()) return false;
  return rank(m.f) == m.f.rows() && rank(m.g) == m.g.rows();
}

ChuObject dual(const ChuObject& o) {
  return {o.field, o.dim_x, o.dim_a, o.pairing.transpose()};
}

ChuObject unit_object(FieldSpec f) {
  Matrix p(f, 1, 1);
  p.set(0, 0, 1);
  return {f, 1, 1, p};
}

ChuObject dualizing_object(FieldSpec f) { return dual(unit_object(f)); }

SepExtFlags sep_ext_flags(const ChuObject& o) {
  int r = rank(o.pairing);
  return {r == o.dim_a, r == o.dim_x};
}

Reflection reflect(const ChuObject& o, ReflectSide side) {
  if (side == ReflectSide::Separated) {
    // left kernel {a : a^T P = 0}
    Subspace lk = kernel(o.pairing.transpose());
    Matrix q = quotient_map(o.dim_a, lk);
    // induced pairing P' with q^T P' = P; solvable because each column of P,
    // as a functional on A, kills the left kernel
    auto p2 = solve_matrix(q.transpose(), o.pairing);
    if (!p2) throw std::logic_error("reflect(S): induced pairing unsolvable");
    ChuObject s{o.field, q.rows(), o.dim_x, *p2};
    ChuMorphism unit{o, s, q, Matrix::identity(o.field, o.dim_x)};
    validate_morphism(unit);
    return {s, unit};
  }
  Subspace rk = kernel(o.pairing);
  Matrix q = quotient_map(o.dim_x, rk);
  // induced pairing P'' with P = P'' q, i.e. q^T P''^T = P^T columnwise
  auto p2t = solve_matrix(q.transpose(), o.pairing.transpose());
  if (!p2t) throw std::logic_error("reflect(E): induced pairing unsolvable");
  ChuObject e{o.field, o.dim_a, q.rows(), p2t->transpose()};
  ChuMorphism counit{e, o, Matrix::identity(o.field, o.dim_a), q};
  validate_morphism(counit);
  return {e, counit};
}

Subspace hom_basis(const ChuObject& s, const ChuObject& t) {
  if (!(s.field == t.field)) throw std::invalid_argument("field mismatch");
  const FieldSpec f = s.field;
  // unknowns: F (dimB x dimA), G (dimX x dimY)
  BlockSystem sys(f, {{t.dim_a, s.dim_a}, {s.dim_x, t.dim_x}});
  // F^T * Q - P * G = 0, a dimA x dimY grid of equations
  sys.add_equation_grid(
      s.dim_a, t.dim_x,
      {{0, Matrix::identity(f, s.dim_a), t.pairing, true, 1},
       {1, s.pairing, Matrix::identity(f, t.dim_x), false, f.p - 1}});
  return sys.solution_space();
}

HomPair unvec_hom_pair(const ChuObject& s, const ChuObject& t, const Vec& v) {
  const int nf = t.dim_a * s.dim_a;
  Matrix fm(s.field, t.dim_a, s.dim_a);
  Matrix gm(s.field, s.dim_x, t.dim_x);
  for (int i = 0; i < t.dim_a; ++i)
    for (int j = 0; j < s.dim_a; ++j) fm.set(i, j, v[i * s.dim_a + j]);
  for (int i = 0; i < s.dim_x; ++i)
    for (int j = 0; j < t.dim_x; ++j) gm.set(i, j, v[nf + i * t.dim_x + j]);
  return {fm, gm};
}

Vec vec_hom_pair(const ChuObject& s, const ChuObject& t, const HomPair& p) {
  Vec v(static_cast<size_t>(t.dim_a * s.dim_a + s.dim_x * t.dim_x), 0);
  for (int i = 0; i < t.dim_a; ++i)
    for (int j = 0; j < s.dim_a; ++j) v[i * s.dim_a + j] = p.f(i, j);
  const int nf = t.dim_a * s.dim_a;
  for (int i = 0; i < s.dim_x; ++i)
    for (int j = 0; j < t.dim_x; ++j) v[nf + i * t.dim_x + j] = p.g(i, j);
  return v;
}

ChuObject internal_hom(const ChuObject& s, const ChuObject& t) {
  Subspace w = hom_basis(s, t);
  const int second = s.dim_a * t.dim_x;
  Matrix p(s.field, w.dim(), second);
  for (int k = 0; k < w.dim(); ++k) {
    HomPair hp = unvec_hom_pair(s, t, w.basis().row(k));
    // <(f,g), a (x) y> = a^T F^T Q y
    Matrix ftq = hp.f.transpose() * t.pairing;
    for (int ia = 0; ia < s.dim_a; ++ia)
      for (int iy = 0; iy < t.dim_x; ++iy)
        p.set(k, ia * t.dim_x + iy, ftq(ia, iy));
  }
  return {s.field, w.dim(), second, p};
}

ChuObject tensor(const ChuObject& s, const ChuObject& t) {
  // second carrier: morphisms s -> dual(t), i.e. pairs (f: A->Y, g: B->X)
  ChuObject td = dual(t);
  Subspace w = hom_basis(s, td);
  const int first = s.dim_a * t.dim_a;
  Matrix p(s.field, first, w.dim());
  for (int k = 0; k < w.dim(); ++k) {
    HomPair hp = unvec_hom_pair(s, td, w.basis().row(k));
    // <a (x) b, (f,g)> = <b, fa>_t = (Q * F)[b, a]
    Matrix qf = t.pairing * hp.f;
    for (int ia = 0; ia < s.dim_a; ++ia)
      for (int ib = 0; ib < t.dim_a; ++ib)
        p.set(ia * t.dim_a + ib, k, qf(ib, ia));
  }
  return {s.field, first, w.dim(), p};
}

RecoverGResult recover_g(const ChuObject& s, const ChuObject& t, const Matrix& f) {
  if (f.rows() != t.dim_a || f.cols() != s.dim_a)
    throw std::invalid_argument("recover_g: F shape mismatch");
  Matrix rhs = f.transpose() * t.pairing;
  auto g = solve_matrix(s.pairing, rhs);
  if (!g) return {RecoverGResult::Status::NotAMorphism, std::nullopt, std::nullopt};
  Subspace slack = kernel(s.pairing);
  if (slack.dim() == 0) return {RecoverGResult::Status::Unique, *g, std::nullopt};
  return {RecoverGResult::Status::NonUnique, *g, slack};
}

}  // namespace chu
