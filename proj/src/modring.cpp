#include "chu/modring.hpp"

#include <algorithm>

#include "chu/linsys.hpp"

namespace chu {

namespace {

Matrix matrix_power(const Matrix& m, int e) {
  Matrix acc = Matrix::identity(m.field(), m.rows());
  for (int i = 0; i < e; ++i) acc = acc * m;
  return acc;
}

// smallest l >= 0 with X^l = 0
int nilpotency_index(const Matrix& x) {
  Matrix acc = Matrix::identity(x.field(), x.rows());
  int l = 0;
  while (!acc.is_zero()) {
    acc = acc * x;
    ++l;
    if (l > x.rows() + 1) throw NilpotencyViolated();
  }
  return l;
}

}  // namespace

NilModule make_module(RingSpec ring, Matrix x_action) {
  NilModule m{ring, x_action.rows(), std::move(x_action)};
  validate_module(m);
  return m;
}

void validate_module(const NilModule& m) {
  if (m.x_action.rows() != m.dim || m.x_action.cols() != m.dim)
    throw std::invalid_argument("x-action shape mismatch");
  if (!(m.x_action.field() == m.ring.k)) throw std::invalid_argument("field mismatch");
  if (!matrix_power(m.x_action, m.ring.n).is_zero()) throw NilpotencyViolated();
}

NilModule cyclic(RingSpec ring, int i) {
  if (i < 1 || i > ring.n) throw std::invalid_argument("cyclic order out of range");
  Matrix x(ring.k, i, i);
  for (int j = 0; j + 1 < i; ++j) x.set(j + 1, j, 1);  // x: basis_j -> basis_{j+1}
  return {ring, i, x};
}

NilModule direct_sum(const NilModule& a, const NilModule& b) {
  if (!(a.ring == b.ring)) throw std::invalid_argument("ring mismatch");
  Matrix x(a.ring.k, a.dim + b.dim, a.dim + b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) x.set(i, j, a.x_action(i, j));
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j) x.set(a.dim + i, a.dim + j, b.x_action(i, j));
  return {a.ring, a.dim + b.dim, x};
}

NilModule free_power(RingSpec ring, int r) {
  NilModule acc{ring, 0, Matrix(ring.k, 0, 0)};
  for (int i = 0; i < r; ++i) acc = direct_sum(acc, cyclic(ring, ring.n));
  return acc;
}

bool is_k_linear(const KLinearMap& f) {
  if (f.map.rows() != f.target.dim || f.map.cols() != f.source.dim) return false;
  return f.map * f.source.x_action == f.target.x_action * f.map;
}

void validate_k_linear(const KLinearMap& f) {
  if (!is_k_linear(f)) throw std::invalid_argument("map does not commute with the x-action");
}

Subspace hom_K_basis(const NilModule& m1, const NilModule& m2) {
  if (!(m1.ring == m2.ring)) throw std::invalid_argument("ring mismatch");
  const FieldSpec f = m1.ring.k;
  BlockSystem sys(f, {{m2.dim, m1.dim}});
  sys.add_equation_grid(
      m2.dim, m1.dim,
      {{0, Matrix::identity(f, m2.dim), m1.x_action, false, 1},
       {0, m2.x_action, Matrix::identity(f, m1.dim), false, f.p - 1}});
  return sys.solution_space();
}

NilModule dual_module(const NilModule& m) {
  return {m.ring, m.dim, m.x_action.transpose()};
}

KLinearMap self_dual_iso(RingSpec ring) {
  Matrix anti(ring.k, ring.n, ring.n);
  for (int i = 0; i < ring.n; ++i) anti.set(ring.n - 1 - i, i, 1);
  KLinearMap f{cyclic(ring, ring.n), dual_module(cyclic(ring, ring.n)), anti};
  validate_k_linear(f);
  return f;
}

std::optional<KLinearMap> extend_hom(const KLinearMap& incl, const KLinearMap& phi) {
  if (!(incl.source == phi.source)) throw std::invalid_argument("extend_hom: source mismatch");
  if (rank(incl.map) != incl.source.dim)
    throw std::invalid_argument("extend_hom: inclusion is not injective");
  const NilModule& b = incl.target;
  const NilModule& k_mod = phi.target;
  const FieldSpec f = b.ring.k;
  BlockSystem sys(f, {{k_mod.dim, b.dim}});
  // K-linearity: psi X_B - X_K psi = 0
  sys.add_equation_grid(
      k_mod.dim, b.dim,
      {{0, Matrix::identity(f, k_mod.dim), b.x_action, false, 1},
       {0, k_mod.x_action, Matrix::identity(f, b.dim), false, f.p - 1}});
  // restriction: psi * incl = phi
  sys.add_equation_grid(
      k_mod.dim, incl.source.dim,
      {{0, Matrix::identity(f, k_mod.dim), incl.map, false, 1}}, &phi.map);
  auto sol = sys.particular_solution();
  if (!sol) return std::nullopt;
  KLinearMap psi{b, k_mod, sys.extract_block(*sol, 0)};
  validate_k_linear(psi);
  return psi;
}

KLinearMap embed_cyclic(RingSpec ring, int i) {
  if (i < 1 || i > ring.n) throw std::invalid_argument("embed_cyclic: order out of range");
  Matrix m(ring.k, ring.n, i);
  for (int j = 0; j < i; ++j) m.set(ring.n - i + j, j, 1);  // x^j m -> x^{n-i+j}
  KLinearMap f{cyclic(ring, i), cyclic(ring, ring.n), m};
  validate_k_linear(f);
  return f;
}

CogeneratorEmbedding cogenerator_embed(const NilModule& m) {
  const FieldSpec f = m.ring.k;
  const int n = m.ring.n;

  CogeneratorEmbedding out;
  std::vector<Matrix> components;  // each n x m.dim

  NilModule cur = m;
  Matrix pi = Matrix::identity(f, m.dim);  // projection M -> current stage
  while (cur.dim > 0) {
    int l = nilpotency_index(cur.x_action);
    // a generator of maximal order: a basis vector not killed by X^{l-1}
    Matrix xl1 = matrix_power(cur.x_action, l - 1);
    int gen = -1;
    for (int j = 0; j < cur.dim && gen < 0; ++j) {
      Vec col = xl1.col(j);
      if (!std::all_of(col.begin(), col.end(), [](i64 v) { return v == 0; })) gen = j;
    }
    if (gen < 0) throw std::logic_error("cogenerator_embed: no maximal-order generator");

    // Krylov chain v, Xv, ..., X^{l-1}v: the inclusion of cyclic(l)
    Matrix chain(f, cur.dim, l);
    Vec v(cur.dim, 0);
    v[gen] = 1;
    for (int t = 0; t < l; ++t) {
      for (int r = 0; r < cur.dim; ++r) chain.set(r, t, v[r]);
      v = cur.x_action.apply(v);
    }
    KLinearMap incl{cyclic(m.ring, l), cur, chain};
    validate_k_linear(incl);
    if (rank(chain) != l) throw std::logic_error("cogenerator_embed: chain is dependent");

    auto psi = extend_hom(incl, embed_cyclic(m.ring, l));
    if (!psi) throw std::logic_error("cogenerator_embed: extension failed (falsification)");

    components.push_back(psi->map * pi);
    out.parts.push_back(l);
    ++out.r;

    // split: next stage is ker psi, with the projection along the chain
    Subspace ker_psi = kernel(psi->map);
    if (ker_psi.dim() != cur.dim - l)
      throw std::logic_error("cogenerator_embed: kernel has wrong dimension");
    // image of psi lies in ann(x^l) = span{x^{n-l}..x^{n-1}}; the left
    // inverse of embed_cyclic(l) just reads those coordinates
    for (int r = 0; r < n - l; ++r)
      for (int c = 0; c < cur.dim; ++c)
        if (psi->map(r, c) != 0)
          throw std::logic_error("cogenerator_embed: image escapes the annihilator");
    Matrix rho(f, l, cur.dim);
    for (int r = 0; r < l; ++r)
      for (int c = 0; c < cur.dim; ++c) rho.set(r, c, psi->map(n - l + r, c));
    Matrix q = Matrix::identity(f, cur.dim) - chain * rho;  // projector onto ker psi
    auto qc = solve_matrix(ker_psi.basis().transpose(), q);
    if (!qc) throw std::logic_error("cogenerator_embed: projector misses the kernel");

    // restrict the action to the kernel
    auto xr = solve_matrix(ker_psi.basis().transpose(),
                           cur.x_action * ker_psi.basis().transpose());
    if (!xr) throw std::logic_error("cogenerator_embed: kernel not X-invariant");
    pi = *qc * pi;
    cur = make_module(m.ring, *xr);
  }

  Matrix stacked(f, out.r * n, m.dim);
  for (int s = 0; s < out.r; ++s)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m.dim; ++j) stacked.set(s * n + i, j, components[s](i, j));
  KLinearMap emb{m, free_power(m.ring, out.r), stacked};
  validate_k_linear(emb);
  if (kernel(stacked).dim() != 0)
    throw std::logic_error("cogenerator_embed: embedding is not injective");
  out.embedding = std::move(emb);
  return out;
}

KTensor tensor_K(const NilModule& m1, const NilModule& m2) {
  if (!(m1.ring == m2.ring)) throw std::invalid_argument("ring mismatch");
  const FieldSpec f = m1.ring.k;
  const int d = m1.dim * m2.dim;
  Matrix i1 = Matrix::identity(f, m1.dim);
  Matrix i2 = Matrix::identity(f, m2.dim);
  Matrix x1i = kron(m1.x_action, i2);
  Matrix rel = x1i - kron(i1, m2.x_action);
  // relations (x a)(x)b - a(x)(x b): the column space of rel
  Subspace relations = Subspace::from_matrix_rows(rel.transpose());
  Matrix q = quotient_map(d, relations);
  auto sec = solve_matrix(q, Matrix::identity(f, q.rows()));
  if (!sec) throw std::logic_error("tensor_K: quotient has no section");
  Matrix x = q * x1i * *sec;
  return {make_module(m1.ring, x), q, *sec};
}

int tensor_dim_oracle(const NilModule& m1, const NilModule& m2) {
  if (!(m1.ring == m2.ring)) throw std::invalid_argument("ring mismatch");
  const FieldSpec f = m1.ring.k;
  BlockSystem sys(f, {{m1.dim, m2.dim}});
  // beta(x a, b) = beta(a, x b): X1^T beta - beta X2 = 0
  sys.add_equation_grid(
      m1.dim, m2.dim,
      {{0, m1.x_action.transpose(), Matrix::identity(f, m2.dim), false, 1},
       {0, Matrix::identity(f, m1.dim), m2.x_action, false, f.p - 1}});
  return sys.solution_space().dim();
}

CheckReport baer_adjunction_check(const NilModule& b) {
  const RingSpec ring = b.ring;
  const FieldSpec f = ring.k;
  // Hom_K(B, Hom_k(K,k)) and the K-balanced bilinear forms K x B -> k are cut
  // out by the same equation X_K^T beta = beta X_B in the same coordinates;
  // the natural bijection f |-> (a (x) b |-> f(b)(a)) is the identity grid map.
  Subspace lhs = hom_K_basis(b, dual_module(cyclic(ring, ring.n)));
  BlockSystem sys(f, {{ring.n, b.dim}});
  sys.add_equation_grid(
      ring.n, b.dim,
      {{0, cyclic(ring, ring.n).x_action.transpose(), Matrix::identity(f, b.dim), false, 1},
       {0, Matrix::identity(f, ring.n), b.x_action, false, f.p - 1}});
  Subspace rhs = sys.solution_space();
  CheckReport rep;
  if (!(lhs == rhs)) {
    rep.ok = false;
    rep.detail = "hom space and balanced-form space differ";
    return rep;
  }
  if (lhs.dim() != b.dim) {
    rep.ok = false;
    rep.detail = "dimension is " + std::to_string(lhs.dim()) + ", expected dim_k B = " +
                 std::to_string(b.dim);
    return rep;
  }
  // each basis functional kills the tensor relations and survives to the
  // quotient; stacked they stay independent
  KTensor t = tensor_K(cyclic(ring, ring.n), b);
  if (t.module.dim != b.dim) {
    rep.ok = false;
    rep.detail = "dim(K (x) B) = " + std::to_string(t.module.dim);
    return rep;
  }
  Matrix induced(f, lhs.dim(), t.module.dim);
  for (int k = 0; k < lhs.dim(); ++k) {
    Vec beta = lhs.basis().row(k);  // grid on K x B, row-major
    Vec induced_row = t.section.transpose().apply(beta);
    for (int j = 0; j < t.module.dim; ++j) induced.set(k, j, induced_row[j]);
    // check the functional vanishes on the relations, i.e. factors at all
    Vec back = t.projection.transpose().apply(induced_row);
    if (back != beta) {
      rep.ok = false;
      rep.detail = "functional does not factor through the quotient";
      return rep;
    }
  }
  if (rank(induced) != b.dim) {
    rep.ok = false;
    rep.detail = "induced functionals are dependent";
    return rep;
  }
  rep.detail = "dim = " + std::to_string(b.dim) + ", bijection on basis verified";
  return rep;
}

void chuK_validate(const ChuKObject& o) {
  if (!(o.m.ring == o.n_mod.ring)) throw std::invalid_argument("ring mismatch");
  const int n = o.m.ring.n;
  if (static_cast<int>(o.p.size()) != n)
    throw std::invalid_argument("pairing must have n components");
  for (const auto& pt : o.p)
    if (pt.rows() != o.m.dim || pt.cols() != o.n_mod.dim)
      throw std::invalid_argument("pairing component shape mismatch");
  validate_module(o.m);
  validate_module(o.n_mod);
  const FieldSpec f = o.m.ring.k;
  Matrix zero(f, o.m.dim, o.n_mod.dim);
  for (int t = 0; t < n; ++t) {
    const Matrix& prev = t == 0 ? zero : o.p[t - 1];
    if (!(o.m.x_action.transpose() * o.p[t] == prev))
      throw std::invalid_argument("K-bilinearity fails on the left at t=" + std::to_string(t));
    if (!(o.p[t] * o.n_mod.x_action == prev))
      throw std::invalid_argument("K-bilinearity fails on the right at t=" + std::to_string(t));
  }
}

ChuKObject chuK_dual(const ChuKObject& o) {
  std::vector<Matrix> q;
  q.reserve(o.p.size());
  for (const auto& pt : o.p) q.push_back(pt.transpose());
  return {o.n_mod, o.m, std::move(q)};
}

namespace {

Matrix stack_components(const ChuKObject& o) {
  Matrix h = o.p.front();
  for (size_t t = 1; t < o.p.size(); ++t) h = h.hstack(o.p[t]);
  return h;  // dim(m) x (n * dim(n_mod))
}

}  // namespace

SepExtFlagsK chuK_flags(const ChuKObject& o) {
  // left kernel {a : a^T P_t = 0 for all t}, right kernel {b : P_t b = 0}
  Matrix h = stack_components(o);
  Matrix v = o.p.front();
  for (size_t t = 1; t < o.p.size(); ++t) v = v.vstack(o.p[t]);
  return {kernel(h.transpose()).dim() == 0, kernel(v).dim() == 0};
}

ChuKReduction chuK_reduce(const ChuKObject& o, ChuKSide side) {
  chuK_validate(o);
  const FieldSpec f = o.m.ring.k;
  if (side == ChuKSide::Separated) {
    Subspace lk = kernel(stack_components(o).transpose());
    // the left kernel is an X-invariant submodule; assert before quotienting
    for (int r = 0; r < lk.dim(); ++r)
      if (!lk.contains(o.m.x_action.apply(lk.basis().row(r))))
        throw std::logic_error("chuK_reduce: left kernel not X-invariant");
    Matrix q = quotient_map(o.m.dim, lk);
    auto sec = solve_matrix(q, Matrix::identity(f, q.rows()));
    if (!sec) throw std::logic_error("chuK_reduce: no section");
    Matrix x = q * o.m.x_action * *sec;
    std::vector<Matrix> p2;
    for (const auto& pt : o.p) {
      auto s = solve_matrix(q.transpose(), pt);
      if (!s) throw std::logic_error("chuK_reduce: pairing does not descend");
      p2.push_back(*s);
    }
    ChuKObject red{make_module(o.m.ring, x), o.n_mod, std::move(p2)};
    chuK_validate(red);
    return {red, q};
  }
  ChuKObject d = chuK_dual(o);
  ChuKReduction r = chuK_reduce(d, ChuKSide::Separated);
  return {chuK_dual(r.object), r.quotient};
}

Subspace chuK_hom_basis(const ChuKObject& s, const ChuKObject& t) {
  if (!(s.m.ring == t.m.ring)) throw std::invalid_argument("ring mismatch");
  const FieldSpec f = s.m.ring.k;
  const int n = s.m.ring.n;
  BlockSystem sys(f, {{t.m.dim, s.m.dim}, {s.n_mod.dim, t.n_mod.dim}});
  // equivariance of F and G
  sys.add_equation_grid(
      t.m.dim, s.m.dim,
      {{0, Matrix::identity(f, t.m.dim), s.m.x_action, false, 1},
       {0, t.m.x_action, Matrix::identity(f, s.m.dim), false, f.p - 1}});
  sys.add_equation_grid(
      s.n_mod.dim, t.n_mod.dim,
      {{1, Matrix::identity(f, s.n_mod.dim), t.n_mod.x_action, false, 1},
       {1, s.n_mod.x_action, Matrix::identity(f, t.n_mod.dim), false, f.p - 1}});
  // adjointness componentwise: F^T Q_t = P_t G
  for (int c = 0; c < n; ++c) {
    sys.add_equation_grid(
        s.m.dim, t.n_mod.dim,
        {{0, Matrix::identity(f, s.m.dim), t.p[c], true, 1},
         {1, s.p[c], Matrix::identity(f, t.n_mod.dim), false, f.p - 1}});
  }
  return sys.solution_space();
}

ChuKObject chuK_regular(RingSpec ring) {
  NilModule k_mod = cyclic(ring, ring.n);
  std::vector<Matrix> p;
  for (int t = 0; t < ring.n; ++t) {
    Matrix pt(ring.k, ring.n, ring.n);
    for (int i = 0; i < ring.n; ++i)
      for (int j = 0; j < ring.n; ++j)
        if (i + j == t) pt.set(i, j, 1);
    p.push_back(pt);
  }
  ChuKObject o{k_mod, k_mod, std::move(p)};
  chuK_validate(o);
  return o;
}

NilModule random_module(Rng& rng, RingSpec ring, int max_dim) {
  int d = static_cast<int>(rng.below(max_dim + 1));
  if (d == 0) return {ring, 0, Matrix(ring.k, 0, 0)};
  // random Jordan type with parts <= n, conjugated by a random basis change
  NilModule shape{ring, 0, Matrix(ring.k, 0, 0)};
  int remaining = d;
  while (remaining > 0) {
    int part = 1 + static_cast<int>(rng.below(std::min<i64>(ring.n, remaining)));
    shape = direct_sum(shape, cyclic(ring, part));
    remaining -= part;
  }
  Matrix g = random_invertible(rng, ring.k, d);
  Matrix gi = *inverse(g);
  return make_module(ring, g * shape.x_action * gi);
}

KLinearMap random_submodule_inclusion(Rng& rng, const NilModule& b, int max_gens) {
  const FieldSpec f = b.ring.k;
  int g = 1 + static_cast<int>(rng.below(max_gens));
  std::vector<Vec> gens;
  for (int i = 0; i < g; ++i) {
    Vec v(b.dim, 0);
    for (int j = 0; j < b.dim; ++j) v[j] = rng.below(f.p);
    // close under the action
    for (int t = 0; t < b.ring.n; ++t) {
      gens.push_back(v);
      v = b.x_action.apply(v);
    }
  }
  Subspace sub = Subspace::from_generators(f, b.dim, gens);
  // restricted action in the submodule basis
  auto xr = solve_matrix(sub.basis().transpose(), b.x_action * sub.basis().transpose());
  if (!xr) throw std::logic_error("random submodule not X-invariant");
  NilModule a = make_module(b.ring, *xr);
  KLinearMap incl{a, b, sub.basis().transpose()};
  validate_k_linear(incl);
  return incl;
}

KLinearMap random_functional(Rng& rng, const NilModule& m) {
  Subspace h = hom_K_basis(m, cyclic(m.ring, m.ring.n));
  Vec coeff(h.dim());
  for (int i = 0; i < h.dim(); ++i) coeff[i] = rng.below(m.ring.k.p);
  Vec packed = h.basis().transpose().apply(coeff);
  Matrix f(m.ring.k, m.ring.n, m.dim);
  for (int i = 0; i < m.ring.n; ++i)
    for (int j = 0; j < m.dim; ++j) f.set(i, j, packed[i * m.dim + j]);
  KLinearMap out{m, cyclic(m.ring, m.ring.n), f};
  validate_k_linear(out);
  return out;
}

}  // namespace chu
