#include "chu/laws.hpp"

#include <array>
#include <chrono>
#include <functional>

namespace chu {

namespace {

constexpr std::array<const char*, 10> kLawNames = {
    "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9", "L10"};

Matrix matrix_of_coords(FieldSpec f, const std::vector<Vec>& cols, int rows) {
  Matrix m(f, rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rows; ++i) m.set(i, static_cast<int>(j), cols[j][i]);
  return m;
}

// ---- L1 ----
WitnessResult law_involution(const ChuObject& t) {
  if (!(dual(dual(t)) == t)) return {false, "(T*)* differs from T"};
  return {};
}

// ---- L2 ----
WitnessResult law_dual_as_hom(const ChuObject& t) {
  ChuObject bot = dualizing_object(t.field);
  ChuObject h = internal_hom(t, bot);
  Subspace w = hom_basis(t, bot);
  ChuObject dt = dual(t);
  // x |-> (F_x, G_x) = ((Px)^T, x) is the canonical first component
  Matrix phi(t.field, h.dim_a, dt.dim_a);
  for (int ix = 0; ix < t.dim_x; ++ix) {
    Vec xv(t.dim_x, 0);
    xv[ix] = 1;
    Vec px = t.pairing.apply(xv);
    Matrix fx(t.field, 1, t.dim_a);
    for (int ia = 0; ia < t.dim_a; ++ia) fx.set(0, ia, px[ia]);
    Matrix gx = Matrix::col_vector(t.field, xv);
    auto coords = w.coordinates(vec_hom_pair(t, bot, {fx, gx}));
    if (!coords) return {false, "canonical pair is not in the hom space"};
    for (int k = 0; k < h.dim_a; ++k) phi.set(k, ix, (*coords)[k]);
  }
  ChuMorphism m{dt, h, phi, Matrix::identity(t.field, t.dim_a)};
  if (!is_morphism(m)) return {false, "dual-as-hom witness violates the morphism condition"};
  if (!is_isomorphism(m)) return {false, "dual-as-hom witness is not invertible"};
  return {};
}

// ---- L4 ----
WitnessResult law_unit(const ChuObject& t) {
  ChuObject one = unit_object(t.field);
  ChuObject ut = tensor(one, t);
  ChuObject dt = dual(t);
  Subspace w = hom_basis(one, dt);
  if (ut.dim_a != t.dim_a) return {false, "unit tensor changed the first carrier"};
  // x |-> (F = x as a column, G = (Px)^T) in Hom(unit, T*)
  Matrix psi(t.field, ut.dim_x, t.dim_x);
  for (int ix = 0; ix < t.dim_x; ++ix) {
    Vec xv(t.dim_x, 0);
    xv[ix] = 1;
    Matrix fx = Matrix::col_vector(t.field, xv);
    Vec px = t.pairing.apply(xv);
    Matrix gx(t.field, 1, t.dim_a);
    for (int ia = 0; ia < t.dim_a; ++ia) gx.set(0, ia, px[ia]);
    auto coords = w.coordinates(vec_hom_pair(one, dt, {fx, gx}));
    if (!coords) return {false, "canonical pair is not in the tensor's second carrier"};
    for (int k = 0; k < ut.dim_x; ++k) psi.set(k, ix, (*coords)[k]);
  }
  ChuMorphism m{ut, t, Matrix::identity(t.field, t.dim_a), psi};
  if (!is_morphism(m)) return {false, "unit-law witness violates the morphism condition"};
  if (!is_isomorphism(m)) return {false, "unit-law witness is not invertible"};
  return {};
}

// ---- L5 ----
WitnessResult law_symmetry(const ChuObject& t, const ChuObject& u) {
  ChuObject tu = tensor(t, u);
  ChuObject ut = tensor(u, t);
  Subspace w_tu = hom_basis(t, dual(u));
  Subspace w_ut = hom_basis(u, dual(t));
  // first components: the commutation permutation a(x)b -> b(x)a
  Matrix phi(t.field, ut.dim_a, tu.dim_a);
  for (int ia = 0; ia < t.dim_a; ++ia)
    for (int ib = 0; ib < u.dim_a; ++ib)
      phi.set(ib * t.dim_a + ia, ia * u.dim_a + ib, 1);
  // second components swap (f,g) -> (g,f)
  Matrix psi(t.field, tu.dim_x, ut.dim_x);
  for (int k = 0; k < w_ut.dim(); ++k) {
    HomPair p = unvec_hom_pair(u, dual(t), w_ut.basis().row(k));
    auto coords = w_tu.coordinates(vec_hom_pair(t, dual(u), {p.g, p.f}));
    if (!coords) return {false, "swapped pair is not in the other tensor carrier"};
    for (int i = 0; i < tu.dim_x; ++i) psi.set(i, k, (*coords)[i]);
  }
  ChuMorphism m{tu, ut, phi, psi};
  if (!is_morphism(m)) return {false, "symmetry witness violates the morphism condition"};
  if (!is_isomorphism(m)) return {false, "symmetry witness is not invertible"};
  return {};
}

// ---- L8 ----
WitnessResult law_dual_of_hom(const ChuObject& t, const ChuObject& u) {
  ChuObject lhs = dual(internal_hom(t, u));
  ChuObject rhs = tensor(t, dual(u));
  // with this repo's conventions the two constructions agree on the nose
  if (!(lhs == rhs)) return {false, "(T -o U)* and T (x) U* differ"};
  return {};
}

// ---- L9 ----
WitnessResult law_compact_closure(int du, int dv, FieldSpec field) {
  // trace pairing Hom(U,V) x Hom(V,U) -> k is perfect for plain f.d. spaces
  const int n = du * dv;
  Matrix m(field, n, n);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < du; ++j)
      for (int k = 0; k < du; ++k)
        for (int l = 0; l < dv; ++l) {
          Matrix e1(field, dv, du);
          e1.set(i, j, 1);
          Matrix e2(field, du, dv);
          e2.set(k, l, 1);
          Matrix prod = e1 * e2;
          i64 tr = 0;
          for (int q = 0; q < dv; ++q) tr = field.add(tr, prod(q, q));
          m.set(i * du + j, k * dv + l, tr);
        }
  if (rank(m) != n) return {false, "trace pairing is degenerate"};
  return {};
}

// ---- L6 ----
WitnessResult law_sep_ext_closure(const ChuObject& s, const ChuObject& t) {
  SepExtFlags fs = sep_ext_flags(s);
  SepExtFlags ft = sep_ext_flags(t);
  if (!fs.separated || !fs.extensional || !ft.separated || !ft.extensional)
    return {false, "inputs are not separated+extensional"};
  SepExtFlags h = sep_ext_flags(internal_hom(s, t));
  SepExtFlags x = sep_ext_flags(tensor(s, t));
  if (!h.separated) return {false, "internal hom lost separatedness"};
  if (!h.extensional) return {false, "internal hom lost extensionality"};
  if (!x.separated) return {false, "tensor lost separatedness"};
  if (!x.extensional) return {false, "tensor lost extensionality"};
  return {};
}

// linear map on vectorized hom pairs, expressed in canonical hom bases
std::optional<Matrix> hom_space_map(
    const Subspace& from, const Subspace& to,
    const std::function<Vec(const Vec&)>& on_pairs, FieldSpec field) {
  std::vector<Vec> cols;
  for (int k = 0; k < from.dim(); ++k) {
    auto c = to.coordinates(on_pairs(from.basis().row(k)));
    if (!c) return std::nullopt;
    cols.push_back(*c);
  }
  return matrix_of_coords(field, cols, to.dim());
}

// ---- L7 ----
WitnessResult law_reflector_adjointness(const ChuObject& t, const ChuObject& u_sep,
                                        const ChuObject& u_ext) {
  if (!sep_ext_flags(u_sep).separated) return {false, "S-side test object is not separated"};
  if (!sep_ext_flags(u_ext).extensional)
    return {false, "E-side test object is not extensional"};

  Reflection rs = reflect(t, ReflectSide::Separated);
  Subspace from_s = hom_basis(rs.object, u_sep);
  Subspace to_s = hom_basis(t, u_sep);
  if (from_s.dim() != to_s.dim()) return {false, "Hom(ST,U) and Hom(T,U) dims differ"};
  auto pre = hom_space_map(
      from_s, to_s,
      [&](const Vec& v) {
        HomPair p = unvec_hom_pair(rs.object, u_sep, v);
        ChuMorphism m{rs.object, u_sep, p.f, p.g};
        ChuMorphism c = compose(m, rs.morphism);
        return vec_hom_pair(t, u_sep, {c.f, c.g});
      },
      t.field);
  if (!pre) return {false, "precomposition with the unit leaves the hom space"};
  if (rank(*pre) != from_s.dim()) return {false, "Hom(ST,U) -> Hom(T,U) is not bijective"};

  Reflection re = reflect(t, ReflectSide::Extensional);
  Subspace from_e = hom_basis(u_ext, re.object);
  Subspace to_e = hom_basis(u_ext, t);
  if (from_e.dim() != to_e.dim()) return {false, "Hom(U,ET) and Hom(U,T) dims differ"};
  auto post = hom_space_map(
      from_e, to_e,
      [&](const Vec& v) {
        HomPair p = unvec_hom_pair(u_ext, re.object, v);
        ChuMorphism m{u_ext, re.object, p.f, p.g};
        ChuMorphism c = compose(re.morphism, m);
        return vec_hom_pair(u_ext, t, {c.f, c.g});
      },
      t.field);
  if (!post) return {false, "postcomposition with the counit leaves the hom space"};
  if (rank(*post) != from_e.dim()) return {false, "Hom(U,ET) -> Hom(U,T) is not bijective"};
  return {};
}

// ---- L3 ----
struct CurryContext {
  ChuObject t, u, v;
  ChuObject tu;   // tensor(t,u)
  ChuObject uv;   // internal_hom(u,v)
  Subspace w1;    // hom_basis(t, dual u): the tensor's second carrier
  Subspace h;     // hom_basis(u, v): the hom's first carrier
  Subspace hom1;  // hom_basis(tu, v)
  Subspace hom2;  // hom_basis(t, uv)
};

CurryContext make_curry_context(const ChuObject& t, const ChuObject& u, const ChuObject& v) {
  CurryContext cx{t, u, v, tensor(t, u), internal_hom(u, v),
                  hom_basis(t, dual(u)), hom_basis(u, v), Subspace{}, Subspace{}};
  cx.hom1 = hom_basis(cx.tu, v);
  cx.hom2 = hom_basis(cx.t, cx.uv);
  return cx;
}

std::optional<Vec> curry_pair(const CurryContext& cx, const Vec& hom1_vec) {
  const int a = cx.t.dim_a, x = cx.t.dim_x;
  const int b = cx.u.dim_a;
  const int z = cx.v.dim_x;
  HomPair big = unvec_hom_pair(cx.tu, cx.v, hom1_vec);  // (Phi: c x ab, Psi: w1 x z)
  // per z-basis vector, the actual (f,g) pair behind Psi's column
  std::vector<HomPair> psi_pairs;
  for (int iz = 0; iz < z; ++iz) {
    Vec actual = cx.w1.basis().transpose().apply(big.g.col(iz));
    psi_pairs.push_back(unvec_hom_pair(cx.t, dual(cx.u), actual));
  }
  Matrix phi2(cx.t.field, cx.h.dim(), a);
  for (int ia = 0; ia < a; ++ia) {
    Matrix f_ia(cx.t.field, cx.v.dim_a, b);
    for (int ic = 0; ic < cx.v.dim_a; ++ic)
      for (int ib = 0; ib < b; ++ib) f_ia.set(ic, ib, big.f(ic, ia * b + ib));
    Matrix g_ia(cx.t.field, cx.u.dim_x, z);
    for (int iy = 0; iy < cx.u.dim_x; ++iy)
      for (int iz = 0; iz < z; ++iz) g_ia.set(iy, iz, psi_pairs[iz].f(iy, ia));
    auto coords = cx.h.coordinates(vec_hom_pair(cx.u, cx.v, {f_ia, g_ia}));
    if (!coords) return std::nullopt;
    for (int k = 0; k < cx.h.dim(); ++k) phi2.set(k, ia, (*coords)[k]);
  }
  Matrix psi2(cx.t.field, x, b * z);
  for (int ix = 0; ix < x; ++ix)
    for (int ib = 0; ib < b; ++ib)
      for (int iz = 0; iz < z; ++iz)
        psi2.set(ix, ib * z + iz, psi_pairs[iz].g(ix, ib));
  return vec_hom_pair(cx.t, cx.uv, {phi2, psi2});
}

std::optional<Vec> uncurry_pair(const CurryContext& cx, const Vec& hom2_vec) {
  const int a = cx.t.dim_a, x = cx.t.dim_x;
  const int b = cx.u.dim_a, y = cx.u.dim_x;
  const int c = cx.v.dim_a, z = cx.v.dim_x;
  HomPair big = unvec_hom_pair(cx.t, cx.uv, hom2_vec);  // (Phi': h x a, Psi': x x bz)
  std::vector<HomPair> h_pairs;
  for (int ia = 0; ia < a; ++ia) {
    Vec actual = cx.h.basis().transpose().apply(big.f.col(ia));
    h_pairs.push_back(unvec_hom_pair(cx.u, cx.v, actual));
  }
  Matrix phi(cx.t.field, c, a * b);
  for (int ia = 0; ia < a; ++ia)
    for (int ic = 0; ic < c; ++ic)
      for (int ib = 0; ib < b; ++ib) phi.set(ic, ia * b + ib, h_pairs[ia].f(ic, ib));
  Matrix psi(cx.t.field, cx.w1.dim(), z);
  for (int iz = 0; iz < z; ++iz) {
    Matrix f_z(cx.t.field, y, a);
    for (int iy = 0; iy < y; ++iy)
      for (int ia = 0; ia < a; ++ia) f_z.set(iy, ia, h_pairs[ia].g(iy, iz));
    Matrix g_z(cx.t.field, x, b);
    for (int ix = 0; ix < x; ++ix)
      for (int ib = 0; ib < b; ++ib) g_z.set(ix, ib, big.g(ix, ib * z + iz));
    auto coords = cx.w1.coordinates(vec_hom_pair(cx.t, dual(cx.u), {f_z, g_z}));
    if (!coords) return std::nullopt;
    for (int k = 0; k < cx.w1.dim(); ++k) psi.set(k, iz, (*coords)[k]);
  }
  return vec_hom_pair(cx.tu, cx.v, {phi, psi});
}

WitnessResult law_adjunction(const ChuObject& t, const ChuObject& u, const ChuObject& v) {
  CurryContext cx = make_curry_context(t, u, v);
  if (cx.hom1.dim() != cx.hom2.dim())
    return {false, "dim Hom(T(x)U, V) != dim Hom(T, U -o V)"};
  for (int k = 0; k < cx.hom1.dim(); ++k) {
    Vec original = cx.hom1.basis().row(k);
    auto curried = curry_pair(cx, original);
    if (!curried) return {false, "currying a basis morphism leaves Hom(T, U -o V)"};
    if (!cx.hom2.contains(*curried)) return {false, "curried morphism fails the condition"};
    auto back = uncurry_pair(cx, *curried);
    if (!back || *back != original) return {false, "uncurry(curry) is not the identity"};
  }
  for (int k = 0; k < cx.hom2.dim(); ++k) {
    Vec original = cx.hom2.basis().row(k);
    auto unc = uncurry_pair(cx, original);
    if (!unc) return {false, "uncurrying a basis morphism leaves Hom(T(x)U, V)"};
    if (!cx.hom1.contains(*unc)) return {false, "uncurried morphism fails the condition"};
    auto back = curry_pair(cx, *unc);
    if (!back || *back != original) return {false, "curry(uncurry) is not the identity"};
  }
  return {};
}

// ---- L10 ----
WitnessResult law_associativity(const ChuObject& t, const ChuObject& u, const ChuObject& v) {
  const FieldSpec f = t.field;
  const int a = t.dim_a, b = u.dim_a, c = v.dim_a;
  ChuObject tu = tensor(t, u);
  ChuObject uv = tensor(u, v);
  ChuObject lhs = tensor(tu, v);
  ChuObject rhs = tensor(t, uv);
  if (lhs.dim_a != rhs.dim_a) return {false, "first carriers differ"};
  Subspace w1 = hom_basis(t, dual(u));       // second carrier of t(x)u
  Subspace w2 = hom_basis(u, dual(v));       // second carrier of u(x)v
  Subspace wl = hom_basis(tu, dual(v));      // second carrier of (t(x)u)(x)v
  Subspace wr = hom_basis(t, dual(uv));      // second carrier of t(x)(u(x)v)

  Matrix g(f, lhs.dim_x, rhs.dim_x);
  for (int k = 0; k < wr.dim(); ++k) {
    HomPair p = unvec_hom_pair(t, dual(uv), wr.basis().row(k));  // (phi': w2 x a, psi': x x bc)
    std::vector<HomPair> per_a;
    for (int ia = 0; ia < a; ++ia) {
      Vec actual = w2.basis().transpose().apply(p.f.col(ia));
      per_a.push_back(unvec_hom_pair(u, dual(v), actual));  // (f_ia: z x b, g_ia: y x c)
    }
    Matrix phi(f, v.dim_x, a * b);
    for (int ia = 0; ia < a; ++ia)
      for (int iz = 0; iz < v.dim_x; ++iz)
        for (int ib = 0; ib < b; ++ib) phi.set(iz, ia * b + ib, per_a[ia].f(iz, ib));
    Matrix psi(f, w1.dim(), c);
    for (int ic = 0; ic < c; ++ic) {
      Matrix u_ic(f, u.dim_x, a);
      for (int iy = 0; iy < u.dim_x; ++iy)
        for (int ia = 0; ia < a; ++ia) u_ic.set(iy, ia, per_a[ia].g(iy, ic));
      Matrix v_ic(f, t.dim_x, b);
      for (int ix = 0; ix < t.dim_x; ++ix)
        for (int ib = 0; ib < b; ++ib) v_ic.set(ix, ib, p.g(ix, ib * c + ic));
      auto coords = w1.coordinates(vec_hom_pair(t, dual(u), {u_ic, v_ic}));
      if (!coords) return {false, "slice pair is not in the inner tensor carrier"};
      for (int q = 0; q < w1.dim(); ++q) psi.set(q, ic, (*coords)[q]);
    }
    auto wl_coords = wl.coordinates(vec_hom_pair(tu, dual(v), {phi, psi}));
    if (!wl_coords) return {false, "reassociated pair is not in the outer tensor carrier"};
    for (int q = 0; q < wl.dim(); ++q) g.set(q, k, (*wl_coords)[q]);
  }
  ChuMorphism m{lhs, rhs, Matrix::identity(f, a * b * c), g};
  if (!is_morphism(m)) return {false, "associativity witness violates the morphism condition"};
  if (!is_isomorphism(m)) return {false, "associativity witness is not invertible"};
  return {};
}

}  // namespace

const char* law_name(LawId id) { return kLawNames[static_cast<int>(id)]; }

LawId law_from_name(const std::string& name) {
  for (size_t i = 0; i < kLawNames.size(); ++i)
    if (name == kLawNames[i]) return static_cast<LawId>(i);
  throw std::invalid_argument("unknown law id: " + name);
}

std::string law_statement(LawId id) {
  switch (id) {
    case LawId::L1: return "(T*)* = T";
    case LawId::L2: return "T* ~ T -o (K,unit)";
    case LawId::L3: return "Hom(T(x)U, V) ~ Hom(T, U -o V)";
    case LawId::L4: return "(unit)(x)T ~ T";
    case LawId::L5: return "T(x)U ~ U(x)T";
    case LawId::L6: return "sep+ext closed under -o and (x)";
    case LawId::L7: return "Hom(ST,U)~Hom(T,U) for U sep; Hom(U,ET)~Hom(U,T) for U ext";
    case LawId::L8: return "(T -o U)* ~ T (x) U*";
    case LawId::L9: return "(U -o V)* ~ V -o U for plain spaces";
    case LawId::L10: return "(T(x)U)(x)W ~ T(x)(U(x)W)";
  }
  return "";
}

int law_arity(LawId id) {
  switch (id) {
    case LawId::L1:
    case LawId::L2:
    case LawId::L4:
      return 1;
    case LawId::L5:
    case LawId::L6:
    case LawId::L8:
    case LawId::L9:
      return 2;
    case LawId::L3:
    case LawId::L7:
    case LawId::L10:
      return 3;
  }
  return 0;
}

WitnessResult check_law_instance(LawId id, const std::vector<ChuObject>& objects) {
  if (static_cast<int>(objects.size()) != law_arity(id))
    throw std::invalid_argument(std::string("law ") + law_name(id) + " takes " +
                                std::to_string(law_arity(id)) + " objects");
  switch (id) {
    case LawId::L1: return law_involution(objects[0]);
    case LawId::L2: return law_dual_as_hom(objects[0]);
    case LawId::L3: return law_adjunction(objects[0], objects[1], objects[2]);
    case LawId::L4: return law_unit(objects[0]);
    case LawId::L5: return law_symmetry(objects[0], objects[1]);
    case LawId::L6: return law_sep_ext_closure(objects[0], objects[1]);
    case LawId::L7: return law_reflector_adjointness(objects[0], objects[1], objects[2]);
    case LawId::L8: return law_dual_of_hom(objects[0], objects[1]);
    case LawId::L9:
      return law_compact_closure(objects[0].dim_a, objects[1].dim_a, objects[0].field);
    case LawId::L10: return law_associativity(objects[0], objects[1], objects[2]);
  }
  return {false, "unhandled law"};
}

ChuObject random_chu(Rng& rng, FieldSpec f, int max_dim) {
  int a = static_cast<int>(rng.below(max_dim + 1));
  int x = static_cast<int>(rng.below(max_dim + 1));
  return {f, a, x, random_matrix(rng, f, a, x)};
}

ChuObject random_sep_ext(Rng& rng, FieldSpec f, int max_dim) {
  int d = static_cast<int>(rng.below(max_dim + 1));
  for (;;) {
    Matrix p = random_matrix(rng, f, d, d);
    if (rank(p) == d) return {f, d, d, p};
  }
}

ChuObject random_separated(Rng& rng, FieldSpec f, int max_dim) {
  int x = static_cast<int>(rng.below(max_dim + 1));
  int a = static_cast<int>(rng.below(x + 1));
  for (;;) {
    Matrix p = random_matrix(rng, f, a, x);
    if (rank(p) == a) return {f, a, x, p};
  }
}

ChuObject random_extensional(Rng& rng, FieldSpec f, int max_dim) {
  return dual(random_separated(rng, f, max_dim));
}

LawReport run_law(LawId id, const TrialSpec& spec) {
  auto start = std::chrono::steady_clock::now();
  LawReport rep;
  rep.law = id;
  rep.seed = spec.seed;
  for (int trial = 0; trial < spec.samples; ++trial) {
    Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(trial) * 16 +
                                    static_cast<std::uint64_t>(id)));
    std::vector<ChuObject> objs;
    switch (id) {
      case LawId::L6:
        objs = {random_sep_ext(rng, spec.field, spec.max_dim),
                random_sep_ext(rng, spec.field, spec.max_dim)};
        break;
      case LawId::L7:
        objs = {random_chu(rng, spec.field, spec.max_dim),
                random_separated(rng, spec.field, spec.max_dim),
                random_extensional(rng, spec.field, spec.max_dim)};
        break;
      default: {
        objs.reserve(law_arity(id));
        for (int i = 0; i < law_arity(id); ++i)
          objs.push_back(random_chu(rng, spec.field, spec.max_dim));
        break;
      }
    }
    WitnessResult r = check_law_instance(id, objs);
    ++rep.trials;
    if (!r.ok) rep.failures.push_back({id, trial, objs, r.detail});
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

ChuObject functor_F(const PresentedSpace& v) {
  const int d = v.dim();
  return {v.field, d, d, Matrix::identity(v.field, d)};
}

PresentedSpace functor_R(const ChuObject& o) {
  if (!sep_ext_flags(o).separated) throw NotSeparated();
  std::vector<int> factors(o.dim_x, 1);
  return {o.field, std::move(factors), Subspace::from_matrix_rows(o.pairing)};
}

TheoremCheck check_FR_identity(const ChuObject& o) {
  SepExtFlags fl = sep_ext_flags(o);
  if (!fl.separated || !fl.extensional)
    return {false, "object is not separated+extensional"};
  PresentedSpace r = functor_R(o);
  const Matrix& basis = r.sub.basis();  // d x dimX
  // Every functional phi on R(o) is a theta-combination of coordinate
  // functionals: theta solves  basis * theta = phi  (in the intrinsic dual
  // basis); then x |-> sum theta_j pi_j restricted is the map X -> Hom(R,K),
  // whose matrix is `basis` itself.
  for (const FunctionalP& phi : hom_functionals(r)) {
    auto theta = solve(basis, phi.coeffs);
    if (!theta) return {false, "a functional admits no theta-combination"};
  }
  if (basis.rows() != o.dim_x || rank(basis) != o.dim_x)
    return {false, "X -> Hom(R(o),K) is not bijective"};
  return {true, "theta-combinations found; X -> Hom(R(o),K) bijective, dim " +
                    std::to_string(o.dim_x)};
}

TheoremCheck check_RF_equals_sigma(const PresentedSpace& v) {
  PresentedSpace lhs = functor_R(functor_F(v));
  PresentedSpace rhs = sigma(v);
  if (!(lhs == rhs)) return {false, "R(F(V)) differs from sigma(V)"};
  return {true, "R(F(V)) = sigma(V), dim " + std::to_string(v.dim())};
}

TheoremCheck end_of_K_check(FieldSpec f) {
  ChuObject one = unit_object(f);
  Subspace endk = hom_basis(one, one);
  if (endk.dim() != 1) return {false, "End(K) has dimension " + std::to_string(endk.dim())};
  if (!(internal_hom(one, one) == one)) return {false, "unit -> (K -o K) is not the identity"};
  return {true, "End(K) is one-dimensional"};
}

}  // namespace chu
