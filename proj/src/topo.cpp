#include "chu/topo.hpp"

#include <algorithm>
#include <cmath>

namespace chu {

namespace {

// Columns of the concatenated ambient belonging to the factors in J.
std::vector<int> columns_of(const std::vector<int>& factors, const std::vector<int>& j) {
  std::vector<int> offsets(factors.size() + 1, 0);
  for (size_t i = 0; i < factors.size(); ++i) offsets[i + 1] = offsets[i] + factors[i];
  std::vector<int> cols;
  for (int idx : j)
    for (int c = offsets[idx]; c < offsets[idx + 1]; ++c) cols.push_back(c);
  return cols;
}

// N_J = {s in sub : s vanishes on the J-factors}, in intrinsic coordinates:
// the kernel of B[:, cols(J)]^T acting on coefficient vectors.
Subspace vanishing_coeffs(const PresentedSpace& v, const std::vector<int>& j) {
  std::vector<int> cols = columns_of(v.factors, j);
  return kernel(v.sub.basis().select_cols(cols).transpose());
}

bool admissible(const PresentedSpace& v, const FunctionalP& phi, const std::vector<int>& j) {
  Subspace n = vanishing_coeffs(v, j);
  const FieldSpec& f = v.field;
  for (int r = 0; r < n.dim(); ++r) {
    Vec lam = n.basis().row(r);
    i64 acc = 0;
    for (size_t i = 0; i < lam.size(); ++i) acc = (acc + lam[i] * f.reduce(phi.coeffs[i])) % f.p;
    if (acc != 0) return false;
  }
  return true;
}

// Subsets of {0..m-1} in (cardinality, lexicographic) order.
template <typename Pred>
std::vector<int> first_subset(int m, Pred&& pred) {
  std::vector<int> cur;
  for (int card = 0; card <= m; ++card) {
    cur.assign(card, 0);
    for (int i = 0; i < card; ++i) cur[i] = i;
    for (;;) {
      if (pred(cur)) return cur;
      // next combination in lexicographic order
      int i = card - 1;
      while (i >= 0 && cur[i] == m - card + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (int k = i + 1; k < card; ++k) cur[k] = cur[k - 1] + 1;
    }
  }
  throw std::logic_error("first_subset: no admissible subset (J = all must work)");
}

}  // namespace

PresentedSpace make_presented(FieldSpec f, std::vector<int> factors,
                              const std::vector<Vec>& generators) {
  int d = 0;
  for (int fd : factors) {
    if (fd < 0) throw std::invalid_argument("negative factor dimension");
    d += fd;
  }
  return {f, std::move(factors), Subspace::from_generators(f, d, generators)};
}

PresentedSpace product(const std::vector<PresentedSpace>& vs) {
  if (vs.empty()) return {FieldSpec(2), {}, Subspace(FieldSpec(2), 0)};
  FieldSpec f = vs.front().field;
  std::vector<int> factors;
  int total = 0;
  for (const auto& v : vs) {
    if (!(v.field == f)) throw std::invalid_argument("product: field mismatch");
    factors.insert(factors.end(), v.factors.begin(), v.factors.end());
    total += v.ambient_dim();
  }
  std::vector<Vec> gens;
  int offset = 0;
  for (const auto& v : vs) {
    for (int r = 0; r < v.sub.dim(); ++r) {
      Vec row(total, 0);
      Vec src = v.sub.basis().row(r);
      std::copy(src.begin(), src.end(), row.begin() + offset);
      gens.push_back(std::move(row));
    }
    offset += v.ambient_dim();
  }
  return {f, std::move(factors), Subspace::from_generators(f, total, gens)};
}

FactorizationResult factor_functional(const PresentedSpace& v, const FunctionalP& phi) {
  if (static_cast<int>(phi.coeffs.size()) != v.dim())
    throw std::invalid_argument("functional length mismatch");
  const int m = static_cast<int>(v.factors.size());
  std::vector<int> j;
  bool certified = true;
  if (m <= 15) {
    j = first_subset(m, [&](const std::vector<int>& s) { return admissible(v, phi, s); });
  } else {
    // greedy removal; sound (always admissible) but not minimality-certified
    certified = false;
    j.resize(m);
    for (int i = 0; i < m; ++i) j[i] = i;
    for (int i = m - 1; i >= 0; --i) {
      std::vector<int> cand;
      for (int x : j)
        if (x != i) cand.push_back(x);
      if (admissible(v, phi, cand)) j = std::move(cand);
    }
  }

  std::vector<int> cols = columns_of(v.factors, j);
  Matrix proj = v.sub.basis().select_cols(cols);
  Subspace t0 = Subspace::from_matrix_rows(proj);

  // phi0 on t0: pick any preimage of each basis vector under the projection
  // restricted to the subspace; well-defined by admissibility.
  FunctionalP phi0;
  phi0.coeffs.assign(t0.dim(), 0);
  const FieldSpec& f = v.field;
  for (int r = 0; r < t0.dim(); ++r) {
    auto lam = solve(proj.transpose(), t0.basis().row(r));
    if (!lam) throw std::logic_error("factor_functional: projection preimage missing");
    i64 acc = 0;
    for (size_t i = 0; i < lam->size(); ++i)
      acc = (acc + (*lam)[i] * f.reduce(phi.coeffs[i])) % f.p;
    phi0.coeffs[r] = acc;
  }
  return {std::move(j), std::move(t0), std::move(phi0), certified};
}

std::vector<int> minimal_j_oracle(const PresentedSpace& v, const FunctionalP& phi) {
  const int m = static_cast<int>(v.factors.size());
  if (m > 15) throw std::invalid_argument("minimal_j_oracle: too many factors");
  double count = std::pow(static_cast<double>(v.field.p), v.dim());
  if (count > (1 << 20)) throw std::invalid_argument("minimal_j_oracle: subspace too large");
  const i64 total = static_cast<i64>(count);
  const FieldSpec& f = v.field;

  std::vector<int> offsets(v.factors.size() + 1, 0);
  for (size_t i = 0; i < v.factors.size(); ++i) offsets[i + 1] = offsets[i] + v.factors[i];

  auto pointwise_admissible = [&](const std::vector<int>& j) {
    // enumerate every element of the subspace directly
    for (i64 code = 0; code < total; ++code) {
      Vec lam(v.dim(), 0);
      i64 c = code;
      for (int i = 0; i < v.dim(); ++i) {
        lam[i] = c % f.p;
        c /= f.p;
      }
      Vec s = v.sub.basis().transpose().apply(lam);  // ambient element
      bool vanishes_on_j = true;
      for (int idx : j)
        for (int col = offsets[idx]; col < offsets[idx + 1] && vanishes_on_j; ++col)
          if (s[col] != 0) vanishes_on_j = false;
      if (!vanishes_on_j) continue;
      i64 val = 0;
      for (int i = 0; i < v.dim(); ++i) val = (val + lam[i] * f.reduce(phi.coeffs[i])) % f.p;
      if (val != 0) return false;
    }
    return true;
  };
  return first_subset(m, pointwise_admissible);
}

Vec extend_functional(const PresentedSpace& v, const FunctionalP& phi) {
  FactorizationResult fr = factor_functional(v, phi);
  std::vector<int> cols = columns_of(v.factors, fr.j);
  // complete phi0 on T0's pivot columns, zero on the free ones
  Vec psi(v.ambient_dim(), 0);
  if (fr.t0.dim() > 0) {
    std::vector<int> piv = pivot_columns(fr.t0.basis());
    for (int i = 0; i < fr.t0.dim(); ++i) psi[cols[piv[i]]] = fr.phi0.coeffs[i];
  }
  return psi;
}

std::vector<FunctionalP> hom_functionals(const PresentedSpace& v) {
  std::vector<FunctionalP> out;
  out.reserve(v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    FunctionalP f;
    f.coeffs.assign(v.dim(), 0);
    f.coeffs[i] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

bool is_weak_iso(const MorphismP& m) {
  if (m.map.rows() != m.target.dim() || m.map.cols() != m.source.dim())
    throw std::invalid_argument("morphism shape mismatch");
  if (m.source.dim() != m.target.dim()) return false;
  // bijectivity of the map itself, and of the induced map on functionals;
  // the two are checked independently even though they coincide here
  bool bijective = rank(m.map) == m.source.dim();
  bool dual_bijective = rank(m.map.transpose()) == m.target.dim();
  return bijective && dual_bijective;
}

PullbackResult pullback_weak_iso(const MorphismP& f, const MorphismP& g) {
  if (!(f.target == g.target)) throw std::invalid_argument("pullback: target mismatch");
  Subspace pb = pullback_pair(f.map, g.map);  // inside dim(W) + dim(V')
  const int dw = f.source.dim();

  // present W' inside W x V': push intrinsic coordinates through the bases
  std::vector<PresentedSpace> facs = {f.source, g.source};
  PresentedSpace ambient_prod = product(facs);
  Matrix block(f.source.field, dw + g.source.dim(), ambient_prod.ambient_dim());
  for (int i = 0; i < f.source.dim(); ++i)
    for (int j = 0; j < f.source.sub.ambient_dim(); ++j)
      block.set(i, j, f.source.sub.basis()(i, j));
  for (int i = 0; i < g.source.dim(); ++i)
    for (int j = 0; j < g.source.sub.ambient_dim(); ++j)
      block.set(dw + i, f.source.sub.ambient_dim() + j, g.source.sub.basis()(i, j));
  Matrix gens = pb.basis() * block;
  PresentedSpace wp = {f.source.field, ambient_prod.factors,
                       Subspace::from_matrix_rows(gens)};

  // projections in intrinsic coordinates: split each canonical basis vector
  // of W' back into (W-part, V'-part) coefficients
  Matrix proj_w(f.source.field, dw, wp.dim());
  Matrix proj_v(f.source.field, g.source.dim(), wp.dim());
  for (int k = 0; k < wp.dim(); ++k) {
    Vec row = wp.sub.basis().row(k);
    Vec w_part(row.begin(), row.begin() + f.source.sub.ambient_dim());
    Vec v_part(row.begin() + f.source.sub.ambient_dim(), row.end());
    auto cw = f.source.sub.coordinates(w_part);
    auto cv = g.source.sub.coordinates(v_part);
    if (!cw || !cv) throw std::logic_error("pullback: component outside factor subspace");
    for (int i = 0; i < dw; ++i) proj_w.set(i, k, (*cw)[i]);
    for (int i = 0; i < g.source.dim(); ++i) proj_v.set(i, k, (*cv)[i]);
  }

  PullbackResult res{wp,
                     {wp, f.source, proj_w},
                     {wp, g.source, proj_v},
                     false};
  res.weak_iso_flag = is_weak_iso(res.proj_w);
  return res;
}

PresentedSpace sigma(const PresentedSpace& v) {
  const int d = v.dim();
  std::vector<int> factors(d, 1);
  // evaluation at the dual basis: intrinsic coordinates map to themselves
  return {v.field, std::move(factors), Subspace::full(v.field, d)};
}

MorphismP sigma_unit(const PresentedSpace& v) {
  return {v, sigma(v), Matrix::identity(v.field, v.dim())};
}

}  // namespace chu
