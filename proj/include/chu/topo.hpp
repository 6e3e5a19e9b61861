#pragma once

#include <stdexcept>
#include <vector>

#include "chu/matrix.hpp"

namespace chu {

// A subspace of a finite product of finite-dimensional discrete spaces.
// Model facts, asserted in tests rather than encoded in types: with K
// discrete and everything finite-dimensional, Hausdorff forces the discrete
// topology, every subspace is closed, and every linear map is continuous.
// In particular the coarsest and the finest topology with a given set of
// functionals coincide, so both retopologizations are the identity on
// underlying spaces; sigma below only renormalizes the presentation, and no
// separate strong-topology operation exists in this model.
struct PresentedSpace {
  FieldSpec field;
  std::vector<int> factors;  // dimensions d_1..d_m of the product factors
  Subspace sub;              // subspace of the concatenated ambient

  int ambient_dim() const {
    int d = 0;
    for (int f : factors) d += f;
    return d;
  }
  int dim() const { return sub.dim(); }

  bool operator==(const PresentedSpace&) const = default;
};

PresentedSpace make_presented(FieldSpec f, std::vector<int> factors,
                              const std::vector<Vec>& generators);
PresentedSpace product(const std::vector<PresentedSpace>& vs);

// A functional on the subspace, in the subspace's intrinsic basis.
struct FunctionalP {
  Vec coeffs;  // length = dim(sub)
  bool operator==(const FunctionalP&) const = default;
};

// phi = phi0 after projection to the J-factors; J of minimum cardinality,
// lexicographic tie-break. `certified` records whether the search was the
// exhaustive one (it is, up to 15 factors) or the greedy fallback.
struct FactorizationResult {
  std::vector<int> j;
  Subspace t0;       // projection of the subspace to the J-restricted ambient
  FunctionalP phi0;  // induced functional on t0
  bool certified = true;
};

FactorizationResult factor_functional(const PresentedSpace& v, const FunctionalP& phi);
// Independent brute-force oracle: admissibility decided by enumerating the
// subspace pointwise, not by linear algebra. Requires <= 15 factors and a
// subspace small enough to enumerate.
std::vector<int> minimal_j_oracle(const PresentedSpace& v, const FunctionalP& phi);

// Ambient row psi with psi restricted to the subspace equal to phi:
// factor through J, complete on T0's pivot columns, zeros elsewhere.
Vec extend_functional(const PresentedSpace& v, const FunctionalP& phi);

// Full dual basis of the subspace (all functionals are continuous here).
std::vector<FunctionalP> hom_functionals(const PresentedSpace& v);

// Linear map between presented spaces in intrinsic coordinates.
struct MorphismP {
  PresentedSpace source;
  PresentedSpace target;
  Matrix map;  // dim(target) x dim(source)
};

bool is_weak_iso(const MorphismP& m);

struct PullbackResult {
  PresentedSpace w_prime;  // presented inside W x V'
  MorphismP proj_w;
  MorphismP proj_v;
  bool weak_iso_flag = false;  // is_weak_iso(W' -> W)
};
PullbackResult pullback_weak_iso(const MorphismP& f, const MorphismP& g);

// Retopologization as a subspace of K^{Hom(V,K)}: the image of the evaluation
// map in dual-basis coordinates, over dim(v) one-dimensional factors.
PresentedSpace sigma(const PresentedSpace& v);

// Evaluation morphism v -> sigma(v) (the identity in intrinsic coordinates).
MorphismP sigma_unit(const PresentedSpace& v);

}  // namespace chu
