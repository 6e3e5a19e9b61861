#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "chu/matrix.hpp"
#include "chu/rng.hpp"

namespace chu {

// K = F_p[x]/(x^n); ring elements are coefficient vectors of length n.
struct RingSpec {
  FieldSpec k;
  int n = 1;

  RingSpec() = default;
  RingSpec(FieldSpec field, int degree) : k(field), n(degree) {
    if (degree < 1) throw std::invalid_argument("nilpotency degree must be >= 1");
  }
  bool operator==(const RingSpec&) const = default;
};

struct NilpotencyViolated : std::runtime_error {
  NilpotencyViolated() : std::runtime_error("X^n != 0") {}
};

// A K-module as a k-space with the action of x as a nilpotent operator.
struct NilModule {
  RingSpec ring;
  int dim = 0;
  Matrix x_action;  // dim x dim, X^n = 0

  bool operator==(const NilModule&) const = default;
};

NilModule make_module(RingSpec ring, Matrix x_action);  // validates
void validate_module(const NilModule& m);               // throws NilpotencyViolated

// K/(x^i) on the basis m, xm, ..., x^{i-1}m (an i x i Jordan block).
// i = n gives the free module K itself.
NilModule cyclic(RingSpec ring, int i);
NilModule direct_sum(const NilModule& a, const NilModule& b);
NilModule free_power(RingSpec ring, int r);  // K^r

struct KLinearMap {
  NilModule source;
  NilModule target;
  Matrix map;  // dim(target) x dim(source), map*X_src = X_tgt*map
};

bool is_k_linear(const KLinearMap& f);
void validate_k_linear(const KLinearMap& f);

// Solution space of F*X1 = X2*F, vectorized row-major.
Subspace hom_K_basis(const NilModule& m1, const NilModule& m2);

// Hom_k(M, k) with x acting by (x.f)(a) = f(x.a): the transpose action.
NilModule dual_module(const NilModule& m);

// The K-linear isomorphism K -> Hom_k(K, k) sending x^i to the dual basis
// vector of x^{n-1-i} (the anti-diagonal matrix). With exponents ranging over
// 0..n-1 the pairing index must be delta_{i+j,n-1}: delta_{i+j,n} would send
// 1 to 0 and could not be injective.
KLinearMap self_dual_iso(RingSpec ring);

// psi with psi o incl = phi; guaranteed to exist by self-injectivity, so a
// nullopt return is a falsification event, not a user error.
std::optional<KLinearMap> extend_hom(const KLinearMap& incl, const KLinearMap& phi);

// x^j m -> x^{n-i+j} : cyclic(i) into K, injective and K-linear.
KLinearMap embed_cyclic(RingSpec ring, int i);

struct CogeneratorEmbedding {
  int r = 0;                    // number of cyclic summands peeled off
  std::vector<int> parts;      // their orders, non-increasing
  KLinearMap embedding;        // injective map into K^r
};
CogeneratorEmbedding cogenerator_embed(const NilModule& m);

struct KTensor {
  NilModule module;
  Matrix projection;  // from the k-tensor ambient (d1*d2) onto the quotient
  Matrix section;     // right inverse of projection
};
KTensor tensor_K(const NilModule& m1, const NilModule& m2);

// Independent route to dim(M (x)_K N): the space of k-bilinear maps
// beta with beta(x.a, b) = beta(a, x.b).
int tensor_dim_oracle(const NilModule& m1, const NilModule& m2);

struct CheckReport {
  bool ok = true;
  std::string detail;
};
CheckReport baer_adjunction_check(const NilModule& b);

// Pairing M x N -> K stored as n component matrices,
// <a,b> = sum_t (a^T P_t b) x^t, with X_M^T P_t = P_{t-1} = P_t X_N.
struct ChuKObject {
  NilModule m;
  NilModule n_mod;
  std::vector<Matrix> p;  // n components, each dim(m) x dim(n_mod)

  bool operator==(const ChuKObject&) const = default;
};

void chuK_validate(const ChuKObject& o);
ChuKObject chuK_dual(const ChuKObject& o);

struct SepExtFlagsK {
  bool separated = false;    // left kernel {a : a^T P_t = 0 for all t} is zero
  bool extensional = false;  // right kernel is zero
  bool operator==(const SepExtFlagsK&) const = default;
};
SepExtFlagsK chuK_flags(const ChuKObject& o);

struct ChuKReduction {
  ChuKObject object;
  Matrix quotient;  // on the reduced side
};
enum class ChuKSide { Separated, Extensional };
ChuKReduction chuK_reduce(const ChuKObject& o, ChuKSide side);

// Morphism pairs (F: M -> M', G: N' -> N), both K-linear, with
// F^T Q_t = P_t G for every component t. F block first, row-major.
Subspace chuK_hom_basis(const ChuKObject& s, const ChuKObject& t);

// The regular pairing <a,b> = ab on K x K.
ChuKObject chuK_regular(RingSpec ring);

// Samplers used by the verification campaigns and the CLI.
NilModule random_module(Rng& rng, RingSpec ring, int max_dim);
// A submodule generated by a few random vectors, with its inclusion.
KLinearMap random_submodule_inclusion(Rng& rng, const NilModule& b, int max_gens);
// A random K-linear functional M -> K.
KLinearMap random_functional(Rng& rng, const NilModule& m);

}  // namespace chu
