#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "chu/matrix.hpp"

namespace chu {

// A pair of carriers with a bilinear pairing <a,x> = a^T * P * x. No rank
// condition: general objects are allowed, separated/extensional is a flag.
struct ChuObject {
  FieldSpec field;
  int dim_a = 0;
  int dim_x = 0;
  Matrix pairing;  // dim_a x dim_x

  ChuObject() = default;
  ChuObject(FieldSpec f, int a, int x, Matrix p);

  bool operator==(const ChuObject&) const = default;
};

void validate_object(const ChuObject& o);
i64 eval_pairing(const ChuObject& o, const Vec& a, const Vec& x);

// (f,g) : (A,X) -> (B,Y) with <fa,y> = <a,gy>, i.e. F^T*Q = P*G.
// F is dimB x dimA, G is dimX_source x dimY_target.
struct ChuMorphism {
  ChuObject source;
  ChuObject target;
  Matrix f;
  Matrix g;

  bool operator==(const ChuMorphism&) const = default;
};

struct AdjointnessViolated : std::runtime_error {
  int row, col;
  AdjointnessViolated(int r, int c)
      : std::runtime_error("morphism condition fails at entry (" +
                           std::to_string(r) + "," + std::to_string(c) + ")"),
        row(r), col(c) {}
};

// First failing entry of F^T*Q = P*G, if any.
std::optional<std::pair<int, int>> morphism_defect(const ChuMorphism& m);
void validate_morphism(const ChuMorphism& m);  // throws AdjointnessViolated
bool is_morphism(const ChuMorphism& m);

ChuMorphism identity_morphism(const ChuObject& o);
ChuMorphism compose(const ChuMorphism& m2, const ChuMorphism& m1);  // m2 after m1
bool is_isomorphism(const ChuMorphism& m);

ChuObject dual(const ChuObject& o);
ChuObject unit_object(FieldSpec f);
// The dualizing object (K, unit-of-Asc); over a field both carriers are
// one-dimensional, so it coincides with the tensor unit.
ChuObject dualizing_object(FieldSpec f);

struct SepExtFlags {
  bool separated = false;
  bool extensional = false;
  bool operator==(const SepExtFlags&) const = default;
};
SepExtFlags sep_ext_flags(const ChuObject& o);

enum class ReflectSide { Separated, Extensional };

// S quotients the A-carrier by the left kernel of the pairing and returns the
// unit o -> S(o); E quotients the X-carrier by the right kernel and returns
// the counit E(o) -> o.
struct Reflection {
  ChuObject object;
  ChuMorphism morphism;
};
Reflection reflect(const ChuObject& o, ReflectSide side);

// Solution space of the morphism condition inside vec(F) ++ vec(G)
// (row-major, F block first). Its dimension is the hom-object dimension.
Subspace hom_basis(const ChuObject& s, const ChuObject& t);

// Unpacked basis element of hom_basis(s, t).
struct HomPair {
  Matrix f;
  Matrix g;
};
HomPair unvec_hom_pair(const ChuObject& s, const ChuObject& t, const Vec& v);
Vec vec_hom_pair(const ChuObject& s, const ChuObject& t, const HomPair& p);

ChuObject internal_hom(const ChuObject& s, const ChuObject& t);
ChuObject tensor(const ChuObject& s, const ChuObject& t);

struct RecoverGResult {
  enum class Status { Unique, NonUnique, NotAMorphism };
  Status status;
  std::optional<Matrix> g;        // a particular solution (free vars zeroed)
  std::optional<Subspace> slack;  // kernel of P: per-column freedom in G
};
RecoverGResult recover_g(const ChuObject& s, const ChuObject& t, const Matrix& f);

}  // namespace chu
