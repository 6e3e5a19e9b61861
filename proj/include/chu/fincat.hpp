#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chu {

// A finite category as lookup tables: arrows carry source/target, composition
// is a table, identities are designated arrows. validate() checks the axioms
// exhaustively; every construction in this module goes through it.
struct FinCat {
  std::vector<std::string> objects;
  struct Arrow {
    int src = 0;
    int tgt = 0;
    std::string name;
  };
  std::vector<Arrow> arrows;
  std::vector<int> identity;          // per object
  std::vector<std::vector<int>> comp;  // comp[g][f] = g o f, -1 if undefined

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_arrows() const { return static_cast<int>(arrows.size()); }
  int compose(int g, int f) const;  // g after f
  std::vector<int> hom(int a, int b) const;
  std::optional<int> inverse_of(int f) const;
  bool is_iso(int f) const { return inverse_of(f).has_value(); }

  std::vector<std::string> validate() const;  // empty = ok
  void check_valid() const;                   // throws on defects
};

using CatPtr = std::shared_ptr<const FinCat>;

struct FinFunctor {
  CatPtr src;
  CatPtr tgt;
  std::vector<int> obj_map;
  std::vector<int> arr_map;

  int on_obj(int o) const { return obj_map[o]; }
  int on_arr(int a) const { return arr_map[a]; }
  std::vector<std::string> validate() const;
  void check_valid() const;
};

FinFunctor identity_functor(CatPtr c);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);  // g o f
bool functors_equal(const FinFunctor& a, const FinFunctor& b);
bool is_fully_faithful(const FinFunctor& f);

struct NatTrans {
  FinFunctor from;
  FinFunctor to;
  std::vector<int> component;  // per source object, an arrow of the target cat

  int at(int obj) const { return component[obj]; }
  std::vector<std::string> validate() const;  // shapes + naturality squares
  void check_valid() const;
};

NatTrans identity_nat(const FinFunctor& f);
// whisker a functor on the left/right: H * eta and eta * H
NatTrans whisker_left(const FinFunctor& h, const NatTrans& eta);
NatTrans whisker_right(const NatTrans& eta, const FinFunctor& h);
NatTrans vcompose(const NatTrans& later, const NatTrans& earlier);
bool is_iso_nat(const NatTrans& eta);

// An adjunction F -| G packaged as unit/counit with triangle identities.
struct Adjunction {
  FinFunctor left;    // F : A -> B
  FinFunctor right;   // G : B -> A
  NatTrans unit;      // 1_A -> GF
  NatTrans counit;    // FG -> 1_B
  std::vector<std::string> validate() const;
};

// The appendix situation: full subcategory inclusions I : B -> C (reflective,
// with reflector S) and J : D -> C (coreflective, with coreflector T),
// plus the theorem's two iso hypotheses.
struct SituationData {
  CatPtr c;
  CatPtr b;
  CatPtr d;
  FinFunctor i;   // B -> C
  FinFunctor j;   // D -> C
  FinFunctor s;   // C -> B, S -| I
  FinFunctor t;   // C -> D, J -| T
  NatTrans alpha;  // 1_C -> IS, the unit of S -| I (the hypothesis below
                   //  whiskers it to JT(alpha) : JT -> JTIS)
  NatTrans beta;   // SI -> 1_B, iso
  NatTrans delta;  // 1_D -> TJ, iso
  NatTrans eps;    // JT -> 1_C
  std::string name;
};

std::vector<std::string> validate_instance(const SituationData& s);

// mu f : C -> ISC' = ISf o (IS eps_C)^{-1} o alpha_C, for f : JTC -> C'
int mu(const SituationData& s, int c_obj, int f);
// nu g : JTC -> C' = eps_C' o (JT alpha_C')^{-1} o JTg, for g : C -> ISC'
int nu(const SituationData& s, int c_prime_obj, int g);

struct TheoremReport {
  bool ok = true;
  std::vector<std::string> failures;
  int hom_pairs_checked = 0;
};
// mu and nu are mutually inverse on every hom-set: JT -| IS, verified literally.
TheoremReport check_theorem(const SituationData& s);

// A functor with both adjoints: L -| F -| R.
struct TripleAdjunction {
  Adjunction lf;  // L -| F
  Adjunction fr;  // F -| R
  std::string name;
  std::vector<std::string> validate() const;
};

struct TwoAdjReport {
  bool ok = true;
  bool left_ff = false;
  bool right_ff = false;
  std::string detail;
};
TwoAdjReport check_2adj(const TripleAdjunction& t);

struct CorollaryReport {
  bool ok = true;
  std::vector<std::string> failures;
};
// JTI -| S and T -| ISJ hom bijections, full-faithfulness of JTI and ISJ, and
// the TI -| SJ adjoint equivalence (triangles plus componentwise-iso unit and
// counit), all exhaustive.
CorollaryReport check_corollaries(const SituationData& s);

struct SquareError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCommuting : SquareError {
  NotCommuting() : SquareError("square does not commute") {}
};
struct NotIso : SquareError {
  NotIso() : SquareError("required arrow is not an isomorphism") {}
};

// Commutative square g o f = k o h with f : A->B, g : B->D, h : A->C,
// k : C->D. Requires f and k iso; returns the half-inverted square, and the
// fully inverted one when g and h are iso too.
struct SquareInversion {
  int f_inv = -1;
  int k_inv = -1;
  bool half_commutes = false;
  std::optional<int> g_inv;
  std::optional<int> h_inv;
  bool full_commutes = false;
};
SquareInversion invert_square(const FinCat& cat, int f, int g, int h, int k);

// Canned instances. All validate exhaustively at construction.
SituationData situation_trivial();
SituationData situation_poset2();   // the 2-chain 0 <= 1
SituationData situation_nonthin();  // two isomorphic objects with an idempotent
TripleAdjunction triple_identity();
TripleAdjunction triple_zero_object();  // L and R collapse a 2-element hom-set
// L = JTI -| S -| I = R, extracted from a validated situation.
TripleAdjunction triple_from_situation(const SituationData& s);

}  // namespace chu
