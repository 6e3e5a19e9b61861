#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chu/chu_core.hpp"
#include "chu/rng.hpp"
#include "chu/topo.hpp"

namespace chu {

// The *-autonomous law catalog. Every law is checked through its canonical
// witness (an explicitly constructed morphism or linear map), never by
// searching for an isomorphism.
enum class LawId { L1, L2, L3, L4, L5, L6, L7, L8, L9, L10 };

const char* law_name(LawId id);
LawId law_from_name(const std::string& name);  // throws on unknown
std::string law_statement(LawId id);

struct TrialSpec {
  FieldSpec field;
  int max_dim = 4;
  int samples = 200;
  std::uint64_t seed = 0;
};

struct Counterexample {
  LawId law;
  int trial = 0;
  std::vector<ChuObject> objects;
  std::string detail;
};

struct LawReport {
  LawId law;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<Counterexample> failures;
  double elapsed_seconds = 0;  // not serialized: reports stay byte-deterministic
  bool pass() const { return failures.empty(); }
};

LawReport run_law(LawId id, const TrialSpec& spec);

// Single-instance witnesses (run_law samples objects and calls these; the CLI
// and the replay machinery call them on pinned objects).
struct WitnessResult {
  bool ok = true;
  std::string detail;
};
WitnessResult check_law_instance(LawId id, const std::vector<ChuObject>& objects);

// How many objects each law consumes when run on pinned instances.
int law_arity(LawId id);

// Samplers.
ChuObject random_chu(Rng& rng, FieldSpec f, int max_dim);
ChuObject random_sep_ext(Rng& rng, FieldSpec f, int max_dim);  // rejection
ChuObject random_separated(Rng& rng, FieldSpec f, int max_dim);
ChuObject random_extensional(Rng& rng, FieldSpec f, int max_dim);

// --- the main theorem ---------------------------------------------------

// F(V) = (|V|, Hom(V,K)) with evaluation as pairing: in the intrinsic basis
// and its dual basis this is (d, d, I_d).
ChuObject functor_F(const PresentedSpace& v);

struct NotSeparated : std::runtime_error {
  NotSeparated() : std::runtime_error("functor_R requires a separated object") {}
};
// R(A,X) = A topologized as a subobject of K^X: the row space of the pairing
// presented over dimX one-dimensional factors.
PresentedSpace functor_R(const ChuObject& o);

struct TheoremCheck {
  bool ok = true;
  std::string detail;
};
// Every functional on R(o) is a theta-combination of coordinate functionals
// and the induced map X -> Hom(R(o),K) is a bijection.
TheoremCheck check_FR_identity(const ChuObject& o);
// R(F(v)) equals sigma(v) as canonical presented spaces.
TheoremCheck check_RF_equals_sigma(const PresentedSpace& v);
// End(K) is one-dimensional: the canonical map unit -> K -o K is an iso.
TheoremCheck end_of_K_check(FieldSpec f);

}  // namespace chu
