#pragma once

#include <json.hpp>

#include "chu/chu_core.hpp"
#include "chu/fincat.hpp"
#include "chu/laws.hpp"
#include "chu/modring.hpp"
#include "chu/topo.hpp"

namespace chu {

using json = nlohmann::json;

// Matrix: {"p":p,"rows":r,"cols":c,"entries":[row-major]}
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// ChuObject: {"p":p,"dimA":a,"dimX":x,"P":[row-major]}
json to_json(const ChuObject& o);
ChuObject chu_from_json(const json& j);

// ChuMorphism: source/target objects plus row-major "F","G"
json to_json(const ChuMorphism& m);
ChuMorphism chu_morphism_from_json(const json& j);

// PresentedSpace: {"p":p,"factors":[d..],"basis":[[row]..]}
json to_json(const PresentedSpace& v);
PresentedSpace presented_from_json(const json& j);

// NilModule: {"p":p,"n":n,"dim":d,"X":[row-major]}
json to_json(const NilModule& m);
NilModule nilmodule_from_json(const json& j);

// ChuKObject: modules plus pairing as an array of n row-major matrices
json to_json(const ChuKObject& o);
ChuKObject chuk_from_json(const json& j);

json to_json(const LawReport& r);
json to_json(const Counterexample& c);
Counterexample counterexample_from_json(const json& j);

// FinCat: objects, arrows (id, src, tgt), composition as an arrow-pair table
json to_json(const FinCat& c);
CatPtr fincat_from_json(const json& j);
json to_json(const FinFunctor& f);      // tables only; categories held by context
json to_json(const NatTrans& n);
json to_json(const SituationData& s);   // bundles categories, functors, components
SituationData situation_from_json(const json& j);

}  // namespace chu
