// JSON wire formats:
//   sequence       {"period": q, "values": [I_1, ..., I_q]}
//   decomposition  {"coefficients": {"k": "a_k"}} with rationals as "p/q"
//   complex        {"simplices": [[v, ...], ...]} (faces auto-closed, warning)
//   pair           {"total": <complex>, "sub": <complex>} or a bare complex
//   chain map      {"matrices": [[[row], ...] per dimension 0..3]}
//   plan           {"coefficients", "disk_families", "annulus_families", "geometry"}
#pragma once

#include <json.hpp>

#include "fpindex/homology.hpp"
#include "fpindex/realization.hpp"
#include "fpindex/sequence_algebra.hpp"

namespace fpindex {

using nlohmann::json;

json sequence_to_json(const PeriodicSequence& seq);
PeriodicSequence sequence_from_json(const json& j);

json decomposition_to_json(const DoldDecomposition& d);
DoldDecomposition decomposition_from_json(const json& j);

json witness_to_json(const DoldWitness& w);

json root_form_to_json(const RootOfUnityForm& f);

// warnings (if non-null) receives a note when faces had to be auto-closed.
SimplicialComplex complex_from_json(const json& j, std::string* warnings = nullptr);
SimplicialPair pair_from_json(const json& j, std::string* warnings = nullptr);

json homology_to_json(const std::array<HomologyGroup, kMaxDim + 1>& groups);

IntMatrix matrix_from_json(const json& j);
ChainMap chain_map_from_json(const json& j);

json plan_to_json(const RealizationPlan& plan);
RealizationPlan plan_from_json(const json& j);

}  // namespace fpindex
