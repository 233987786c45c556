#pragma once

#include <string>

#include <json.hpp>

#include "twobridge/distributions.hpp"
#include "twobridge/insertions.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/sampler.hpp"
#include "twobridge/word.hpp"

namespace twobridge::io {

using nlohmann::json;

json to_json(const KnotClass& k);
json to_json(const LocationSet& locations);
json to_json(const ReconstructionStep& step);
/// Array of step records, one per location index.
json to_json(const ReconstructionTrace& trace);
json to_json(const ExternalDecomposition& d);

/// {"n": n, "unknot": "p/q", "pmf": {"3": "p/q", ...}}
json to_json(const CrossingPmf& pmf);
/// Crossing histogram in the pmf schema, plus per-class probabilities under "knots".
json to_json(const oracle::ExactDist& dist);
/// Pmf schema with count-based fractions, plus seed/count metadata.
json to_json(const SampleReport& report);

/// Columns c,numerator,denominator,float; c = 0 is the unknot.
std::string to_csv(const CrossingPmf& pmf);
std::string to_csv(const oracle::ExactDist& dist);
std::string to_csv(const SampleReport& report);

}  // namespace twobridge::io
