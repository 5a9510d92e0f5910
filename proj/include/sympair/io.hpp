#pragma once

#include <string>

#include <json.hpp>

#include "sympair/spectrum.hpp"

namespace sympair {

// All JSON is emitted with a deliberate, stable key order (nlohmann's
// ordered_json preserves insertion order); CSV uses a header row and LF
// line endings. Both are deterministic for fixed inputs.
using ordered_json = nlohmann::ordered_json;

// Canonical spec object: {q, p, e, k, m, t, m1, n, beta1, beta2, alphas[]}.
ordered_json spec_to_json(const CodeSpec& spec);

// Rebuild a spec. Accepts p+e or q for the field (when both are present
// they must agree); beta1/beta2/alphas are optional together — when absent
// the canonical points are used. Throws sympair::Error subclasses on bad
// values and nlohmann exceptions on malformed JSON.
CodeSpec spec_from_json(const ordered_json& j);

// Flat {"<weight>": count} map, keys numerically ascending.
ordered_json distribution_to_json(const WeightDistribution& wd);

// {"rows": [{weight, enumerated, closed_form, delta}...], "match": bool}
ordered_json diff_to_json(const DistributionDiff& diff);

ordered_json census_to_json(const CensusTable& table);

// "weight,enumerated,closed_form,delta" rows; exact match means delta 0.
std::string diff_to_csv(const DistributionDiff& diff);

// Same columns with closed_form and delta left empty (no formula given).
std::string distribution_to_csv(const WeightDistribution& wd);

// "class,enumerated,formula,delta" rows.
std::string census_to_csv(const CensusTable& table);

}  // namespace sympair
