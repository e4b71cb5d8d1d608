#pragma once

#include <string>
#include <vector>

#include "faithcheck/types.hpp"

namespace faithcheck {

// Canonical decimal rendering used inside explanation keys: 12 significant
// digits, "-0" collapsed to "0". Key equality therefore tolerates sub-1e-12
// arithmetic noise while staying deterministic across platforms.
std::string render_sig12(double value);

// Shortest round-trip rendering (for CSV cells and similar storage, where the
// exact double must survive a reload).
std::string render_exact(double value);

// Double-quoted token with backslash escapes; used wherever a categorical
// token participates in a canonical key.
std::string quote_token(const std::string& token);

// "[a,b,c]" with render_sig12 per element.
std::string canonical_vector(const std::vector<double>& values);

// Features rendered canonically: numbers via render_sig12, tokens quoted.
std::string canonical_features(const std::vector<FeatureValue>& features);

}  // namespace faithcheck
