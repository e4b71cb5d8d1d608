#pragma once

#include <string>
#include <vector>

#include "faithcheck/trace.hpp"

namespace faithcheck {

// Coarsening maps from continuous explanation payloads to small key spaces.
// Estimation needs repeated keys; these are the standard ways to get them.

enum class DiscretizerFamily { Importance, Counterfactual };

enum class ImportanceMethod {
    Original,   // keep the vector as is
    Fp,         // floor each phi_i at k decimal digits (toward -inf)
    Sign,       // componentwise -1/0/+1
    Rank,       // ascending argsort, stable on ties
    SignOfTop,  // sign on the m largest-|phi| coordinates, 0 elsewhere
};

enum class CounterfactualMethod {
    Original,          // keep x_cf as is
    Delta,             // x_cf - x
    DeltaSign,         // sign(x_cf - x)
    IsFeatureModified, // 1 where x_i == x_cf_i, 0 where modified
};

struct DiscretizerSpec {
    DiscretizerFamily family = DiscretizerFamily::Importance;
    ImportanceMethod importance_method = ImportanceMethod::Original;
    CounterfactualMethod counterfactual_method = CounterfactualMethod::Original;
    int fp_digits = 1;  // k >= 1
    int top_m = 5;      // m >= 1

    // Method strings: original | fp:<k> | sign | rank | sign-of-top:<m> |
    // delta | delta-sign | is-feature-modified. "original" needs the family
    // hint; everything else determines its family.
    static DiscretizerSpec parse(const std::string& method,
                                 std::optional<DiscretizerFamily> family_hint = {});
    std::string method_string() const;
};

// Vector-level transforms, exposed so coarsening laws (e.g. 1-digit flooring
// factors through 2-digit flooring) can be checked directly.
std::vector<double> discretize_importance_vector(const std::vector<double>& phi,
                                                 const DiscretizerSpec& spec);
std::vector<double> discretize_counterfactual_vector(const std::vector<double>& x,
                                                     const std::vector<double>& x_cf,
                                                     const DiscretizerSpec& spec);

std::string discretize_importance(const std::vector<double>& phi, const DiscretizerSpec& spec);
std::string discretize_counterfactual(const std::vector<double>& x,
                                      const std::vector<double>& x_cf,
                                      const DiscretizerSpec& spec);

// New trace with every record's key replaced by the discretized key; records,
// labels, order, and payload content are preserved. Every payload kind must
// match the spec's family.
Trace discretize_trace(const Trace& trace, const DiscretizerSpec& spec);

}  // namespace faithcheck
