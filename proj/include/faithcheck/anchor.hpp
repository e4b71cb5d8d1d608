#pragma once

#include <optional>

#include "faithcheck/trace.hpp"

namespace faithcheck {

// Same-label fraction of the trace records the rule covers; absent when the
// rule covers none of them.
std::optional<double> precision(const ScopedRule& rule, const Label& label, const Trace& trace);

struct AnchorResult {
    ScopedRule rule;
    std::optional<double> precision;  // empirical, on the search sample
    bool threshold_met = false;
};

// Greedy anchor search: starting from the unconstrained hyperrectangle,
// repeatedly add the single constraint with the highest empirical precision
// (numeric features: cut the covered value range at its midpoint, keeping
// x's side; categorical features: pin to x's token) until the precision
// target is met or the covered set cannot shrink further. When the target is
// unreachable the shortest maximal-precision prefix is returned with
// threshold_met = false.
//
// Because the greedy path does not depend on the threshold, the rule for a
// higher threshold always carries a superset of the constraints chosen for a
// lower one.
AnchorResult find_anchor(const Instance& x, const Label& label, const Trace& search_sample,
                         double threshold);

}  // namespace faithcheck
