#pragma once

#include <optional>
#include <vector>

#include "faithcheck/trace.hpp"

namespace faithcheck {

struct PrototypeSet {
    std::vector<Instance> prototypes;  // nonempty
    Metric metric = Metric::L2;
    std::optional<double> tau;  // required for the tau-ball option
};

enum class KnnOption { Nearest, TauBall };

// Explains x by its nearest prototype (ties: lowest prototype index). The
// nearest option yields an opaque payload keyed by the prototype id; the
// tau-ball option additionally attaches a ball of radius tau around the
// prototype. The ball comparison is closed (d <= tau), realized as an open
// ball with radius inflated by a factor (1 + 1e-12).
ExplanationPayload knn_explain(const PrototypeSet& protos, const Instance& x, KnnOption option);

// The region a counterfactual pair certifies: the open ball around x of
// radius d(x, x_cf). Throws ValidationError when the distance is zero or not
// finite (identical points, or a categorical-only difference).
ScopedRule counterfactual_to_rule(const Instance& x, const Instance& x_cf, Metric metric);

}  // namespace faithcheck
