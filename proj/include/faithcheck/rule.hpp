#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "faithcheck/types.hpp"

#include "json.hpp"

namespace faithcheck {

enum class Metric { L2, Linf };

const char* metric_name(Metric m);
Metric parse_metric(const std::string& name);

// Distance between two feature vectors. Numeric coordinates contribute their
// difference; categorical coordinates contribute 0 when equal and +inf
// otherwise, so a token mismatch places a point outside every ball.
double distance(const std::vector<FeatureValue>& a, const std::vector<FeatureValue>& b,
                Metric metric);

// Axis-aligned region: per feature an optional strict lower bound (x > lo),
// an optional inclusive upper bound (x <= hi), a categorical pin (x == eq)
// or categorical exclusions (x != each of neq). An unconstrained rectangle
// applies to everything.
struct Hyperrectangle {
    struct Constraint {
        std::string feature;
        int index = -1;  // resolved against a schema; -1 = unresolved
        std::optional<double> lo;
        std::optional<double> hi;
        std::optional<std::string> eq;
        std::vector<std::string> neq;  // kept sorted
    };
    std::vector<Constraint> constraints;  // kept sorted by feature name

    Constraint& constraint_for(const std::string& feature);
};

// Required (position, token) pairs, e.g. highlighted words of a document.
struct TokenSubset {
    std::vector<std::pair<int, std::string>> tokens;  // kept sorted
};

// Strict ball around a center instance: distance(x, center) < radius.
struct OpenBall {
    Instance center;
    double radius = 0.0;
    Metric metric = Metric::L2;
};

using ScopedRule = std::variant<Hyperrectangle, TokenSubset, OpenBall>;

// Resolves feature names to positions in `schema`; throws ValidationError on
// unknown names. No-op for token subsets and balls.
void bind_rule(ScopedRule& rule, const Schema& schema);

bool rule_applies(const ScopedRule& rule, const Instance& x);

// Deterministic byte rendering; two rules are the same explanation iff their
// canonical strings match.
std::string canonical_rule(const ScopedRule& rule);

nlohmann::json rule_to_json(const ScopedRule& rule);
ScopedRule rule_from_json(const nlohmann::json& j);

}  // namespace faithcheck
