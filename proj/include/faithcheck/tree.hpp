#pragma once

#include <string>
#include <vector>

#include "faithcheck/trace.hpp"

#include "json.hpp"

namespace faithcheck {

// Axis-aligned binary surrogate tree. Leaves are explanations: each leaf id
// is a root-to-leaf path string (".", ".L", ".LR", ...) and the leaf's region
// is the conjunction of the tests along the path.
class SurrogateTree {
public:
    struct Node {
        // split (internal nodes)
        int feature = -1;  // -1 marks a leaf
        std::string feature_name;
        bool categorical = false;
        double threshold = 0.0;   // numeric: x <= threshold goes left
        std::string category;     // categorical: x == category goes left
        int left = -1;
        int right = -1;
        // leaf payload
        std::string label;
        std::string leaf_id;
    };

    SurrogateTree() = default;
    SurrogateTree(std::vector<Node> nodes, SchemaPtr schema);

    const std::vector<Node>& nodes() const { return nodes_; }
    const SchemaPtr& schema() const { return schema_; }
    int leaf_count() const { return leaf_count_; }

    int route(const Instance& x) const;  // leaf node index
    const std::string& leaf_label(const Instance& x) const { return nodes_[route(x)].label; }

    nlohmann::json to_json() const;
    static SurrogateTree from_json(const nlohmann::json& j, SchemaPtr schema);

private:
    std::vector<Node> nodes_;
    SchemaPtr schema_;
    int leaf_count_ = 0;

    void assign_leaf_ids();
    friend SurrogateTree fit_surrogate_tree(const std::vector<Instance>&,
                                            const std::vector<Label>&, int);
};

// Greedy top-down Gini splitter, deterministic by construction: numeric
// thresholds are midpoints between consecutive observed values, categorical
// splits are equality pins, ties go to the lowest feature index and then the
// smallest threshold (lexicographically smallest category). Growth is
// best-first by weighted impurity decrease and stops at max_leaves or purity.
// Impure nodes may be split at zero gain while budget remains.
SurrogateTree fit_surrogate_tree(const std::vector<Instance>& instances,
                                 const std::vector<Label>& labels, int max_leaves);

// Rule payload for x: the path hyperrectangle of x's leaf, keyed by the leaf
// id. applies(rule, x') holds exactly when x' routes to the same leaf.
ExplanationPayload explain_with_tree(const SurrogateTree& tree, const Instance& x);

}  // namespace faithcheck
