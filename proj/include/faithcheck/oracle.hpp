#pragma once

#include <vector>

#include "faithcheck/exec.hpp"
#include "faithcheck/finite_system.hpp"

namespace faithcheck {

// Exact faithfulness measures on enumerated systems. These are the ground
// truth the sampled estimators are validated against.

// Mass-weighted same-label fraction over the points sharing point's key.
// The point itself is a member of its own class, so the value is defined.
double exact_local_consistency(const FiniteSystem& sys, int point);

// Same, over the points the applicability relation accepts for point's key.
double exact_local_sufficiency(const FiniteSystem& sys, int point);

double exact_global_consistency(const FiniteSystem& sys, ExecMode exec = kDefaultExec);
double exact_global_sufficiency(const FiniteSystem& sys, ExecMode exec = kDefaultExec);

struct DecoderReport {
    double gibbs_error = 0.0;          // sum_pi Pr(pi) sum_y Pr(y|pi)(1 - Pr(y|pi))
    double deterministic_error = 0.0;  // sum_pi Pr(pi) (1 - max_y Pr(y|pi))
    double consistency_from_gibbs = 0.0;
};

DecoderReport decoder_report(const FiniteSystem& sys);

// Label the optimal deterministic decoder assigns to a key; argmax ties go to
// the lexicographically smallest label.
std::string decode_deterministic(const FiniteSystem& sys, int key);

// 1 - sum_pi mass_pi * (1 - sum_y p(y|pi)^2). Must agree with
// exact_global_consistency of the induced equality-relation system.
double tree_consistency_via_gini(const std::vector<double>& leaf_masses,
                                 const std::vector<std::vector<double>>& leaf_label_dists);

// E[M-hat] for an n-sample trace drawn from the system (exact expectation of
// the plug-in estimator under either relation).
double expected_estimate(const FiniteSystem& sys, bool applicability, int64_t n);

// MSE bound 4/n + (sum_pi p(pi) e^{-(n-1) q(pi)})^2 evaluated with the
// system's exact p and q.
double exact_mse_bound(const FiniteSystem& sys, bool applicability, int64_t n);

}  // namespace faithcheck
