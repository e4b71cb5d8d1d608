#pragma once

#include <cstdint>
#include <vector>

namespace faithcheck {

// sum_pi p(pi) * exp(-(n-1) * q(pi)). Requires p to sum to 1 and
// q(pi) >= p(pi) componentwise (each relation class contains its key class).
double bias_bound(const std::vector<double>& p, const std::vector<double>& q, int64_t n);

// 4/n + bias^2.
double mse_bound(int64_t n, double bias);

// ceil(range_e * (12/eps) * ln(3/eps)): unlabeled samples sufficient for an
// MSE of at most eps given `range_e` distinct explanations.
int64_t sample_size_for_epsilon(int64_t range_e, double epsilon);

}  // namespace faithcheck
