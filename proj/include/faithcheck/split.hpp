#pragma once

#include <utility>

#include "faithcheck/trace.hpp"

namespace faithcheck {

// Label-correlated population split: records with the positive label go to
// the first population with probability p, every other record with
// probability 1-p. The two outputs partition the input exactly; the seed
// fully determines the assignment. p must lie in (0,1) unless
// allow_boundary, which additionally admits the degenerate p=0 and p=1.
std::pair<Trace, Trace> split_populations(const Trace& trace, const Label& positive_label,
                                          double p, uint64_t seed, bool allow_boundary = false);

}  // namespace faithcheck
