#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "faithcheck/estimator.hpp"
#include "faithcheck/worlds.hpp"

namespace faithcheck {

struct SweepRow {
    double param = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  // sample std over repetitions; 0 for a single run
    double uniqueness = 0.0;
};

struct SweepResult {
    std::string measure;  // "consistency" or "sufficiency"
    std::vector<SweepRow> rows;
    int repetitions = 1;
    uint64_t seed = 0;
};

// "param,mean,std,uniqueness" rows, ready for plotting.
void write_sweep_csv(const SweepResult& result, std::ostream& out);
void write_sweep_csv(const SweepResult& result, const std::string& path);

// Estimator quality as a function of sample size: for each n, draws
// `repetitions` traces from the world and runs the global estimator.
// Repetitions use derived streams and may run in parallel; assembly order is
// fixed by (grid index, repetition).
SweepResult sweep_samples(const World& world, int track, const std::vector<int>& n_grid,
                          int repetitions, RelationMode mode, ExecMode exec = kDefaultExec);

struct ThresholdSweepResult {
    SweepResult consistency;
    SweepResult sufficiency;
    std::vector<int> unreached;  // per threshold: anchors that missed it
};

// Anchor quality as a function of the precision threshold: every evaluation
// record is re-explained by find_anchor against a search sample, then both
// relation modes are estimated on the anchored trace.
ThresholdSweepResult sweep_threshold(const Trace& eval, const Trace& search,
                                     const std::vector<double>& thresholds,
                                     ExecMode exec = kDefaultExec);
ThresholdSweepResult sweep_threshold(const World& world, int track,
                                     const std::vector<double>& thresholds, int eval_n,
                                     int search_n, ExecMode exec = kDefaultExec);

}  // namespace faithcheck
