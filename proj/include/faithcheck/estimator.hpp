#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "faithcheck/exec.hpp"
#include "faithcheck/trace.hpp"

#include "json.hpp"

namespace faithcheck {

// Which relation the counts use: key equality measures consistency,
// rule applicability measures sufficiency.
enum class RelationMode { Equality, Applicability };

const char* relation_measure_name(RelationMode mode);

struct BoundDiagnostics {
    double variance_bound = 0.0;  // 4/n
    double bias_bound = 0.0;
    double mse_bound = 0.0;
    std::string source;  // "oracle" or "plug-in"
};

struct KeyCounts {
    int64_t relation_count = 0;                 // N_pi under the active relation
    std::map<std::string, int64_t> label_counts;  // N_{pi,y}
};

struct FaithfulnessReport {
    RelationMode mode = RelationMode::Equality;
    double estimate = 0.0;
    int64_t n = 0;
    double uniqueness = 0.0;  // always computed with key-equality multiplicities
    int64_t skipped = 0;      // records whose class held no other sample
    std::map<std::string, KeyCounts> per_key;
    std::optional<BoundDiagnostics> bounds;
};

nlohmann::json report_to_json(const FaithfulnessReport& report);

struct EstimateOptions {
    ExecMode exec = kDefaultExec;
    bool plugin_bounds = false;  // attach empirical-p/q diagnostics
};

// Plug-in estimate of the generic faithfulness measure:
//   M = (1/n) sum_i 1(N_{e(x_i)} > 1) * (N_{e(x_i), f(x_i)} - 1) / (N_{e(x_i)} - 1)
// Records whose class was seen only once contribute 0 and are tallied in
// `skipped`. Applicability mode requires an evaluable rule on every record
// and rejects records whose rule disagrees with others sharing their key.
FaithfulnessReport estimate_global(const Trace& trace, RelationMode mode,
                                   const EstimateOptions& options = {});

struct LocalEstimate {
    std::optional<double> consistency;   // absent when no shared-key sample exists
    std::optional<double> sufficiency;   // absent without a rule or covered sample
};

// Local measures of a single query against a trace. If the query itself is a
// member of the trace, one matching record is excluded from both counts,
// mirroring the global estimator's self-exclusion. Empty denominators yield
// absent values rather than 0 or 1.
LocalEstimate estimate_local(const Trace& trace, const TraceRecord& query);

// Fraction of records whose key occurs exactly once.
double uniqueness(const Trace& trace);

}  // namespace faithcheck
