#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "faithcheck/finite_system.hpp"
#include "faithcheck/trace.hpp"

namespace faithcheck {

// Synthetic worlds with known exact faithfulness, used to exercise the
// estimators end to end.
struct WorldSpec {
    enum class Kind { Tree, Xor, BalancedPair };
    Kind kind = Kind::Tree;
    uint64_t seed = 0;

    // tree: full binary tree of `leaves` equal-mass cells over the unit
    // hypercube; sampled labels are flipped with probability label_noise.
    int leaves = 64;
    double label_noise = 0.0;

    // xor: grid over [-extent, extent]^2 with the given step, label "1" when
    // the two coordinates share a sign, and a band explainer keyed by |f1|.
    double extent = 3.0;
    double step = 1.0;

    // balanced-pair: opposite-label pairs; e1 keys every instance
    // distinctly, e2 keys each pair identically. Discrete domain of
    // `domain_size` pairs, or a continuous domain when `continuous`.
    int domain_size = 64;
    bool continuous = false;

    static WorldSpec::Kind parse_kind(const std::string& name);
};

struct WorldTrack {
    std::string name;  // explainer name; empty for single-explainer worlds
    std::optional<FiniteSystem> system;  // absent for continuous domains
    double truth_consistency = 0.0;
    double truth_sufficiency = 0.0;
};

class World {
public:
    virtual ~World() = default;
    const WorldSpec& spec() const { return spec_; }
    int num_tracks() const { return static_cast<int>(tracks_.size()); }
    const WorldTrack& track(int i) const { return tracks_[i]; }

    // i.i.d. trace of size n; (spec.seed, stream) determines the bytes.
    virtual Trace sample_trace(int track, int n, uint64_t stream) const = 0;

protected:
    WorldSpec spec_;
    std::vector<WorldTrack> tracks_;
};

std::unique_ptr<World> generate_world(const WorldSpec& spec);

// Trace view of system samples: one indicator feature per key plus the
// matching half-open box rule, so both relation modes reproduce the system's
// applicability exactly through the regular estimator path.
Trace trace_from_system_sample(const FiniteSystem& sys, const std::vector<int>& points,
                               bool with_rules = true);

}  // namespace faithcheck
