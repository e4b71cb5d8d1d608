#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "faithcheck/rule.hpp"
#include "faithcheck/types.hpp"

namespace faithcheck {

enum class PayloadKind { Opaque, Rule, Importance, Counterfactual };

const char* payload_kind_name(PayloadKind k);
PayloadKind parse_payload_kind(const std::string& name);

// One explanation as observed at the trace boundary. `key` is the canonical
// identity token: explicit when supplied by the producer, otherwise computed
// from the structured content by Trace::finalize / canonical_key.
struct ExplanationPayload {
    PayloadKind kind = PayloadKind::Opaque;
    std::optional<std::string> key;
    std::optional<ScopedRule> rule;
    std::optional<std::vector<double>> importance;
    std::optional<Instance> counterfactual;
};

// Deterministic canonical key. An explicit key wins; otherwise the key is
// derived from the payload content with a kind tag ("rule:", "imp:", "cf:")
// so payloads of different kinds can never collide. Opaque payloads must
// carry an explicit key.
std::string canonical_key(const ExplanationPayload& payload);

struct TraceRecord {
    Instance instance;
    Label prediction;
    ExplanationPayload explanation;

    const std::string& key() const { return *explanation.key; }
};

// An i.i.d. sample of (instance, prediction, explanation) observations.
// Immutable after finalize(); all measures defined on it are order-invariant.
struct Trace {
    SchemaPtr schema;
    std::vector<TraceRecord> records;
    std::map<std::string, std::string> provenance;

    size_t size() const { return records.size(); }

    // Validates every record against the schema (lengths, finiteness, kind
    // invariants), binds rules, and fills in missing canonical keys.
    // Throws ValidationError naming the offending record.
    void finalize();

    // Distinct prediction labels in first-appearance order.
    std::vector<std::string> label_alphabet() const;

    bool operator==(const Trace& other) const;
};

bool operator==(const ExplanationPayload& a, const ExplanationPayload& b);
inline bool operator==(const TraceRecord& a, const TraceRecord& b) {
    return a.instance == b.instance && a.prediction == b.prediction &&
           a.explanation == b.explanation;
}

}  // namespace faithcheck
