#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace faithcheck {

// Ordered feature-name list shared by every instance of a trace.
using Schema = std::vector<std::string>;
using SchemaPtr = std::shared_ptr<const Schema>;

// A feature is either a real number or a raw categorical token. Tokens are
// never integer-encoded at this layer.
using FeatureValue = std::variant<double, std::string>;

inline bool is_numeric(const FeatureValue& v) { return std::holds_alternative<double>(v); }
inline double as_number(const FeatureValue& v) { return std::get<double>(v); }
inline const std::string& as_token(const FeatureValue& v) { return std::get<std::string>(v); }

struct Instance {
    std::string id;
    std::vector<FeatureValue> features;
    SchemaPtr schema;  // may be null until adopted by a Trace

    bool operator==(const Instance& other) const {
        if (id != other.id || features != other.features) return false;
        if (schema == other.schema) return true;
        if (!schema || !other.schema) return false;
        return *schema == *other.schema;
    }
};

struct Label {
    std::string value;

    bool operator==(const Label&) const = default;
    auto operator<=>(const Label&) const = default;
};

inline SchemaPtr make_schema(std::vector<std::string> names) {
    return std::make_shared<const Schema>(std::move(names));
}

}  // namespace faithcheck
