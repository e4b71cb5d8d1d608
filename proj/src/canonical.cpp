#include "faithcheck/canonical.hpp"

#include <charconv>
#include <cstdio>
#include <cstring>

namespace faithcheck {

std::string render_sig12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    if (std::strcmp(buf, "-0") == 0) return "0";
    return buf;
}

std::string render_exact(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string quote_token(const std::string& token) {
    std::string out;
    out.reserve(token.size() + 2);
    out.push_back('"');
    for (char c : token) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string canonical_vector(const std::vector<double>& values) {
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += render_sig12(values[i]);
    }
    out.push_back(']');
    return out;
}

std::string canonical_features(const std::vector<FeatureValue>& features) {
    std::string out = "[";
    for (size_t i = 0; i < features.size(); ++i) {
        if (i) out.push_back(',');
        if (is_numeric(features[i]))
            out += render_sig12(as_number(features[i]));
        else
            out += quote_token(as_token(features[i]));
    }
    out.push_back(']');
    return out;
}

}  // namespace faithcheck
