#pragma once

#include <stdexcept>
#include <string>

namespace faithcheck {

// Bad input data or configuration (file contents, schema mismatches,
// out-of-domain parameters). The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace faithcheck
