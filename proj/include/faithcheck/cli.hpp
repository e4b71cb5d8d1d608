#pragma once

#include <string>
#include <vector>

namespace faithcheck {

// Entry point behind the faithcheck binary, callable in-process for tests.
// Returns 0 on success, 2 on usage/validation errors, 1 on internal errors.
int cli_main(const std::vector<std::string>& args);

}  // namespace faithcheck
