#pragma once

#include <string>
#include <vector>

namespace netcode {

/// Entry point behind the netcode binary.  Exit codes: 0 success, 1 failed
/// verification / failed claims, 2 usage errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace netcode
