#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace netcode {
namespace repro {

struct ClaimResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// All claim ids, in suite order.
std::vector<std::string> claim_ids();

/// Runs the claim-reproduction suite.  `selector` filters by id prefix
/// (empty = everything).  Results are deterministic for a fixed seed.
std::vector<ClaimResult> run_claims(const std::string& selector, uint64_t seed,
                                    std::ostream* progress = nullptr);

}  // namespace repro
}  // namespace netcode
