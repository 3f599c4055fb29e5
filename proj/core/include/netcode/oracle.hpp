#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netcode/code.hpp"
#include "netcode/network.hpp"

namespace netcode {
namespace oracle {

struct SearchOptions {
    /// Budget on explored kernel assignments (DFS nodes), not the raw family
    /// size; pruned subtrees cost one node.
    uint64_t cap = 100'000'000;
    /// Source kernels in unit-delay mode are z * sigma(z) with
    /// deg(sigma) <= source_deg_bound (0 = memoryless sources).
    int source_deg_bound = 0;
    /// Search one representative per per-edge scaling class (first nonzero
    /// kernel coefficient = 1); feasibility-complete, shrinks the family.
    bool quotient_scaling = true;
    int threads = 1;
};

struct SearchCertificate {
    bool feasible = false;
    std::optional<NetworkCode> code;
    double family_size = 0;  // raw enumerated family size
    uint64_t explored = 0;
    uint64_t pruned = 0;
    std::string family;  // human description of the enumerated family
};

/// First feasible code in deterministic enumeration order (kernel slots in
/// ancestral edge order, coefficients in representative order), or an
/// impossibility certificate for the enumerated family.  Sink observation
/// kernels are not enumerated: for fixed real-edge kernels, per-sink
/// feasibility (existence of taps meeting invertibility + zero interference)
/// is decided exactly by linear algebra over F_q (instantaneous) or F_q(z)
/// (unit-delay), and witness taps are attached to any code returned.
SearchCertificate exhaustive_search(const Network& n, const FieldPtr& field,
                                    Mode mode, const SearchOptions& opts = {});

struct MinFieldResult {
    std::optional<uint32_t> min_q;
    std::vector<std::pair<uint32_t, bool>> verdicts;  // (q, feasible) in input order
    std::vector<SearchCertificate> certificates;      // per q, codes dropped
};

MinFieldResult min_field_size(const Network& n, Mode mode,
                              const std::vector<uint32_t>& q_list,
                              const SearchOptions& opts = {});

struct RelationshipAudit {
    std::vector<uint32_t> fields;
    std::vector<bool> inst_feasible;  // per field
    std::vector<bool> ud_feasible;
    bool equal_depth = false;
    /// unit-delay feasibility at q implies instantaneous feasibility over
    /// some extension: fields where the direct search failed but the
    /// delay-elimination conversion of the found code succeeded.
    std::vector<uint32_t> prop2_conversions;
    bool consistent = false;
    std::string detail;
};

/// Cross-checks the delay/no-delay relationships on this instance:
/// ud-solvable => inst-solvable (via conversion when the direct search at q
/// fails), and equal-depth => identical per-field verdicts in both modes.
RelationshipAudit relationship_audit(const Network& n, const std::vector<uint32_t>& q_list,
                         const SearchOptions& opts = {});

}  // namespace oracle
}  // namespace netcode
