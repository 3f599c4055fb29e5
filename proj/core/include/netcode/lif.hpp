#pragma once

#include "netcode/code.hpp"
#include "netcode/network.hpp"

namespace netcode {

/// Per-sink LIF bookkeeping: the h most recently processed edges (one per
/// flow path), the matrix of their global vectors and its inverse-transpose
/// companion, kept so that b(C[i]) . a(C[j]) = delta_{i,j} at every step.
struct SinkState {
    int sink = 0;
    std::vector<int> C;  // edge id per path slot
    RatMatrix B;         // columns = global vectors, by slot
    RatMatrix A;         // dual columns a_t(e), by slot
};

/// Re-establishes the dual invariant after edge `e` (vector b_e) replaces its
/// path predecessor `pred` in the state:
///   a~(e)    = (b_e . a(pred))^{-1} a(pred)
///   a~(c)    = a(c) - (b_e . a(c)) a~(e)      for the remaining slots
/// Throws if b_e . a(pred) = 0 (the construction must prevent that).
void update_sink_state(SinkState& st, int e, const std::vector<Rat>& b_e, int pred);

struct CombineResult {
    std::vector<uint32_t> coeffs;  // c_k per pair, in F_q
    std::vector<Rat> u;            // sum c_k x_k
};

/// Deterministic combining step: given pairs (x_i, y_i) with x_i.y_i != 0,
/// builds u = sum c_k x_k with u.y_i != 0 for every i.  u_1 = x_1;
/// u_{i+1} = u_i when u_i.y_{i+1} != 0, else u_i + alpha x_{i+1} with alpha
/// the first field element (representative order) keeping every dot product
/// nonzero.  Preconditions enforced: x_i.y_i != 0 and q > n.
CombineResult combining_vector(
    const std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>>& pairs,
    const FieldPtr& coeff_field);

struct LifStats {
    int edges_processed = 0;
    /// Combines that succeeded although q <= |T(e)| (the non-strict q >= n
    /// sufficiency); logged, not rejected.
    int nonstrict_successes = 0;
    int max_t_count = 0;
};

struct LifResult {
    NetworkCode code;
    LifStats stats;
};

struct LifOptions {
    bool check_invariants = false;  // assert B^T A = I after every step
};

/// Deterministic LIF multicast construction.  Works for any multicast
/// network whose flow decomposition yields h edge-disjoint paths per sink
/// (multi-source instances go through the same imaginary-edge flow).
/// In unit-delay mode all dot products and duals are exact over F_q(z) while
/// the chosen coefficients stay in F_q.  Throws FieldTooSmallError when no
/// coefficient choice works at some edge.
LifResult lif_construct(const Network& n, const FieldPtr& field, Mode mode,
                        const LifOptions& opts = {});

}  // namespace netcode
