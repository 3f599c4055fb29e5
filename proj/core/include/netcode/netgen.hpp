#pragma once

#include <cstdint>

#include "netcode/network.hpp"

namespace netcode {
namespace netgen {

/// Classic butterfly: one source with h=2, two sinks demanding both
/// sequences, direct branches plus the shared bottleneck.  Mincut 2 to each
/// sink; all intermediate nodes see a single source-path depth.
Network butterfly();

/// (n_mid choose k) combination network: source -> n_mid middle nodes, one
/// sink per k-subset (lexicographic order) demanding all h_s = k sequences.
Network combination(int n_mid, int k);

/// The cascade of the butterfly and the (4 choose 2) network: one source,
/// h = 2, butterfly outputs at v2/v3 fan into four edges e1..e4 (ids returned
/// by fig2_cascade_e_ids) whose relays feed six all-demand sinks, one per
/// pair.  Any two of the four global vectors on e1..e4 must be independent
/// for feasibility; the two inputs of v2 (and v3) arrive at depths 2 and 4.
Network fig2_cascade();
/// ids of e1..e4 in fig2_cascade()
std::vector<int> fig2_cascade_e_ids();

/// Two-unicast network where unit delays break zero-interference:
///   - each source feeds a relay (u1/u2) whose output splits into the mixing
///     path (via v1) and the direct cancellation path (to v2/v3);
///   - v1 has a single outgoing edge (through w), so both its local
///     coefficients must be nonzero in any feasible code;
///   - the mix and the direct copy reach v2 (and v3) with different path
///     lengths, and both copies descend from one source-outgoing edge, so no
///     source-side processing can re-align them.
/// t1 demands sequence 1, t2 demands sequence 2.
Network example1_net();

/// Three-source network with non-multicast demands (t1..t3 want everything,
/// t4 wants {1,3}, t5 wants {2,3}) where delay disparity helps:
///   - e1 = v0->r1 must carry all three sequences (t1/t2/t3 get their
///     missing sequences only through it);
///   - e2 = v2->r2 must carry both x2 and x3 (t3 takes x2 only through e2,
///     t5 takes x3 only through e2); v2's two inputs arrive at depths 1 and 2
///     (s2 direct, s3 via w2);
///   - e3 = v1->r3 is combined from relays of e1 and e2, and t4 needs x3
///     through it with x2 interference cancelled, which is impossible over
///     F_2 instantaneously but possible with delays.
/// Direct two-hop paths: t1 from {s1,s2}, t2 from {s1,s3}, t3 from {s3},
/// t4 from {s1}, t5 from {s2}.
Network example3_net();
/// ids of e1, e2, e3 in example3_net()
std::vector<int> example3_e_ids();

/// The (6 choose 3) combination-derived network with three sources, relays
/// v1..v3 (single-source) and v4..v6 (fully mixed), middle relays v7..v12,
/// twenty all-demand sinks (one per 3-subset of middles) plus node v13 and
/// sink t21 demanding only x1, fed by the three mixed middles.
Network fig4_net();

/// Uniform delay-and-code on n followed by materialization: returns the
/// modified network on which a binary memoryless-intermediate unit-delay
/// code is feasible while the instantaneous minimum field size is kept.
Network forwarding_expanded(const Network& n);

/// Seeded single-source multicast instance with `sinks` sinks, mincut >= h_s
/// to each (the generator redraws until the flow check passes, advancing a
/// recorded retry counter).
Network random_acyclic(int nodes, int edges, int h_s, int sinks, uint64_t seed);

}  // namespace netgen
}  // namespace netcode
