#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netcode/code.hpp"
#include "netcode/network.hpp"

namespace netcode {

enum class Discipline { uniform, non_uniform };

std::string discipline_name(Discipline d);
Discipline parse_discipline(const std::string& s);

/// One kernel of the restricted form m z^a on an adjacent pair.  In
/// unit-delay mode `delay` includes the mandatory transmission delay, so
/// delay >= 1 on real edges and memory used = delay - 1.
struct SchemeEntry {
    int edge;
    int pred;
    uint32_t m;  // in F_2
    int delay;
};

/// Binary delay-and-code scheme: y_e(z) = sum_p m_{e,p} z^{a_{e,p}} y_p(z).
struct DelayCodeScheme {
    Discipline discipline = Discipline::non_uniform;
    Mode mode = Mode::unit_delay;
    std::vector<SchemeEntry> entries;  // sorted by (edge, pred)

    const SchemeEntry* find(int edge, int pred) const;
    void set(int edge, int pred, uint32_t m, int delay);
};

/// Plain RationalFn kernels over F_2 equivalent to trace the scheme through
/// the generic verifier.
NetworkCode scheme_to_code(const Network& n, const DelayCodeScheme& s);

/// Binary non-uniform delay-and-code for any multicast instance with
/// sufficient mincut; per-incoming-edge memory stays below the sink count.
DelayCodeScheme nonuniform_construct(const Network& n, Mode mode);

/// Uniform scheme: shared per-incoming-edge delays at intermediate nodes,
/// non-uniform discipline at the source.  Requires node-disjoint flow paths.
DelayCodeScheme uniform_construct(const Network& n, Mode mode);

struct CombinePair {
    std::vector<Rat> x;
    std::vector<Rat> y;
    int pred;  // predecessor edge carrying x
};

struct DelayedCombineResult {
    std::vector<Rat> u;
    /// chosen taps: pred edge -> memory delay beta (before the mandatory z)
    std::map<int, int> taps;
};

/// The delayed combining iteration: u_1 = x_1, u_{i+1} = u_i when possible,
/// else u_i + z^beta x_{i+1} with beta scanned ascending from 0 past the
/// forbidden values.  Pairs sharing a predecessor share one tap (the kernel
/// form allows a single delayed copy per pair), re-chosen if a later pair
/// invalidates it.
DelayedCombineResult delayed_combine(const std::vector<CombinePair>& pairs,
                                     int max_delay, Mode mode);

struct BudgetAudit {
    bool ok = false;
    int max_memory = 0;  // max over intermediate-node taps
    int bound = 0;       // |T|-1 or delta(|T|-1)
    std::string detail;
};

/// Non-uniform bound: memory <= |T|-1 per incoming edge at intermediate
/// nodes.  Uniform bound: delta (|T|-1).
BudgetAudit budget_audit(const Network& n, const DelayCodeScheme& s);

/// The shared-delay rule: at every intermediate node, every incoming edge is
/// delayed the same way on all outgoing edges that use it.
bool uniformity_audit(const Network& n, const DelayCodeScheme& s);

struct MaterializeResult {
    Network network;  // G~ with forwarding chains for intermediate memories
    NetworkCode code; // memoryless-intermediate binary unit-delay code on G~
    int nodes_added = 0;
};

/// Shared intermediate delays become chains of unit-delay forwarding edges;
/// source taps stay as (rational) source processing.  Requires a uniform
/// unit-delay scheme.
MaterializeResult materialize(const Network& n, const DelayCodeScheme& s);

struct Fig4Certificate {
    int bound = 0;  // B
    uint64_t combinations = 0;
    bool solution_found = false;
    std::string solution;
    /// one line per coefficient-support case, with the reason no delay
    /// assignment in [0,B]^3 can produce an (x1-only) output vector
    std::vector<std::string> log;
};

/// Enumerates m in F_2^3 and delay triples in [0,B]^3 against the structural
/// constraints on the mixed vectors f_4..f_6 (pairwise row-offset
/// disagreement, forced by the twenty combination sinks), confirming no
/// delay-and-code combination at v13 can serve t21.
Fig4Certificate fig4_delay_code_search(int max_exponent);

/// Sanity inversion: same search against planted exponent vectors with a
/// dependent pair; must find a solution.
Fig4Certificate fig4_delay_code_search_planted(int max_exponent);

}  // namespace netcode
