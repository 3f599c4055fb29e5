#include "netcode/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <set>

#include "netcode/convert.hpp"

namespace netcode {
namespace oracle {

namespace {

// ---------------------------------------------------------------------------
// Slot model: one enumeration unit per relevant real edge.  A value assigns
// each kernel of the edge (one per live predecessor) a flattened coefficient
// tuple; the kernel is a constant (instantaneous / intermediate unit-delay)
// or z * sigma(z) with deg sigma <= D (unit-delay source edges).

struct EdgeSlot {
    int edge = 0;
    std::vector<int> preds;        // live predecessors, deterministic order
    int coeffs_per_pred = 1;       // 1 for constants, D+1 for source polys
    bool source_poly = false;
    uint64_t raw_options = 0;      // q^(preds * coeffs_per_pred)
};

struct SinkInfo {
    int sink = 0;
    int node = 0;
    std::vector<int> demand_rows;      // 0-based demanded rows
    std::vector<int> interference_rows;
    std::vector<int> in_edges;         // real in-edges
    /// reach[k] = nodes that still reach this sink through edges with topo
    /// position >= k (so after k assignments, paths via unassigned edges)
    std::vector<std::vector<char>> reach;
};

struct Searcher {
    const Network& n;
    const Field* f;
    Mode mode;
    SearchOptions opts;

    std::vector<EdgeSlot> slots;       // in ancestral order
    std::vector<SinkInfo> sinks;
    std::vector<std::vector<int>> affected;  // per slot index: sink list
    GlobalVectors base_vectors;        // imaginary source units
    double family_size = 1;

    uint64_t explored = 0;
    uint64_t pruned = 0;
    std::atomic<uint64_t>* shared_explored = nullptr;
    std::atomic<bool>* abort_flag = nullptr;

    // DFS state
    std::map<int, std::vector<Rat>> vec;  // assigned edge -> global vector
    std::vector<std::vector<uint32_t>> assignment;  // per slot: coefficient tuple

    std::set<int> slot_edges;

    Searcher(const Network& net, const Field* field, Mode m, const SearchOptions& o)
        : n(net), f(field), mode(m), opts(o) {
        build_slots();
        for (const EdgeSlot& s : slots) slot_edges.insert(s.edge);
        build_sinks();
        for (int seq = 1; seq <= n.h(); ++seq) {
            std::vector<Rat> v(static_cast<size_t>(n.h()), Rat{f});
            v[size_t(seq - 1)] = Rat::constant(f, 1);
            base_vectors[Network::imag_source_id(seq)] = std::move(v);
        }
    }

    void build_slots() {
        // relevance: reachable from a source and reaching a sink
        std::set<int> from_src, to_sink;
        for (int eid : n.topo_edge_order()) {
            const Edge& e = n.edge(eid);
            bool src = n.is_source(e.tail);
            if (!src)
                for (int p : n.in_edges(e.tail))
                    if (from_src.count(p)) src = true;
            if (src) from_src.insert(eid);
        }
        auto rev = n.topo_edge_order();
        std::reverse(rev.begin(), rev.end());
        for (int eid : rev) {
            const Edge& e = n.edge(eid);
            bool snk = n.is_sink(e.head);
            if (!snk)
                for (int q : n.out_edges(e.head))
                    if (to_sink.count(q)) snk = true;
            if (snk) to_sink.insert(eid);
        }

        for (int eid : n.topo_edge_order()) {
            if (!from_src.count(eid) || !to_sink.count(eid)) continue;
            EdgeSlot s;
            s.edge = eid;
            for (int p : n.preds_of_edge(eid))
                if (p < 0 || (from_src.count(p) && to_sink.count(p))) s.preds.push_back(p);
            if (s.preds.empty()) continue;
            s.source_poly =
                mode == Mode::unit_delay && n.is_source(n.edge(eid).tail);
            s.coeffs_per_pred = s.source_poly ? opts.source_deg_bound + 1 : 1;
            s.raw_options = 1;
            for (size_t i = 0; i < s.preds.size() * size_t(s.coeffs_per_pred); ++i)
                s.raw_options *= f->size();
            family_size *= double(s.raw_options);
            slots.push_back(std::move(s));
        }
        assignment.assign(slots.size(), {});
    }

    void build_sinks() {
        const size_t E = slots.size();
        for (int t = 0; t < n.sink_count(); ++t) {
            SinkInfo si;
            si.sink = t;
            si.node = n.sinks()[size_t(t)].node;
            for (int d : n.sinks()[size_t(t)].demands) si.demand_rows.push_back(d - 1);
            std::vector<bool> dem(size_t(n.h()), false);
            for (int r : si.demand_rows) dem[size_t(r)] = true;
            for (int r = 0; r < n.h(); ++r)
                if (!dem[size_t(r)]) si.interference_rows.push_back(r);
            // in-edges outside the slot set carry identically-zero vectors
            for (int e : n.in_edges(si.node))
                if (slot_edges.count(e)) si.in_edges.push_back(e);

            // reach sets per prefix length
            si.reach.assign(E + 1, std::vector<char>(size_t(n.node_count()), 0));
            for (size_t k = 0; k <= E; ++k) {
                auto& r = si.reach[k];
                r[size_t(si.node)] = 1;
                // edges with slot position >= k are unassigned; edges that are
                // not slots at all (irrelevant) never matter
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (size_t j = k; j < E; ++j) {
                        const Edge& e = n.edge(slots[j].edge);
                        if (r[size_t(e.head)] && !r[size_t(e.tail)]) {
                            r[size_t(e.tail)] = 1;
                            changed = true;
                        }
                    }
                }
            }
            sinks.push_back(std::move(si));
        }
        affected.assign(E, {});
        for (size_t j = 0; j < E; ++j) {
            int head = n.edge(slots[j].edge).head;
            for (size_t t = 0; t < sinks.size(); ++t)
                if (sinks[t].reach[j][size_t(head)]) affected[j].push_back(int(t));
        }
    }

    // -- kernels and vectors -------------------------------------------------

    Rat kernel_from(const EdgeSlot& s, const std::vector<uint32_t>& tuple,
                    size_t pred_idx) const {
        const int cpp = s.coeffs_per_pred;
        if (!s.source_poly) {
            uint32_t c = tuple[pred_idx];
            if (c == 0) return Rat(f);
            return mode == Mode::unit_delay ? Rat(Poly::monomial(f, c, 1))
                                            : Rat::constant(f, c);
        }
        std::vector<uint32_t> sigma(tuple.begin() + long(pred_idx) * cpp,
                                    tuple.begin() + long(pred_idx + 1) * cpp);
        Poly p(f, std::move(sigma));
        if (p.is_zero()) return Rat(f);
        return Rat(p.shifted(1));  // z * sigma(z)
    }

    std::vector<Rat> vector_of(size_t slot_idx, const std::vector<uint32_t>& tuple) {
        const EdgeSlot& s = slots[slot_idx];
        std::vector<Rat> v(static_cast<size_t>(n.h()), Rat{f});
        for (size_t pi = 0; pi < s.preds.size(); ++pi) {
            Rat k = kernel_from(s, tuple, pi);
            if (k.is_zero()) continue;
            const auto& bp = vec_of_edge(s.preds[pi]);
            for (int r = 0; r < n.h(); ++r)
                if (!bp[size_t(r)].is_zero())
                    v[size_t(r)] = v[size_t(r)] + k * bp[size_t(r)];
        }
        return v;
    }

    const std::vector<Rat>& vec_of_edge(int eid) const {
        if (eid < 0) return base_vectors.at(eid);
        auto it = vec.find(eid);
        if (it == vec.end()) throw Error("internal: vector of unassigned edge");
        return it->second;
    }

    // -- per-sink checks ------------------------------------------------------

    /// exact decision + witness taps.  N = columns of in-edge vectors.
    bool sink_decide(const SinkInfo& si, std::vector<std::vector<Rat>>* taps) const {
        const size_t d = si.in_edges.size();
        const size_t ht = si.demand_rows.size();
        if (ht == 0) return true;
        if (d == 0) return false;

        // nullspace of the interference rows
        std::vector<std::vector<Rat>> A;  // rows over the d inputs
        for (int r : si.interference_rows) {
            std::vector<Rat> row;
            row.reserve(d);
            for (int e : si.in_edges) row.push_back(vec_of_edge(e)[size_t(r)]);
            A.push_back(std::move(row));
        }
        std::vector<std::vector<Rat>> W = nullspace(A, d);
        if (W.size() < ht) return false;

        // demanded rows applied to the nullspace basis
        std::vector<std::vector<Rat>> cols;  // one per basis vector
        for (const auto& w : W) {
            std::vector<Rat> col;
            col.reserve(ht);
            for (int r : si.demand_rows) {
                Rat acc(f);
                for (size_t j = 0; j < d; ++j) {
                    const Rat& entry = vec_of_edge(si.in_edges[j])[size_t(r)];
                    if (entry.is_zero() || w[j].is_zero()) continue;
                    acc = acc + entry * w[j];
                }
                col.push_back(std::move(acc));
            }
            cols.push_back(std::move(col));
        }
        if (vec_rank(cols) < ht) return false;

        if (taps) {
            // greedy independent subset of basis columns, lowest indices first
            taps->clear();
            std::vector<std::vector<Rat>> picked;
            for (size_t j = 0; j < cols.size() && picked.size() < ht; ++j) {
                picked.push_back(cols[j]);
                if (vec_rank(picked) == picked.size())
                    taps->push_back(W[j]);
                else
                    picked.pop_back();
            }
        }
        return true;
    }

    /// nullspace basis of A (rows x d) over F_q(z); identity basis if A empty.
    std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> A,
                                            size_t d) const {
        std::vector<std::vector<Rat>> basis;
        // reduced row echelon form
        size_t r = 0;
        std::vector<int> pivot_col;
        for (size_t c = 0; c < d && r < A.size(); ++c) {
            size_t piv = r;
            while (piv < A.size() && A[piv][c].is_zero()) ++piv;
            if (piv == A.size()) continue;
            std::swap(A[r], A[piv]);
            Rat inv = A[r][c].inverse();
            for (size_t j = c; j < d; ++j) A[r][j] = A[r][j] * inv;
            for (size_t i = 0; i < A.size(); ++i) {
                if (i == r || A[i][c].is_zero()) continue;
                Rat factor = A[i][c];
                for (size_t j = c; j < d; ++j) A[i][j] = A[i][j] - factor * A[r][j];
            }
            pivot_col.push_back(int(c));
            ++r;
        }
        std::vector<bool> is_pivot(d, false);
        for (int c : pivot_col) is_pivot[size_t(c)] = true;
        for (size_t free_c = 0; free_c < d; ++free_c) {
            if (is_pivot[free_c]) continue;
            std::vector<Rat> w(d, Rat(f));
            w[free_c] = Rat::constant(f, 1);
            for (size_t i = 0; i < pivot_col.size(); ++i)
                w[size_t(pivot_col[i])] = -A[i][free_c];
            basis.push_back(std::move(w));
        }
        return basis;
    }

    /// Rank upper bound for an undecided sink after `k` assignments: demanded
    /// rows of every vector that can still influence the sink.
    bool sink_bound_ok(const SinkInfo& si, size_t k) const {
        const auto& reach = si.reach[k];
        std::vector<std::vector<Rat>> rows;  // candidate columns, as rows of demands
        auto consider = [&](int eid) {
            const auto& b = vec_of_edge(eid);
            std::vector<Rat> r;
            r.reserve(si.demand_rows.size());
            bool nonzero = false;
            for (int d : si.demand_rows) {
                r.push_back(b[size_t(d)]);
                nonzero = nonzero || !b[size_t(d)].is_zero();
            }
            if (nonzero) rows.push_back(std::move(r));
        };
        for (int seq = 1; seq <= n.h(); ++seq)
            if (reach[size_t(n.source_node_of_seq(seq))])
                consider(Network::imag_source_id(seq));
        for (size_t j = 0; j < k; ++j) {
            int eid = slots[j].edge;
            if (reach[size_t(n.edge(eid).head)]) consider(eid);
        }
        if (rows.size() < si.demand_rows.size()) return false;
        return vec_rank(rows) >= si.demand_rows.size();
    }

    /// slot position after which every in-edge of the sink is assigned
    bool sink_decidable(const SinkInfo& si, size_t k) const {
        // equivalently: no node except the sink's own reaches it anymore
        const auto& reach = si.reach[k];
        for (size_t v = 0; v < reach.size(); ++v)
            if (reach[v] && int(v) != si.node) return false;
        return true;
    }

    // -- enumeration -----------------------------------------------------------

    /// first nonzero coefficient of the tuple equals 1 (scaling-canonical)
    bool canonical(const std::vector<uint32_t>& tuple) const {
        for (uint32_t c : tuple) {
            if (c == 0) continue;
            return c == 1;
        }
        return true;  // all-zero tuple
    }

    bool next_tuple(std::vector<uint32_t>& tuple) const {
        for (size_t i = tuple.size(); i-- > 0;) {
            if (++tuple[i] < f->size()) return true;
            tuple[i] = 0;
        }
        return false;
    }

    struct Found {
        std::vector<std::vector<uint32_t>> assignment;
    };

    std::optional<Found> dfs(size_t depth, uint64_t first_slot_pin,
                             bool use_pin) {
        if (depth == slots.size()) {
            // all sinks are decidable here; they have been checked already
            Found out;
            out.assignment = assignment;
            return out;
        }
        const EdgeSlot& s = slots[depth];
        std::vector<uint32_t> tuple(s.preds.size() * size_t(s.coeffs_per_pred), 0);
        uint64_t option_index = 0;
        do {
            if (use_pin && depth == 0 && option_index != first_slot_pin) {
                ++option_index;
                continue;
            }
            ++option_index;
            if (opts.quotient_scaling && f->size() > 2 && !canonical(tuple)) continue;

            ++explored;
            if (shared_explored &&
                (explored & 1023u) == 0) {
                shared_explored->fetch_add(1024, std::memory_order_relaxed);
                if (abort_flag && abort_flag->load(std::memory_order_relaxed))
                    return std::nullopt;
            }
            if (!shared_explored && explored > opts.cap)
                throw CapExceededError(
                    "exhaustive_search exceeded the exploration cap (family size " +
                        std::to_string(family_size) + ")",
                    family_size);

            vec[s.edge] = vector_of(depth, tuple);
            assignment[depth] = tuple;

            bool ok = true;
            for (int t : affected[depth]) {
                const SinkInfo& si = sinks[size_t(t)];
                if (sink_decidable(si, depth + 1)) {
                    if (!sink_decide(si, nullptr)) {
                        ok = false;
                        break;
                    }
                } else if (!sink_bound_ok(si, depth + 1)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                auto res = dfs(depth + 1, 0, false);
                if (res) return res;
            } else {
                ++pruned;
            }
        } while (next_tuple(tuple));
        vec.erase(s.edge);
        return std::nullopt;
    }

    NetworkCode realize(const Found& found) {
        NetworkCode code(mode, f);
        vec.clear();
        for (size_t j = 0; j < slots.size(); ++j) {
            const EdgeSlot& s = slots[j];
            for (size_t pi = 0; pi < s.preds.size(); ++pi) {
                Rat k = kernel_from(s, found.assignment[j], pi);
                if (!k.is_zero()) code.set_kernel(s.edge, s.preds[pi], k);
            }
            vec[s.edge] = vector_of(j, found.assignment[j]);
        }
        for (const SinkInfo& si : sinks) {
            std::vector<std::vector<Rat>> taps;
            if (!sink_decide(si, &taps))
                throw Error("internal: leaf sink decision flipped");
            for (size_t slot = 0; slot < taps.size(); ++slot)
                for (size_t j = 0; j < si.in_edges.size(); ++j)
                    if (!taps[slot][j].is_zero())
                        code.set_kernel(n.imag_sink_id(si.sink, int(slot)),
                                        si.in_edges[j], taps[slot][j]);
        }
        return code;
    }

    std::string family_description() const {
        std::string s = "kernels over F_" + std::to_string(f->size());
        if (mode == Mode::unit_delay)
            s += ", unit-delay, memory-free intermediate nodes, source kernels "
                 "z*sigma(z) with deg sigma <= " +
                 std::to_string(opts.source_deg_bound);
        else
            s += ", instantaneous";
        s += "; sink observation taps decided exactly per assignment";
        if (opts.quotient_scaling && f->size() > 2)
            s += "; one representative per per-edge scaling class";
        return s;
    }
};

}  // namespace

SearchCertificate exhaustive_search(const Network& n, const FieldPtr& field,
                                    Mode mode, const SearchOptions& opts) {
    SearchCertificate cert;

    Searcher base(n, field.get(), mode, opts);
    cert.family_size = base.family_size;
    cert.family = base.family_description();

    // Sinks no enumerated edge can influence must be decided up front; the
    // DFS only re-examines sinks downstream of the edge it just assigned.
    for (const auto& si : base.sinks) {
        if (base.sink_decidable(si, 0)) {
            if (!base.sink_decide(si, nullptr)) {
                cert.explored = 1;
                return cert;  // infeasible regardless of assignments
            }
        } else if (!base.sink_bound_ok(si, 0)) {
            cert.explored = 1;
            return cert;
        }
    }

    if (base.slots.empty()) {
        cert.feasible = true;
        cert.explored = 1;
        cert.code = base.realize(Searcher::Found{{}});
        return cert;
    }

    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        auto found = base.dfs(0, 0, false);
        cert.explored = base.explored;
        cert.pruned = base.pruned;
        if (found) {
            cert.feasible = true;
            cert.code = base.realize(*found);
        }
        return cert;
    }

    // partition on the first slot, lowest feasible option wins
    uint64_t first_options = base.slots[0].raw_options;
    std::atomic<bool> abort{false};
    std::atomic<uint64_t> shared{0};
    struct TaskResult {
        uint64_t option;
        std::optional<Searcher::Found> found;
        uint64_t explored = 0, pruned = 0;
    };
    std::vector<std::future<TaskResult>> futures;
    std::atomic<uint64_t> next_option{0};
    for (int w = 0; w < threads; ++w) {
        futures.push_back(std::async(std::launch::async, [&]() {
            TaskResult best{UINT64_MAX, std::nullopt, 0, 0};
            while (true) {
                uint64_t opt = next_option.fetch_add(1);
                if (opt >= first_options) break;
                if (abort.load()) break;
                Searcher s(n, field.get(), mode, opts);
                s.shared_explored = &shared;
                s.abort_flag = &abort;
                auto found = s.dfs(0, opt, true);
                best.explored += s.explored;
                best.pruned += s.pruned;
                if (found) {
                    best.option = opt;
                    best.found = std::move(found);
                    return best;  // lowest unclaimed option this worker saw
                }
                if (shared.load() > opts.cap) {
                    abort.store(true);
                    break;
                }
            }
            return best;
        }));
    }
    TaskResult winner{UINT64_MAX, std::nullopt, 0, 0};
    for (auto& fu : futures) {
        TaskResult r = fu.get();
        cert.explored += r.explored;
        cert.pruned += r.pruned;
        if (r.found && r.option < winner.option) winner = std::move(r);
    }
    if (shared.load() > opts.cap && !winner.found)
        throw CapExceededError("exhaustive_search exceeded the exploration cap",
                               cert.family_size);
    if (winner.found) {
        cert.feasible = true;
        cert.code = base.realize(*winner.found);
    }
    return cert;
}

MinFieldResult min_field_size(const Network& n, Mode mode,
                              const std::vector<uint32_t>& q_list,
                              const SearchOptions& opts) {
    MinFieldResult res;
    for (uint32_t q : q_list) {
        FieldPtr f = Field::parse(std::to_string(q));
        auto cert = exhaustive_search(n, f, mode, opts);
        res.verdicts.emplace_back(q, cert.feasible);
        if (cert.feasible && (!res.min_q || q < *res.min_q)) res.min_q = q;
        cert.code.reset();  // summaries only
        res.certificates.push_back(std::move(cert));
    }
    return res;
}

RelationshipAudit relationship_audit(const Network& n, const std::vector<uint32_t>& q_list,
                         const SearchOptions& opts) {
    RelationshipAudit audit;
    audit.fields = q_list;
    audit.equal_depth = equal_depth(n);
    audit.consistent = true;
    for (uint32_t q : q_list) {
        FieldPtr f = Field::parse(std::to_string(q));
        auto inst = exhaustive_search(n, f, Mode::instantaneous, opts);
        auto ud = exhaustive_search(n, f, Mode::unit_delay, opts);
        audit.inst_feasible.push_back(inst.feasible);
        audit.ud_feasible.push_back(ud.feasible);

        if (ud.feasible && !inst.feasible) {
            // the found unit-delay code must convert to an instantaneous one
            // over an extension
            try {
                ud_to_inst(n, *ud.code);
                audit.prop2_conversions.push_back(q);
            } catch (const Error& e) {
                audit.consistent = false;
                audit.detail += "prop2 conversion failed at q=" + std::to_string(q) +
                                ": " + e.what() + "; ";
            }
        }
        if (audit.equal_depth && inst.feasible != ud.feasible) {
            audit.consistent = false;
            audit.detail += "equal-depth verdicts differ at q=" + std::to_string(q) + "; ";
        }
    }
    if (audit.detail.empty()) audit.detail = "consistent with the relationship table";
    return audit;
}

}  // namespace oracle
}  // namespace netcode
