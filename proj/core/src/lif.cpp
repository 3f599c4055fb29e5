#include "netcode/lif.hpp"

#include <algorithm>
#include <set>

namespace netcode {

void update_sink_state(SinkState& st, int e, const std::vector<Rat>& b_e, int pred) {
    const Field* f = st.B.field();
    const size_t h = st.B.rows();
    size_t slot = h;
    for (size_t i = 0; i < st.C.size(); ++i)
        if (st.C[i] == pred) {
            slot = i;
            break;
        }
    if (slot == h) throw Error("predecessor edge not in sink state");

    Rat d = dot(b_e, st.A.column(slot));
    if (d.is_zero())
        throw Error("update_sink_state: b(e) . a_t(pred) = 0 (invariant breach)");

    Rat dinv = d.inverse();
    std::vector<Rat> a_new(h, Rat(f));
    for (size_t r = 0; r < h; ++r) a_new[r] = dinv * st.A.at(r, slot);

    for (size_t s = 0; s < st.C.size(); ++s) {
        if (s == slot) continue;
        Rat corr = dot(b_e, st.A.column(s));
        if (corr.is_zero()) continue;
        for (size_t r = 0; r < h; ++r)
            st.A.at(r, s) = st.A.at(r, s) - corr * a_new[r];
    }
    st.C[size_t(slot)] = e;
    st.B.set_column(slot, b_e);
    st.A.set_column(slot, a_new);
}

namespace {

struct CombineOutcome {
    std::vector<uint32_t> coeffs;
    std::vector<Rat> u;
    bool nonstrict = false;  // succeeded although q <= n
};

// The combining iteration.  `strict` demands q > n up front; the lenient form
// lets the per-edge coefficient scan decide, which is how the construction
// discovers that q = n often suffices on unit-delay instances.
CombineOutcome combine_iterate(
    const std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>>& pairs,
    const Field* f, bool strict, int edge_for_error) {
    const size_t n = pairs.size();
    if (n == 0) throw Error("combining_vector on an empty pair list");
    const uint32_t q = f->size();
    for (const auto& [x, y] : pairs)
        if (dot(x, y).is_zero())
            throw Error("combining_vector precondition x_i . y_i != 0 violated");
    if (strict && q <= n)
        throw Error("combining_vector requires field size > number of pairs (" +
                    std::to_string(q) + " <= " + std::to_string(n) + ")");

    CombineOutcome out;
    out.coeffs.assign(n, 0);
    out.coeffs[0] = 1;
    out.u = pairs[0].first;
    // cur[j] = u . y_j for processed pairs
    std::vector<Rat> cur;
    cur.push_back(dot(out.u, pairs[0].second));
    for (size_t i = 1; i < n; ++i) {
        Rat ui = dot(out.u, pairs[i].second);
        if (!ui.is_zero()) {
            cur.push_back(ui);
            continue;
        }
        std::vector<Rat> dxy;  // x_i . y_j for j <= i
        dxy.reserve(i + 1);
        for (size_t j = 0; j <= i; ++j) dxy.push_back(dot(pairs[i].first, pairs[j].second));
        uint32_t chosen = 0;
        for (uint32_t alpha = 1; alpha < q; ++alpha) {
            bool ok = !dxy[i].scaled(alpha).is_zero();
            for (size_t j = 0; ok && j < i; ++j)
                if ((cur[j] + dxy[j].scaled(alpha)).is_zero()) ok = false;
            if (ok) {
                chosen = alpha;
                break;
            }
        }
        if (chosen == 0)
            throw FieldTooSmallError(
                "no coefficient in F_" + std::to_string(q) +
                    " keeps all sink bases independent at edge " +
                    std::to_string(edge_for_error) + " (|T(e)| = " + std::to_string(n) + ")",
                edge_for_error, int(n));
        out.coeffs[i] = chosen;
        for (size_t j = 0; j < i; ++j) cur[j] = cur[j] + dxy[j].scaled(chosen);
        cur.push_back(dxy[i].scaled(chosen));
        for (size_t r = 0; r < out.u.size(); ++r)
            out.u[r] = out.u[r] + pairs[i].first[r].scaled(chosen);
    }
    out.nonstrict = (q <= n);
    return out;
}

}  // namespace

CombineResult combining_vector(
    const std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>>& pairs,
    const FieldPtr& coeff_field) {
    auto out = combine_iterate(pairs, coeff_field.get(), /*strict=*/true, -1);
    return {out.coeffs, out.u};
}

LifResult lif_construct(const Network& n, const FieldPtr& field, Mode mode,
                        const LifOptions& opts) {
    const Field* f = field.get();
    const int h = n.h();
    for (const SinkSpec& t : n.sinks()) {
        if (int(t.demands.size()) != h)
            throw Error("lif_construct handles multicast demands only (sink " +
                        n.node_name(t.node) + ")");
    }

    FlowDecomposition fd = flow_decompose(n, h);

    LifResult res{NetworkCode(mode, f), {}};
    std::vector<SinkState> states;
    for (int t = 0; t < n.sink_count(); ++t) {
        SinkState st;
        st.sink = t;
        for (int slot = 0; slot < h; ++slot)
            st.C.push_back(Network::imag_source_id(slot + 1));
        st.B = RatMatrix::identity(f, size_t(h));
        st.A = RatMatrix::identity(f, size_t(h));
        states.push_back(std::move(st));
    }

    GlobalVectors vectors;
    for (int seq = 1; seq <= h; ++seq) {
        std::vector<Rat> v(static_cast<size_t>(h), Rat{f});
        v[size_t(seq - 1)] = Rat::constant(f, 1);
        vectors[Network::imag_source_id(seq)] = std::move(v);
    }

    std::set<int> gstar(fd.gstar_edges.begin(), fd.gstar_edges.end());
    auto check_invariants = [&](const SinkState& st) {
        for (size_t i = 0; i < st.C.size(); ++i)
            for (size_t j = 0; j < st.C.size(); ++j) {
                Rat d = dot(st.B.column(i), st.A.column(j));
                bool want_one = (i == j);
                if (want_one != d.is_one() || (!want_one && !d.is_zero()))
                    throw Error("LIF invariant B^T A = I broken");
            }
    };

    for (int eid : n.topo_edge_order()) {
        if (!gstar.count(eid)) continue;
        const auto& sinks = fd.sinks_through.at(eid);
        std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> pairs;
        std::vector<int> preds;
        for (int t : sinks) {
            int pred = fd.pred_on_path.at({t, eid});
            const SinkState& st = states[size_t(t)];
            size_t slot = 0;
            while (st.C[slot] != pred) ++slot;
            pairs.emplace_back(vectors.at(pred), st.A.column(slot));
            preds.push_back(pred);
        }

        auto out = combine_iterate(pairs, f, /*strict=*/false, eid);
        if (out.nonstrict) ++res.stats.nonstrict_successes;
        res.stats.max_t_count = std::max(res.stats.max_t_count, int(sinks.size()));

        // group the pair coefficients into per-predecessor kernels
        std::map<int, uint32_t> m;
        for (size_t k = 0; k < preds.size(); ++k)
            m[preds[k]] = f->add(m.count(preds[k]) ? m[preds[k]] : 0, out.coeffs[k]);

        std::vector<Rat> b_e(static_cast<size_t>(h), Rat{f});
        for (const auto& [pred, coeff] : m) {
            if (coeff == 0) continue;
            Rat kernel = (mode == Mode::unit_delay)
                             ? Rat(Poly::monomial(f, coeff, 1))
                             : Rat::constant(f, coeff);
            res.code.set_kernel(eid, pred, kernel);
            const auto& bp = vectors.at(pred);
            for (int r = 0; r < h; ++r)
                b_e[size_t(r)] = b_e[size_t(r)] + kernel * bp[size_t(r)];
        }
        vectors[eid] = b_e;

        for (size_t k = 0; k < sinks.size(); ++k)
            update_sink_state(states[size_t(sinks[size_t(k)])], eid, b_e, preds[k]);
        if (opts.check_invariants)
            for (int t : sinks) check_invariants(states[size_t(t)]);
        ++res.stats.edges_processed;
    }

    // step 4: the sink's imaginary edges select the last edge of each path,
    // so B_t ends up equal to M_t
    for (int t = 0; t < n.sink_count(); ++t) {
        for (int slot = 0; slot < h; ++slot) {
            const FlowPath& p = fd.paths[size_t(t)][size_t(slot)];
            int last = p.real_edges.empty() ? p.imag_edge : p.real_edges.back();
            res.code.set_kernel(n.imag_sink_id(t, slot), last, Rat::constant(f, 1));
        }
    }
    return res;
}

}  // namespace netcode
