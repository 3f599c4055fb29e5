#include "netcode/sim.hpp"

#include <algorithm>

namespace netcode {

std::vector<uint32_t> series(const Rat& r, int terms) {
    const Field* f = r.field();
    std::vector<uint32_t> s(static_cast<size_t>(terms), 0);
    if (r.is_zero()) return s;
    Poly num = r.num(), den = r.den();
    int vn = num.valuation(), vd = den.valuation();
    if (vd > 0) {
        if (vn < vd) throw Error("non-causal rational function: " + r.str());
        // shift the common z power out
        std::vector<uint32_t> nc(num.coeffs().begin() + vd, num.coeffs().end());
        std::vector<uint32_t> dc(den.coeffs().begin() + vd, den.coeffs().end());
        num = Poly(f, std::move(nc));
        den = Poly(f, std::move(dc));
    }
    uint32_t d0_inv = f->inv(den.coeff(0));
    for (int t = 0; t < terms; ++t) {
        uint32_t acc = num.coeff(t);
        for (int k = 1; k <= std::min(t, den.degree()); ++k)
            acc = f->sub(acc, f->mul(den.coeff(k), s[size_t(t - k)]));
        s[size_t(t)] = f->mul(acc, d0_inv);
    }
    return s;
}

Trace simulate(const Network& n, const NetworkCode& c,
               const std::vector<std::vector<uint32_t>>& inputs, int horizon) {
    const Field* f = c.field();
    const int h = n.h();
    if (int(inputs.size()) != h) throw Error("expected " + std::to_string(h) + " input sequences");
    for (const auto& x : inputs) {
        if (int(x.size()) != horizon) throw Error("input length != horizon");
        for (uint32_t v : x)
            if (v >= f->size()) throw FieldError("input symbol outside the code's field");
    }

    Trace tr;
    tr.horizon = horizon;
    tr.inputs = inputs;
    for (int seq = 1; seq <= h; ++seq)
        tr.sequences[Network::imag_source_id(seq)] = inputs[size_t(seq - 1)];

    // per-pair filter state: contribution sequence computed lazily in step order
    struct Filter {
        Poly num, den;  // den constant term nonzero after the valuation shift
        std::vector<uint32_t> out;
    };
    std::map<std::pair<int, int>, Filter> filters;
    auto filter_for = [&](int eid, int pid, const Rat& k) -> Filter& {
        auto it = filters.find({eid, pid});
        if (it != filters.end()) return it->second;
        Poly num = k.num(), den = k.den();
        int vd = den.valuation();
        if (vd > 0) {
            if (num.valuation() < vd)
                throw Error("non-causal kernel on edge " + std::to_string(eid));
            std::vector<uint32_t> nc(num.coeffs().begin() + vd, num.coeffs().end());
            std::vector<uint32_t> dc(den.coeffs().begin() + vd, den.coeffs().end());
            num = Poly(f, std::move(nc));
            den = Poly(f, std::move(dc));
        }
        return filters.emplace(std::make_pair(eid, pid), Filter{num, den, {}})
            .first->second;
    };

    std::vector<int> order = n.topo_edge_order();
    std::vector<std::pair<int, std::vector<int>>> plan;  // edge -> preds
    for (int eid : order) plan.emplace_back(eid, n.preds_of_edge(eid));
    for (int t = 0; t < n.sink_count(); ++t)
        for (int slot = 0; slot < n.demand_count(t); ++slot) {
            int iid = n.imag_sink_id(t, slot);
            plan.emplace_back(iid, n.preds_of_edge(iid));
        }
    for (const auto& [eid, preds] : plan) tr.sequences[eid].assign(size_t(horizon), 0);

    for (int step = 0; step < horizon; ++step) {
        for (const auto& [eid, preds] : plan) {
            uint32_t acc = 0;
            for (int pid : preds) {
                Rat k = c.kernel(eid, pid);
                if (k.is_zero()) continue;
                Filter& flt = filter_for(eid, pid, k);
                const auto& x = tr.sequences.at(pid);
                // y[t] = (sum_k num_k x[t-k] - sum_{k>=1} den_k y[t-k]) / den_0
                uint32_t val = 0;
                for (int kk = 0; kk <= std::min(step, flt.num.degree()); ++kk)
                    val = f->add(val, f->mul(flt.num.coeff(kk), x[size_t(step - kk)]));
                for (int kk = 1; kk <= std::min(step, flt.den.degree()); ++kk)
                    val = f->sub(val, f->mul(flt.den.coeff(kk), flt.out[size_t(step - kk)]));
                val = f->mul(val, f->inv(flt.den.coeff(0)));
                flt.out.push_back(val);
                acc = f->add(acc, val);
            }
            tr.sequences[eid][size_t(step)] = acc;
        }
    }
    return tr;
}

std::vector<uint32_t> expected_sequence(const std::vector<Rat>& global_vector,
                                        const std::vector<std::vector<uint32_t>>& inputs,
                                        int horizon) {
    if (global_vector.empty()) throw Error("empty global vector");
    const Field* f = global_vector[0].field();
    std::vector<uint32_t> out(size_t(horizon), 0);
    for (size_t i = 0; i < global_vector.size(); ++i) {
        if (global_vector[i].is_zero()) continue;
        auto s = series(global_vector[i], horizon);
        for (int t = 0; t < horizon; ++t) {
            uint32_t acc = out[size_t(t)];
            for (int k = 0; k <= t; ++k)
                acc = f->add(acc, f->mul(s[size_t(k)], inputs[i][size_t(t - k)]));
            out[size_t(t)] = acc;
        }
    }
    return out;
}

std::vector<bool> decode_check(const Network& n, const Trace& trace,
                               const TransferReport& report, int margin) {
    std::vector<bool> ok;
    for (const SinkTransfer& st : report.sinks) {
        const auto& demands = n.sinks()[size_t(st.sink)].demands;
        int max_deg = 0;
        for (size_t r = 0; r < st.M.rows(); ++r)
            for (size_t c = 0; c < st.M.cols(); ++c) {
                const Rat& e = st.M.at(r, c);
                max_deg = std::max(max_deg, std::max(e.num().degree(), e.den().degree()));
            }
        if (trace.horizon < max_deg + margin)
            throw Error("horizon too short for sink " +
                        n.node_name(n.sinks()[size_t(st.sink)].node) + ": need >= " +
                        std::to_string(max_deg + margin));
        bool sink_ok = true;
        for (size_t slot = 0; slot < st.M.cols(); ++slot) {
            // demanded-rows-only expectation: interference shows as mismatch
            std::vector<uint32_t> expect(size_t(trace.horizon), 0);
            const Field* f = st.M.field();
            for (int d : demands) {
                const Rat& entry = st.M.at(size_t(d - 1), slot);
                if (entry.is_zero()) continue;
                auto s = series(entry, trace.horizon);
                const auto& x = trace.inputs[size_t(d - 1)];
                for (int t = 0; t < trace.horizon; ++t) {
                    uint32_t acc = expect[size_t(t)];
                    for (int k = 0; k <= t; ++k)
                        acc = f->add(acc, f->mul(s[size_t(k)], x[size_t(t - k)]));
                    expect[size_t(t)] = acc;
                }
            }
            const auto& observed = trace.sequences.at(n.imag_sink_id(st.sink, int(slot)));
            if (observed != expect) {
                sink_ok = false;
                break;
            }
        }
        ok.push_back(sink_ok);
    }
    return ok;
}

}  // namespace netcode
