#include "netcode/code.hpp"

#include <algorithm>

namespace netcode {

std::string mode_name(Mode m) {
    return m == Mode::instantaneous ? "inst" : "ud";
}

Mode parse_mode(const std::string& s) {
    if (s == "inst" || s == "instantaneous") return Mode::instantaneous;
    if (s == "ud" || s == "unit_delay" || s == "unit-delay") return Mode::unit_delay;
    throw Error("unknown mode: " + s);
}

void NetworkCode::set_kernel(int edge, int pred, Rat k) {
    if (k.field() != nullptr && !(*k.field() == *field_))
        throw FieldError("kernel field mismatch");
    if (k.is_zero())
        kernels_.erase({edge, pred});
    else
        kernels_[{edge, pred}] = std::move(k);
}

Rat NetworkCode::kernel(int edge, int pred) const {
    auto it = kernels_.find({edge, pred});
    return it == kernels_.end() ? Rat::zero(field_) : it->second;
}

void NetworkCode::validate(const Network& n) const {
    for (const auto& [key, k] : kernels_) {
        auto [eid, pid] = key;
        // adjacency: pred must feed the tail of edge
        auto preds = n.preds_of_edge(eid);
        if (std::find(preds.begin(), preds.end(), pid) == preds.end())
            throw Error("kernel on non-adjacent pair (" + std::to_string(eid) + "," +
                        std::to_string(pid) + ")");
        if (mode_ == Mode::instantaneous) {
            if (!k.is_constant())
                throw Error("instantaneous kernel must be constant on edge " +
                            std::to_string(eid));
        } else if (eid >= 0) {
            // real edge: mandatory transmission delay
            int val = k.num().valuation() - k.den().valuation();
            if (val < 1)
                throw Error("unit-delay kernel lacks the z factor on edge " +
                            std::to_string(eid));
            bool from_source = n.is_source(n.edge(eid).tail);
            if (!from_source && !(k.den().is_constant() && k.num().degree() == 1))
                throw Error("intermediate nodes are memory-free: kernel on edge " +
                            std::to_string(eid) + " must be z * constant");
        }
        // imaginary sink edges: any rational accepted
    }
}

GlobalVectors propagate(const Network& n, const NetworkCode& c) {
    const Field* f = c.field();
    GlobalVectors b;
    const int h = n.h();

    auto zero_vec = [&] { return std::vector<Rat>(size_t(h), Rat::zero(f)); };

    for (int seq = 1; seq <= h; ++seq) {
        auto v = zero_vec();
        v[size_t(seq - 1)] = Rat::constant(f, 1);
        b[Network::imag_source_id(seq)] = std::move(v);
    }

    auto combine_into = [&](int eid) {
        auto v = zero_vec();
        for (int pid : n.preds_of_edge(eid)) {
            Rat k = c.kernel(eid, pid);
            if (k.is_zero()) continue;
            const auto& bp = b.at(pid);
            for (int i = 0; i < h; ++i) {
                if (bp[size_t(i)].is_zero()) continue;
                v[size_t(i)] = v[size_t(i)] + k * bp[size_t(i)];
            }
        }
        b[eid] = std::move(v);
    };

    for (int eid : n.topo_edge_order()) combine_into(eid);
    for (int t = 0; t < n.sink_count(); ++t)
        for (int slot = 0; slot < n.demand_count(t); ++slot)
            combine_into(n.imag_sink_id(t, slot));
    return b;
}

TransferReport transfer_matrices(const Network& n, const NetworkCode& c) {
    return transfer_matrices(n, c, propagate(n, c));
}

TransferReport transfer_matrices(const Network& n, const NetworkCode& c,
                                 const GlobalVectors& vectors) {
    const Field* f = c.field();
    const int h = n.h();
    TransferReport report;
    for (int t = 0; t < n.sink_count(); ++t) {
        const auto& demands = n.sinks()[size_t(t)].demands;
        const int ht = int(demands.size());
        SinkTransfer st;
        st.sink = t;
        st.M = RatMatrix(f, size_t(h), size_t(ht));
        for (int slot = 0; slot < ht; ++slot)
            st.M.set_column(size_t(slot), vectors.at(n.imag_sink_id(t, slot)));

        st.M_prime = RatMatrix(f, size_t(ht), size_t(ht));
        for (int r = 0; r < ht; ++r)
            for (int cidx = 0; cidx < ht; ++cidx)
                st.M_prime.at(size_t(r), size_t(cidx)) =
                    st.M.at(size_t(demands[size_t(r)] - 1), size_t(cidx));

        std::vector<bool> demanded(size_t(h), false);
        for (int d : demands) demanded[size_t(d - 1)] = true;
        for (int r = 0; r < h; ++r) {
            if (demanded[size_t(r)]) continue;
            for (int cidx = 0; cidx < ht; ++cidx)
                st.interference.push_back(st.M.at(size_t(r), size_t(cidx)));
        }

        st.det = mat_det(st.M_prime);
        st.invertible = !st.det.is_zero();
        st.interference_free =
            std::all_of(st.interference.begin(), st.interference.end(),
                        [](const Rat& r) { return r.is_zero(); });
        report.sinks.push_back(std::move(st));
    }
    return report;
}

std::string FeasibilityVerdict::str() const {
    if (feasible) return "feasible";
    std::string s = "infeasible:";
    for (int t : invertibility_failures)
        s += " invertibility(sink " + std::to_string(t) + ")";
    for (int t : interference_failures)
        s += " interference(sink " + std::to_string(t) + ")";
    return s;
}

FeasibilityVerdict check_feasibility(const TransferReport& report) {
    FeasibilityVerdict v;
    for (const SinkTransfer& st : report.sinks) {
        if (!st.invertible) v.invertibility_failures.push_back(st.sink);
        if (!st.interference_free) v.interference_failures.push_back(st.sink);
    }
    v.feasible = v.invertibility_failures.empty() && v.interference_failures.empty();
    return v;
}

FeasibilityVerdict check_feasibility(const Network& n, const NetworkCode& c) {
    return check_feasibility(transfer_matrices(n, c));
}

NetworkCode lift_to_unit_delay(const Network& /*n*/, const NetworkCode& c_inst) {
    if (c_inst.mode() != Mode::instantaneous)
        throw Error("lift_to_unit_delay expects an instantaneous code");
    const Field* f = c_inst.field();
    NetworkCode ud(Mode::unit_delay, f);
    for (const auto& [key, k] : c_inst.kernels()) {
        auto [eid, pid] = key;
        if (eid >= 0)
            ud.set_kernel(eid, pid, k * Rat::z(f));
        else
            ud.set_kernel(eid, pid, k);
    }
    return ud;
}

}  // namespace netcode
