#include "netcode/convert.hpp"

namespace netcode {

ConvertResult ud_to_inst(const Network& n, const NetworkCode& c_ud) {
    if (c_ud.mode() != Mode::unit_delay)
        throw Error("ud_to_inst expects a unit-delay code");
    const Field* f = c_ud.field();

    TransferReport report = transfer_matrices(n, c_ud);
    auto verdict = check_feasibility(report);
    if (!verdict.feasible)
        throw Error("ud_to_inst: input code is not feasible (" + verdict.str() + ")");

    // g = prod_t g_t with incremental reduction (Rat keeps lowest terms)
    Rat g = Rat::constant(f, 1);
    for (const SinkTransfer& st : report.sinks) g = g * st.det;

    const int deg_gn = std::max(g.num().degree(), 0);
    const int deg_gd = std::max(g.den().degree(), 0);
    const uint64_t min_size = uint64_t(deg_gn) + uint64_t(deg_gd);

    FieldPtr base = Field::make(f->characteristic(), f->degree());
    uint64_t want = min_size;
    while (true) {
        auto [Q, emb] = extension_containing(base, want);
        // scan z_Q in representative order
        for (uint32_t z0 = 0; z0 < Q->size(); ++z0) {
            if (g.num().eval_embedded(emb, z0) == 0) continue;
            if (g.den().eval_embedded(emb, z0) == 0) continue;
            bool ok = true;
            for (const auto& [key, k] : c_ud.kernels()) {
                if (k.num().eval_embedded(emb, z0) == 0 ||
                    k.den().eval_embedded(emb, z0) == 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;

            ConvertResult res;
            res.q_field = Q;
            res.z_q = z0;
            res.deg_gn = deg_gn;
            res.deg_gd = deg_gd;
            res.inst_code = NetworkCode(Mode::instantaneous, Q.get());
            for (const auto& [key, k] : c_ud.kernels())
                res.inst_code.set_kernel(key.first, key.second,
                                         Rat::constant(Q.get(),
                                                       k.eval_embedded(emb, z0)));
            auto out = check_feasibility(n, res.inst_code);
            if (!out.feasible)
                throw Error("ud_to_inst: converted code failed verification (internal)");
            return res;
        }
        // Every element was excluded by kernel zero/pole guards (the counting
        // argument only covers g); grow the extension and rescan.
        if (want >= Field::kMaxSize)
            throw FieldError("ud_to_inst: no valid z_Q below the field size cap");
        auto next = Q->size();
        want = next;  // forces a strictly larger extension next round
    }
}

}  // namespace netcode
