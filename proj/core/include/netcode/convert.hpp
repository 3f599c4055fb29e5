#pragma once

#include "netcode/code.hpp"
#include "netcode/network.hpp"

namespace netcode {

struct ConvertResult {
    NetworkCode inst_code;  // over F_Q
    FieldPtr q_field;
    uint32_t z_q = 0;
    int deg_gn = 0;
    int deg_gd = 0;
};

/// Delay elimination: verifies the unit-delay code, forms g = prod_t g_t in
/// lowest terms, extends to F_Q with Q > deg(g_n) + deg(g_d), scans z_Q in
/// representative order skipping roots of g_n g_d and zeros/poles of any
/// kernel, evaluates every kernel at z_Q, and verifies the result.
ConvertResult ud_to_inst(const Network& n, const NetworkCode& c_ud);

}  // namespace netcode
