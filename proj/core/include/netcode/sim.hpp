#pragma once

#include <map>
#include <vector>

#include "netcode/code.hpp"
#include "netcode/network.hpp"

namespace netcode {

/// Symbol-level trace: one F_q sequence per edge (real and imaginary).
struct Trace {
    int horizon = 0;
    std::vector<std::vector<uint32_t>> inputs;       // h sequences of length H
    std::map<int, std::vector<uint32_t>> sequences;  // edge id -> symbols
};

/// Drives the inputs through y_e(z) = sum_p m_{e,p}(z) y_p(z), realizing
/// rational kernels as linear feedback filters (denominator taps).  Kernels
/// must be causal as power series (no pole at z = 0).
Trace simulate(const Network& n, const NetworkCode& c,
               const std::vector<std::vector<uint32_t>>& inputs, int horizon);

/// Truncated power-series expansion of a rational function (length terms).
/// Throws for non-causal functions (denominator valuation above numerator's).
std::vector<uint32_t> series(const Rat& r, int terms);

/// Coefficient-wise convolution of the series of b(e) with the inputs; the
/// exact expectation for edge e's trace.
std::vector<uint32_t> expected_sequence(const std::vector<Rat>& global_vector,
                                        const std::vector<std::vector<uint32_t>>& inputs,
                                        int horizon);

/// True per sink iff the observed imaginary-edge sequences equal the
/// truncated series of x(z) M_t(z) restricted to the demanded rows (so any
/// off-demand contribution shows up as a mismatch).  The horizon must exceed
/// the largest degree in M_t plus the settling margin.
std::vector<bool> decode_check(const Network& n, const Trace& trace,
                               const TransferReport& report, int margin = 8);

}  // namespace netcode
