#pragma once

#include <map>
#include <string>
#include <vector>

#include "netcode/network.hpp"
#include "netcode/polyrat.hpp"

namespace netcode {

enum class Mode { instantaneous, unit_delay };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

/// Local encoding kernels m_{e,p}(z) on adjacent edge pairs.  Missing pairs
/// are implicit zeros.
///
/// Mode discipline (checked by validate()):
///   instantaneous — every kernel is a constant in F_q;
///   unit_delay    — kernels on real non-source edges are z * constant,
///                   kernels on source-outgoing real edges are z * rational,
///                   kernels on imaginary sink edges are arbitrary rationals
///                   (the sink's observation taps carry no transmission delay,
///                   so the final LIF basis B_t coincides with M_t).
class NetworkCode {
public:
    NetworkCode() = default;
    NetworkCode(Mode mode, const Field* field) : mode_(mode), field_(field) {}

    Mode mode() const { return mode_; }
    const Field* field() const { return field_; }

    void set_kernel(int edge, int pred, Rat k);
    /// Zero if the pair is absent.
    Rat kernel(int edge, int pred) const;
    const std::map<std::pair<int, int>, Rat>& kernels() const { return kernels_; }

    /// Enforces the mode discipline against a concrete network.
    void validate(const Network& n) const;

private:
    Mode mode_ = Mode::instantaneous;
    const Field* field_ = nullptr;
    std::map<std::pair<int, int>, Rat> kernels_;
};

/// Global encoding vectors b(e) for every edge (real and imaginary), as
/// h-length columns over F_q(z).
using GlobalVectors = std::map<int, std::vector<Rat>>;

/// b(e_i) = i-th unit vector on imaginary source edges, then
/// b(e) = sum_p m_{e,p}(z) b(p) in ancestral order.
GlobalVectors propagate(const Network& n, const NetworkCode& c);

/// Per-sink transfer matrices and feasibility ingredients.
struct SinkTransfer {
    int sink = 0;
    RatMatrix M;        // h x h_t, columns = imaginary sink edge vectors
    RatMatrix M_prime;  // demanded rows of M (ascending demand order)
    Rat det;            // g_t = det M'_t(z)
    std::vector<Rat> interference;  // off-demand entries of M, row-major
    bool invertible = false;
    bool interference_free = false;
};

struct TransferReport {
    std::vector<SinkTransfer> sinks;
};

TransferReport transfer_matrices(const Network& n, const NetworkCode& c);
TransferReport transfer_matrices(const Network& n, const NetworkCode& c,
                                 const GlobalVectors& vectors);

struct FeasibilityVerdict {
    bool feasible = false;
    std::vector<int> invertibility_failures;  // sink indices
    std::vector<int> interference_failures;
    std::string str() const;
};

/// det M'_t(z) != 0 over F_q(z) and every off-demand entry identically zero,
/// for every sink.
FeasibilityVerdict check_feasibility(const TransferReport& report);
FeasibilityVerdict check_feasibility(const Network& n, const NetworkCode& c);

/// Multiplies every real-edge kernel by z and flips the mode.  Imaginary
/// sink kernels (observation taps) are kept as they are.
NetworkCode lift_to_unit_delay(const Network& n, const NetworkCode& c_inst);

}  // namespace netcode
