#pragma once

#include <string>

#include "netcode/code.hpp"
#include "netcode/delaycode.hpp"
#include "netcode/network.hpp"

namespace netcode {

/// Network description format (see README): {nodes, edges, sources, sinks}
/// with edges {id, tail, head} by node name and 1-based demand indices.
Network network_from_json(const std::string& text);
std::string network_to_json(const Network& n, bool pretty = false);

/// Code format: {mode, field, kernels: [{edge, pred_edge, kernel: {num, den}}]}
/// with polynomial coefficient arrays ascending in z.
NetworkCode code_from_json(const std::string& text);
std::string code_to_json(const NetworkCode& c, bool pretty = false);

/// Scheme format: {discipline, mode, entries: [{edge, pred, m, delay}]}
DelayCodeScheme scheme_from_json(const std::string& text);
std::string scheme_to_json(const DelayCodeScheme& s, bool pretty = false);

/// Transfer report with stringified rational entries, per sink.
std::string report_to_json(const Network& n, const TransferReport& r,
                           bool pretty = false);

/// Either a code or a scheme, sniffed from the JSON shape.
struct LoadedCode {
    bool is_scheme = false;
    NetworkCode code;
    DelayCodeScheme scheme;
};
LoadedCode code_or_scheme_from_json(const Network& n, const std::string& text);

std::string read_file(const std::string& path);   // "-" reads stdin
void write_file(const std::string& path, const std::string& text);  // "-" writes stdout

}  // namespace netcode
