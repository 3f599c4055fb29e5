#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netcode/errors.hpp"

namespace netcode {

struct Edge {
    int id;    // unique, >= 0; imaginary edges use negative ids
    int tail;  // node index
    int head;  // node index
};

struct Source {
    int node;
    int h;  // number of information sequences generated here
};

struct SinkSpec {
    int node;
    std::vector<int> demands;  // 1-based indices into 1..h, strictly increasing
};

/// Acyclic directed multigraph with sources, sinks and per-sink demands.
///
/// Imaginary edges are synthesized, not stored: the imaginary edge carrying
/// the i-th information sequence (1-based) has id -i and enters the source
/// that generates it; the j-th imaginary output edge (0-based slot) of the
/// k-th sink has id -(h + offset_k + j + 1) where offset_k is the total
/// demand count of earlier sinks.
class Network {
public:
    Network(std::vector<std::string> node_names, std::vector<Edge> edges,
            std::vector<Source> sources, std::vector<SinkSpec> sinks);

    const std::vector<std::string>& node_names() const { return node_names_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Source>& sources() const { return sources_; }
    const std::vector<SinkSpec>& sinks() const { return sinks_; }

    int node_count() const { return int(node_names_.size()); }
    int node_index(const std::string& name) const;
    const std::string& node_name(int idx) const { return node_names_[size_t(idx)]; }

    int h() const { return h_; }
    int sink_count() const { return int(sinks_.size()); }
    int demand_count(int sink_idx) const { return int(sinks_[size_t(sink_idx)].demands.size()); }

    const Edge& edge(int id) const;
    bool has_edge(int id) const { return edge_by_id_.count(id) > 0; }
    /// Real incoming / outgoing edge ids at a node, ascending.
    const std::vector<int>& in_edges(int node) const { return in_[size_t(node)]; }
    const std::vector<int>& out_edges(int node) const { return out_[size_t(node)]; }

    bool is_source(int node) const { return source_idx_[size_t(node)] >= 0; }
    bool is_sink(int node) const { return sink_idx_[size_t(node)] >= 0; }
    int sink_index(int node) const { return sink_idx_[size_t(node)]; }

    // --- imaginary edges -------------------------------------------------
    static int imag_source_id(int seq) { return -seq; }  // seq is 1-based
    int imag_sink_id(int sink_idx, int slot) const;
    bool is_imag_source(int id) const { return id < 0 && -id <= h_; }
    bool is_imag_sink(int id) const { return id < 0 && -id > h_; }
    /// 1-based sequence index for an imaginary source edge id.
    static int seq_of_imag_source(int id) { return -id; }
    /// (sink index, slot) for an imaginary sink edge id.
    std::pair<int, int> sink_slot_of_imag(int id) const;
    /// Node that generates the i-th sequence (1-based).
    int source_node_of_seq(int seq) const { return seq_source_node_[size_t(seq - 1)]; }
    /// Imaginary incoming edge ids at a source node (its own sequences).
    std::vector<int> imag_in_at(int node) const;

    /// Predecessor edge ids (real + imaginary) feeding the tail of edge `id`;
    /// for an imaginary sink edge these are the sink's real incoming edges.
    std::vector<int> preds_of_edge(int id) const;

    /// Real edge ids in a deterministic ancestral order: every edge appears
    /// after all edges incoming at its tail; parallel edges by ascending id.
    std::vector<int> topo_edge_order() const;
    /// Node indices in deterministic topological order.
    std::vector<int> topo_node_order() const;

private:
    void validate() const;

    std::vector<std::string> node_names_;
    std::vector<Edge> edges_;
    std::vector<Source> sources_;
    std::vector<SinkSpec> sinks_;
    int h_ = 0;
    std::map<int, size_t> edge_by_id_;
    std::vector<std::vector<int>> in_, out_;
    std::vector<int> source_idx_, sink_idx_;  // per node, -1 if not
    std::vector<int> seq_source_node_;        // per sequence (0-based)
    std::vector<int> sink_slot_offset_;       // per sink
};

/// One flow path: the imaginary source edge it starts at, then real edges.
struct FlowPath {
    int imag_edge;
    std::vector<int> real_edges;  // in source-to-sink order
};

/// Per-sink edge-disjoint path systems plus the derived LIF bookkeeping.
struct FlowDecomposition {
    int h = 0;
    /// paths[sink][slot]; slot j carries sequence j+1.
    std::vector<std::vector<FlowPath>> paths;
    /// Real edge ids on some path (the edge set of G*), ascending.
    std::vector<int> gstar_edges;
    /// Node indices of G*.
    std::vector<int> gstar_nodes;
    /// T(e): sink indices with a flow path through e, ascending.
    std::map<int, std::vector<int>> sinks_through;
    /// f^t_<-(e): predecessor edge of e on sink t's path through e.
    std::map<std::pair<int, int>, int> pred_on_path;  // key (sink, edge id)
    /// P(e): distinct predecessor edge ids, ascending.
    std::map<int, std::vector<int>> pred_set;

    int t_count(int edge_id) const {
        auto it = sinks_through.find(edge_id);
        return it == sinks_through.end() ? 0 : int(it->second.size());
    }
};

/// h_required edge-disjoint paths per sink, one starting at each imaginary
/// source edge, found by unit-capacity augmenting paths in deterministic
/// order.  Throws MincutError naming the first violating sink.
FlowDecomposition flow_decompose(const Network& n, int h_required);

/// Same, but paths must also be internally node-disjoint (checked via the
/// node-splitting transform).  Throws MincutError if impossible.
FlowDecomposition node_disjoint_paths(const Network& n, int h_required);

/// Multiset (as a set of distinct values) of source-to-node path lengths,
/// for every node reachable from a source.
std::map<int, std::set<int>> depth_vectors(const Network& n);

/// True iff every reachable intermediate (non-source, non-sink) node has a
/// single distinct path length from the sources.
bool equal_depth(const Network& n);

}  // namespace netcode
