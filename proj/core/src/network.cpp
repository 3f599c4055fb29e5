#include "netcode/network.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace netcode {

Network::Network(std::vector<std::string> node_names, std::vector<Edge> edges,
                 std::vector<Source> sources, std::vector<SinkSpec> sinks)
    : node_names_(std::move(node_names)),
      edges_(std::move(edges)),
      sources_(std::move(sources)),
      sinks_(std::move(sinks)) {
    const size_t nn = node_names_.size();
    in_.resize(nn);
    out_.resize(nn);
    source_idx_.assign(nn, -1);
    sink_idx_.assign(nn, -1);

    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.id < 0) throw GraphError("real edge ids must be non-negative");
        if (!edge_by_id_.emplace(e.id, i).second)
            throw GraphError("duplicate edge id " + std::to_string(e.id));
        if (e.tail < 0 || e.tail >= int(nn) || e.head < 0 || e.head >= int(nn))
            throw GraphError("edge endpoint out of range");
        out_[size_t(e.tail)].push_back(e.id);
        in_[size_t(e.head)].push_back(e.id);
    }
    for (auto& v : in_) std::sort(v.begin(), v.end());
    for (auto& v : out_) std::sort(v.begin(), v.end());

    h_ = 0;
    for (size_t i = 0; i < sources_.size(); ++i) {
        const Source& s = sources_[i];
        if (s.node < 0 || s.node >= int(nn)) throw GraphError("source node out of range");
        if (s.h < 1) throw GraphError("source must generate at least one sequence");
        if (source_idx_[size_t(s.node)] >= 0) throw GraphError("duplicate source node");
        source_idx_[size_t(s.node)] = int(i);
        for (int j = 0; j < s.h; ++j) seq_source_node_.push_back(s.node);
        h_ += s.h;
    }
    int offset = 0;
    for (size_t i = 0; i < sinks_.size(); ++i) {
        const SinkSpec& t = sinks_[i];
        if (t.node < 0 || t.node >= int(nn)) throw GraphError("sink node out of range");
        if (sink_idx_[size_t(t.node)] >= 0) throw GraphError("duplicate sink node");
        sink_idx_[size_t(t.node)] = int(i);
        sink_slot_offset_.push_back(offset);
        offset += int(t.demands.size());
    }
    validate();
}

void Network::validate() const {
    if (sources_.empty()) throw GraphError("network has no source");
    for (const Source& s : sources_) {
        if (!in_[size_t(s.node)].empty())
            throw GraphError("source " + node_name(s.node) + " has incoming edges");
        if (is_sink(s.node))
            throw GraphError("node " + node_name(s.node) + " is both source and sink");
    }
    for (const SinkSpec& t : sinks_) {
        if (!out_[size_t(t.node)].empty())
            throw GraphError("sink " + node_name(t.node) + " has outgoing edges");
        int prev = 0;
        for (int d : t.demands) {
            if (d < 1 || d > h_)
                throw GraphError("demand index out of range at sink " + node_name(t.node));
            if (d <= prev)
                throw GraphError("demands must be strictly increasing at sink " +
                                 node_name(t.node));
            prev = d;
        }
    }
    // acyclicity via Kahn over nodes
    std::vector<int> indeg(node_names_.size(), 0);
    for (const Edge& e : edges_) ++indeg[size_t(e.head)];
    std::deque<int> ready;
    for (size_t v = 0; v < node_names_.size(); ++v)
        if (indeg[v] == 0) ready.push_back(int(v));
    size_t seen = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop_front();
        ++seen;
        for (int eid : out_[size_t(v)]) {
            int head = edge(eid).head;
            if (--indeg[size_t(head)] == 0) ready.push_back(head);
        }
    }
    if (seen != node_names_.size()) throw GraphError("cycle detected");
}

int Network::node_index(const std::string& name) const {
    for (size_t i = 0; i < node_names_.size(); ++i)
        if (node_names_[i] == name) return int(i);
    throw GraphError("unknown node " + name);
}

const Edge& Network::edge(int id) const {
    auto it = edge_by_id_.find(id);
    if (it == edge_by_id_.end()) throw GraphError("unknown edge id " + std::to_string(id));
    return edges_[it->second];
}

int Network::imag_sink_id(int sink_idx, int slot) const {
    return -(h_ + sink_slot_offset_[size_t(sink_idx)] + slot + 1);
}

std::pair<int, int> Network::sink_slot_of_imag(int id) const {
    int ofs = -id - h_ - 1;
    for (size_t k = sinks_.size(); k-- > 0;) {
        if (ofs >= sink_slot_offset_[k])
            return {int(k), ofs - sink_slot_offset_[k]};
    }
    throw GraphError("bad imaginary sink edge id");
}

std::vector<int> Network::imag_in_at(int node) const {
    std::vector<int> ids;
    for (int seq = 1; seq <= h_; ++seq)
        if (seq_source_node_[size_t(seq - 1)] == node) ids.push_back(imag_source_id(seq));
    return ids;
}

std::vector<int> Network::preds_of_edge(int id) const {
    int tail;
    if (id >= 0) {
        tail = edge(id).tail;
    } else if (is_imag_source(id)) {
        return {};
    } else {
        tail = sinks_[size_t(sink_slot_of_imag(id).first)].node;
    }
    std::vector<int> preds = imag_in_at(tail);
    const auto& real_in = in_edges(tail);
    preds.insert(preds.end(), real_in.begin(), real_in.end());
    return preds;
}

std::vector<int> Network::topo_node_order() const {
    std::vector<int> indeg(node_names_.size(), 0);
    for (const Edge& e : edges_) ++indeg[size_t(e.head)];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (size_t v = 0; v < node_names_.size(); ++v)
        if (indeg[v] == 0) ready.push(int(v));
    std::vector<int> order;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int eid : out_[size_t(v)])
            if (--indeg[size_t(edge(eid).head)] == 0) ready.push(edge(eid).head);
    }
    return order;
}

std::vector<int> Network::topo_edge_order() const {
    std::vector<int> node_pos(node_names_.size(), 0);
    auto norder = topo_node_order();
    for (size_t i = 0; i < norder.size(); ++i) node_pos[size_t(norder[i])] = int(i);
    std::vector<int> ids;
    ids.reserve(edges_.size());
    for (const Edge& e : edges_) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        int pa = node_pos[size_t(edge(a).tail)], pb = node_pos[size_t(edge(b).tail)];
        return pa != pb ? pa < pb : a < b;
    });
    return ids;
}

// ---------------------------------------------------------------------------
// Unit-capacity max flow on an arc list (shared by both decompositions).
namespace {

struct Arc {
    int from, to;   // internal vertex ids
    int label;      // edge id in the original network, or sentinel
    bool used = false;
};

constexpr int kNodeArc = std::numeric_limits<int>::min();

struct FlowGraph {
    int vertex_count = 0;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out_arcs;  // arc indices, in insertion order

    int add_vertex() {
        out_arcs.emplace_back();
        return vertex_count++;
    }
    void add_arc(int from, int to, int label) {
        out_arcs[size_t(from)].push_back(int(arcs.size()));
        arcs.push_back({from, to, label});
    }

    /// One augmenting path source->target over the residual graph (forward
    /// unused arcs, backward used arcs), BFS in insertion order.
    bool augment(int source, int target) {
        std::vector<int> how(size_t(vertex_count), -2);  // arc idx (+1 offset sign)
        std::vector<int> via(size_t(vertex_count), -1);
        std::deque<int> q{source};
        how[size_t(source)] = -1;
        while (!q.empty() && how[size_t(target)] == -2) {
            int v = q.front();
            q.pop_front();
            for (int ai : out_arcs[size_t(v)]) {
                const Arc& a = arcs[size_t(ai)];
                if (!a.used && how[size_t(a.to)] == -2) {
                    how[size_t(a.to)] = ai;
                    via[size_t(a.to)] = v;
                    q.push_back(a.to);
                }
            }
            // residual (backward) traversal of used arcs entering v
            for (size_t ai = 0; ai < arcs.size(); ++ai) {
                const Arc& a = arcs[ai];
                if (a.used && a.to == v && how[size_t(a.from)] == -2) {
                    how[size_t(a.from)] = ~int(ai);
                    via[size_t(a.from)] = v;
                    q.push_back(a.from);
                }
            }
        }
        if (how[size_t(target)] == -2) return false;
        int v = target;
        while (v != source) {
            int code = how[size_t(v)];
            if (code >= 0) {
                arcs[size_t(code)].used = true;
                v = arcs[size_t(code)].from;
            } else {
                arcs[size_t(~code)].used = false;
                v = arcs[size_t(~code)].to;
            }
        }
        return true;
    }
};

}  // namespace

static FlowDecomposition decompose_impl(const Network& n, int h_required,
                                        bool split_nodes) {
    FlowDecomposition fd;
    fd.h = h_required;
    std::set<int> gstar;
    std::set<int> gstar_nodes;

    for (int t = 0; t < n.sink_count(); ++t) {
        FlowGraph fg;
        // vertex mapping: with splitting, intermediate node v becomes
        // v_in = 2v, v_out = 2v+1; otherwise both map to v.
        const int base = n.node_count();
        auto vin = [&](int v) { return split_nodes ? 2 * v : v; };
        auto vout = [&](int v) {
            if (!split_nodes) return v;
            bool inter = !n.is_source(v) && !n.is_sink(v);
            return inter ? 2 * v + 1 : 2 * v;
        };
        for (int i = 0; i < (split_nodes ? 2 * base : base); ++i) fg.add_vertex();
        int ss = fg.add_vertex();

        if (split_nodes) {
            for (int v = 0; v < base; ++v)
                if (!n.is_source(v) && !n.is_sink(v)) fg.add_arc(vin(v), vout(v), kNodeArc);
        }
        // imaginary source arcs in sequence order, then real edges by id
        for (int seq = 1; seq <= n.h(); ++seq)
            fg.add_arc(ss, vout(n.source_node_of_seq(seq)), Network::imag_source_id(seq));
        std::vector<int> ids;
        for (const Edge& e : n.edges()) ids.push_back(e.id);
        std::sort(ids.begin(), ids.end());
        for (int id : ids) {
            const Edge& e = n.edge(id);
            fg.add_arc(vout(e.tail), vin(e.head), id);
        }

        const int target = vin(n.sinks()[size_t(t)].node);
        int flow = 0;
        while (flow < h_required && fg.augment(ss, target)) ++flow;
        if (flow < h_required) {
            const std::string& sink_name = n.node_name(n.sinks()[size_t(t)].node);
            throw MincutError("sink " + sink_name + " admits only " +
                                  std::to_string(flow) + " edge-disjoint paths, " +
                                  std::to_string(h_required) + " required",
                              sink_name);
        }

        // Path extraction: follow used arcs from each saturated imaginary arc.
        const size_t path_count = size_t(h_required);
        std::vector<FlowPath> sink_paths(path_count);
        std::vector<bool> consumed(fg.arcs.size(), false);
        int slot = 0;
        for (size_t ai = 0; ai < fg.arcs.size(); ++ai) {
            const Arc& a = fg.arcs[ai];
            if (!a.used || a.from != ss) continue;
            FlowPath path;
            path.imag_edge = a.label;
            consumed[ai] = true;
            int v = a.to;
            while (v != target) {
                bool advanced = false;
                for (int bi : fg.out_arcs[size_t(v)]) {
                    const Arc& b = fg.arcs[size_t(bi)];
                    if (b.used && !consumed[size_t(bi)]) {
                        consumed[size_t(bi)] = true;
                        if (b.label != kNodeArc) path.real_edges.push_back(b.label);
                        v = b.to;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) throw Error("flow path extraction stuck (internal)");
            }
            sink_paths[size_t(slot++)] = std::move(path);
        }
        // order paths by the sequence their imaginary edge carries
        std::sort(sink_paths.begin(), sink_paths.end(),
                  [](const FlowPath& a, const FlowPath& b) {
                      return Network::seq_of_imag_source(a.imag_edge) <
                             Network::seq_of_imag_source(b.imag_edge);
                  });

        for (const FlowPath& p : sink_paths) {
            int prev = p.imag_edge;
            for (int eid : p.real_edges) {
                gstar.insert(eid);
                gstar_nodes.insert(n.edge(eid).tail);
                gstar_nodes.insert(n.edge(eid).head);
                fd.sinks_through[eid].push_back(t);
                fd.pred_on_path[{t, eid}] = prev;
                prev = eid;
            }
        }
        fd.paths.push_back(std::move(sink_paths));
    }

    fd.gstar_edges.assign(gstar.begin(), gstar.end());
    fd.gstar_nodes.assign(gstar_nodes.begin(), gstar_nodes.end());
    for (auto& [eid, sinks] : fd.sinks_through) {
        std::sort(sinks.begin(), sinks.end());
        sinks.erase(std::unique(sinks.begin(), sinks.end()), sinks.end());
        std::set<int> ps;
        for (int t : sinks) ps.insert(fd.pred_on_path.at({t, eid}));
        fd.pred_set[eid].assign(ps.begin(), ps.end());
    }
    return fd;
}

FlowDecomposition flow_decompose(const Network& n, int h_required) {
    return decompose_impl(n, h_required, false);
}

FlowDecomposition node_disjoint_paths(const Network& n, int h_required) {
    return decompose_impl(n, h_required, true);
}

std::map<int, std::set<int>> depth_vectors(const Network& n) {
    std::map<int, std::set<int>> d;
    for (const Source& s : n.sources()) d[s.node].insert(0);
    for (int v : n.topo_node_order()) {
        auto it = d.find(v);
        if (it == d.end()) continue;  // unreachable from sources
        for (int eid : n.out_edges(v)) {
            int head = n.edge(eid).head;
            for (int depth : it->second) d[head].insert(depth + 1);
        }
    }
    return d;
}

bool equal_depth(const Network& n) {
    auto d = depth_vectors(n);
    for (const auto& [v, set] : d) {
        if (n.is_source(v) || n.is_sink(v)) continue;
        if (set.size() > 1) return false;
    }
    return true;
}

}  // namespace netcode
