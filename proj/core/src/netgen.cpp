#include "netcode/netgen.hpp"

#include <algorithm>
#include <random>

#include "netcode/delaycode.hpp"

namespace netcode {
namespace netgen {

namespace {

/// Incremental builder used by all generators.
struct Build {
    std::vector<std::string> nodes;
    std::vector<Edge> edges;
    std::vector<Source> sources;
    std::vector<SinkSpec> sinks;
    int next_edge = 0;

    int node(const std::string& name) {
        nodes.push_back(name);
        return int(nodes.size()) - 1;
    }
    int edge(int tail, int head) {
        edges.push_back({next_edge, tail, head});
        return next_edge++;
    }
    Network done() { return Network(nodes, edges, sources, sinks); }
};

}  // namespace

Network butterfly() {
    Build b;
    int s = b.node("s"), a = b.node("a"), bb = b.node("b"), c = b.node("c"),
        d = b.node("d"), t1 = b.node("t1"), t2 = b.node("t2");
    b.edge(s, a);    // 0
    b.edge(s, bb);   // 1
    b.edge(a, c);    // 2
    b.edge(a, t1);   // 3
    b.edge(bb, c);   // 4
    b.edge(bb, t2);  // 5
    b.edge(c, d);    // 6
    b.edge(d, t1);   // 7
    b.edge(d, t2);   // 8
    b.sources.push_back({s, 2});
    b.sinks.push_back({t1, {1, 2}});
    b.sinks.push_back({t2, {1, 2}});
    return b.done();
}

Network combination(int n_mid, int k) {
    if (k < 1 || k > n_mid) throw GraphError("combination requires 1 <= k <= n");
    Build b;
    int s = b.node("s");
    std::vector<int> mids;
    for (int i = 1; i <= n_mid; ++i) mids.push_back(b.node("m" + std::to_string(i)));
    for (int m : mids) b.edge(s, m);
    b.sources.push_back({s, k});

    // k-subsets in lexicographic order
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[size_t(i)] = i;
    std::vector<int> all;
    for (int i = 1; i <= k; ++i) all.push_back(i);
    int tnum = 0;
    while (true) {
        std::string name = "t";
        for (int i : idx) name += std::to_string(i + 1) + "_";
        name.pop_back();
        (void)tnum;
        int t = b.node(name);
        for (int i : idx) b.edge(mids[size_t(i)], t);
        b.sinks.push_back({t, all});
        // next subset
        int pos = k - 1;
        while (pos >= 0 && idx[size_t(pos)] == n_mid - k + pos) --pos;
        if (pos < 0) break;
        ++idx[size_t(pos)];
        for (int i = pos + 1; i < k; ++i) idx[size_t(i)] = idx[size_t(i - 1)] + 1;
    }
    return b.done();
}

namespace {
int g_fig2_e1 = -1;
}

Network fig2_cascade() {
    Build b;
    int s = b.node("s"), A = b.node("A"), B = b.node("B"), C = b.node("C"),
        D = b.node("D"), v2 = b.node("v2"), v3 = b.node("v3");
    b.edge(s, A);   // 0
    b.edge(s, B);   // 1
    b.edge(A, v2);  // 2  direct, depth 2 at v2
    b.edge(A, C);   // 3
    b.edge(B, v3);  // 4  direct, depth 2 at v3
    b.edge(B, C);   // 5
    b.edge(C, D);   // 6  bottleneck
    b.edge(D, v2);  // 7  depth 4 at v2
    b.edge(D, v3);  // 8  depth 4 at v3
    int w[4];
    for (int i = 0; i < 4; ++i) w[i] = b.node("w" + std::to_string(i + 1));
    g_fig2_e1 = b.next_edge;
    b.edge(v2, w[0]);  // e1
    b.edge(v2, w[1]);  // e2
    b.edge(v3, w[2]);  // e3
    b.edge(v3, w[3]);  // e4
    b.sources.push_back({s, 2});
    int tnum = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int t = b.node("t" + std::to_string(tnum++));
            b.edge(w[i], t);
            b.edge(w[j], t);
            b.sinks.push_back({t, {1, 2}});
        }
    return b.done();
}

std::vector<int> fig2_cascade_e_ids() {
    if (g_fig2_e1 < 0) fig2_cascade();
    return {g_fig2_e1, g_fig2_e1 + 1, g_fig2_e1 + 2, g_fig2_e1 + 3};
}

Network example1_net() {
    Build b;
    int s1 = b.node("s1"), s2 = b.node("s2"), u1 = b.node("u1"), u2 = b.node("u2"),
        v1 = b.node("v1"), w = b.node("w"), v2 = b.node("v2"), v3 = b.node("v3"),
        t1 = b.node("t1"), t2 = b.node("t2");
    b.edge(s1, u1);  // 0
    b.edge(s2, u2);  // 1
    b.edge(u1, v1);  // 2  into the mixer
    b.edge(u2, v1);  // 3
    b.edge(u1, v2);  // 4  direct copy of x1 for cancellation at v2
    b.edge(u2, v3);  // 5  direct copy of x2 for cancellation at v3
    b.edge(v1, w);   // 6  single mixer output: both coefficients forced nonzero
    b.edge(w, v2);   // 7
    b.edge(w, v3);   // 8
    b.edge(v2, t2);  // 9
    b.edge(v3, t1);  // 10
    b.sources.push_back({s1, 1});
    b.sources.push_back({s2, 1});
    b.sinks.push_back({t1, {1}});
    b.sinks.push_back({t2, {2}});
    return b.done();
}

namespace {
int g_ex3_e1 = -1;
}

Network example3_net() {
    Build b;
    int s1 = b.node("s1"), s2 = b.node("s2"), s3 = b.node("s3");
    int v0 = b.node("v0"), r1 = b.node("r1");
    int w2 = b.node("w2"), v2 = b.node("v2"), r2 = b.node("r2");
    int v1 = b.node("v1"), r3 = b.node("r3");
    int t1 = b.node("t1"), t2 = b.node("t2"), t3 = b.node("t3"), t4 = b.node("t4"),
        t5 = b.node("t5");

    b.edge(s1, v0);  // 0
    b.edge(s2, v0);  // 1
    b.edge(s3, v0);  // 2
    g_ex3_e1 = b.next_edge;
    b.edge(v0, r1);  // 3 = e1, must carry all three sequences
    b.edge(s2, v2);  // 4 x2 at depth 1
    b.edge(s3, w2);  // 5
    b.edge(w2, v2);  // 6 x3 at depth 2: the delay disparity at v2
    b.edge(v2, r2);  // 7 = e2
    b.edge(r1, v1);  // 8
    b.edge(r2, v1);  // 9
    b.edge(v1, r3);  // 10 = e3
    b.edge(r1, t1);  // 11
    b.edge(r1, t2);  // 12
    b.edge(r1, t3);  // 13
    b.edge(r2, t3);  // 14 t3 takes x2 through e2
    b.edge(r2, t5);  // 15 t5 takes x3 through e2
    b.edge(r3, t4);  // 16 t4 takes x3 through e3

    auto direct = [&](int src, int sink, const std::string& name) {
        int u = b.node(name);
        b.edge(src, u);
        b.edge(u, sink);
    };
    direct(s1, t1, "u1a");  // 17,18
    direct(s2, t1, "u1b");  // 19,20
    direct(s1, t2, "u2a");  // 21,22
    direct(s3, t2, "u2b");  // 23,24
    direct(s3, t3, "u3");   // 25,26
    direct(s1, t4, "u4");   // 27,28
    direct(s2, t5, "u5");   // 29,30

    b.sources.push_back({s1, 1});
    b.sources.push_back({s2, 1});
    b.sources.push_back({s3, 1});
    b.sinks.push_back({t1, {1, 2, 3}});
    b.sinks.push_back({t2, {1, 2, 3}});
    b.sinks.push_back({t3, {1, 2, 3}});
    b.sinks.push_back({t4, {1, 3}});
    b.sinks.push_back({t5, {2, 3}});
    return b.done();
}

std::vector<int> example3_e_ids() {
    if (g_ex3_e1 < 0) example3_net();
    return {g_ex3_e1, g_ex3_e1 + 4, g_ex3_e1 + 7};
}

Network fig4_net() {
    Build b;
    int s[3], v[13];
    for (int i = 0; i < 3; ++i) s[i] = b.node("s" + std::to_string(i + 1));
    for (int i = 0; i < 13; ++i) v[i] = b.node("v" + std::to_string(i + 1));
    // v1..v3 relay one source each; v4..v6 receive all three sources
    for (int i = 0; i < 3; ++i) b.edge(s[i], v[i]);
    for (int i = 3; i < 6; ++i)
        for (int j = 0; j < 3; ++j) b.edge(s[j], v[i]);
    // middle relays v7..v12
    for (int i = 0; i < 6; ++i) b.edge(v[i], v[i + 6]);
    for (int i = 0; i < 3; ++i) b.sources.push_back({s[i], 1});
    // one sink per 3-subset of the six middles, all demands
    int tnum = 1;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                int t = b.node("t" + std::to_string(tnum++));
                b.edge(v[6 + i], t);
                b.edge(v[6 + j], t);
                b.edge(v[6 + k], t);
                b.sinks.push_back({t, {1, 2, 3}});
            }
    // v13 combines the three mixed middles and feeds t21 demanding x1
    for (int i = 3; i < 6; ++i) b.edge(v[6 + i], v[12]);
    int t21 = b.node("t21");
    b.edge(v[12], t21);
    b.sinks.push_back({t21, {1}});
    return b.done();
}

Network forwarding_expanded(const Network& n) {
    DelayCodeScheme scheme = uniform_construct(n, Mode::unit_delay);
    return materialize(n, scheme).network;
}

Network random_acyclic(int nodes, int edges, int h_s, int sinks, uint64_t seed) {
    if (nodes < 2 + sinks || h_s < 1 || sinks < 1 || edges < h_s * (1 + sinks))
        throw GraphError("random_acyclic: parameters cannot admit the demanded rate");
    std::mt19937_64 rng(seed);
    auto draw = [&](int lo, int hi) {  // inclusive, reproducible across platforms
        return lo + int(rng() % uint64_t(hi - lo + 1));
    };
    const int retry_budget = 2000;
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Build b;
        b.node("s");
        const int inter = nodes - 1 - sinks;
        for (int i = 0; i < inter; ++i) b.node("n" + std::to_string(i + 1));
        std::vector<int> sink_nodes;
        for (int i = 0; i < sinks; ++i) sink_nodes.push_back(b.node("t" + std::to_string(i + 1)));
        b.sources.push_back({0, h_s});

        // non-sink nodes already fed from the source; tails are drawn from
        // here so every edge stays on a source-rooted path
        std::vector<int> reached{0};
        auto feed = [&](int head) {
            if (head <= inter &&
                std::find(reached.begin(), reached.end(), head) == reached.end())
                reached.push_back(head);
        };

        for (int i = 0; i < h_s; ++i) {
            int head = inter >= 1 ? draw(1, inter) : sink_nodes[size_t(draw(0, sinks - 1))];
            b.edge(0, head);
            feed(head);
        }
        for (int t : sink_nodes) {
            for (int i = 0; i < h_s; ++i) {
                int tail = reached[size_t(draw(0, int(reached.size()) - 1))];
                b.edge(tail, t);
            }
        }
        while (int(b.edges.size()) < edges) {
            int tail = reached[size_t(draw(0, int(reached.size()) - 1))];
            int head = draw(tail + 1, nodes - 1);
            if (head == 0) continue;
            b.edge(tail, head);
            feed(head);
        }
        std::vector<int> all;
        for (int i = 1; i <= h_s; ++i) all.push_back(i);
        for (int t : sink_nodes) b.sinks.push_back({t, all});

        try {
            Network net = b.done();
            flow_decompose(net, h_s);
            return net;
        } catch (const Error&) {
            continue;  // redraw with advanced rng state
        }
    }
    throw GraphError("random_acyclic: retry budget exhausted");
}

}  // namespace netgen
}  // namespace netcode
