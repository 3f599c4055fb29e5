#include <random>

#include "doctest.h"
#include "netcode/lif.hpp"
#include "netcode/netgen.hpp"
#include "netcode/oracle.hpp"

using namespace netcode;
using oracle::SearchOptions;

TEST_CASE("butterfly searches") {
    Network bf = netgen::butterfly();
    SearchOptions opts;
    auto inst = oracle::exhaustive_search(bf, Field::make(2, 1), Mode::instantaneous,
                                          opts);
    CHECK(inst.feasible);
    REQUIRE(inst.code.has_value());
    CHECK(check_feasibility(bf, *inst.code).feasible);
    CHECK(inst.explored >= 1);

    auto mf = oracle::min_field_size(bf, Mode::instantaneous, {2, 3}, opts);
    CHECK(mf.min_q == 2);
    CHECK(mf.verdicts == std::vector<std::pair<uint32_t, bool>>{{2, true}, {3, true}});
}

TEST_CASE("search is deterministic") {
    Network bf = netgen::butterfly();
    SearchOptions opts;
    auto a = oracle::exhaustive_search(bf, Field::make(3, 1), Mode::unit_delay, opts);
    auto b = oracle::exhaustive_search(bf, Field::make(3, 1), Mode::unit_delay, opts);
    REQUIRE(a.feasible);
    REQUIRE(b.feasible);
    CHECK(a.code->kernels() == b.code->kernels());
    CHECK(a.explored == b.explored);
}

TEST_CASE("cap reports the family size") {
    Network n = netgen::fig2_cascade();
    SearchOptions opts;
    opts.cap = 50;
    CHECK_THROWS_AS(
        oracle::exhaustive_search(n, Field::make(3, 1), Mode::instantaneous, opts),
        CapExceededError);
}

TEST_CASE("example3 instantaneous searches") {
    Network n = netgen::example3_net();
    SearchOptions opts;
    auto f2 = oracle::exhaustive_search(n, Field::make(2, 1), Mode::instantaneous, opts);
    CHECK_FALSE(f2.feasible);
    auto f3 = oracle::exhaustive_search(n, Field::make(3, 1), Mode::instantaneous, opts);
    CHECK(f3.feasible);
    CHECK(check_feasibility(n, *f3.code).feasible);
}

TEST_CASE("example1: unit-delay infeasible within the family, inst feasible") {
    Network n = netgen::example1_net();
    SearchOptions opts;
    opts.source_deg_bound = 1;
    auto inst = oracle::exhaustive_search(n, Field::make(2, 1), Mode::instantaneous, opts);
    CHECK(inst.feasible);
    auto ud = oracle::exhaustive_search(n, Field::make(2, 1), Mode::unit_delay, opts);
    CHECK_FALSE(ud.feasible);
    CHECK(ud.family.find("deg sigma <= 1") != std::string::npos);
}

TEST_CASE("constructor/oracle agreement") {
    // wherever LIF succeeds the exhaustive search must also report feasible
    for (auto [nm, kk] : {std::pair<int, int>{4, 2}, {5, 2}}) {
        Network n = netgen::combination(nm, kk);
        uint32_t q = kk == 2 && nm == 4 ? 3 : 4;
        FieldPtr f = Field::parse(std::to_string(q));
        CHECK(check_feasibility(n, lif_construct(n, f, Mode::instantaneous).code)
                  .feasible);
        SearchOptions opts;
        auto cert = oracle::exhaustive_search(n, f, Mode::instantaneous, opts);
        CHECK(cert.feasible);
    }
}

TEST_CASE("table1 audit on example1") {
    Network n = netgen::example1_net();
    SearchOptions opts;
    opts.source_deg_bound = 1;
    auto audit = oracle::relationship_audit(n, {2}, opts);
    CHECK(audit.inst_feasible == std::vector<bool>{true});
    CHECK(audit.ud_feasible == std::vector<bool>{false});
    CHECK_FALSE(audit.equal_depth);
    CHECK(audit.consistent);
}

namespace {

// Baseline oracle for tiny instantaneous instances: enumerate every constant
// kernel assignment INCLUDING the sink observation taps, and verify each
// candidate with the generic checker.  Independent of the search's per-sink
// linear-algebra reduction.
bool baseline_inst_feasible(const Network& n, const FieldPtr& f) {
    std::vector<std::pair<int, int>> slots;
    for (const Edge& e : n.edges())
        for (int p : n.preds_of_edge(e.id)) slots.emplace_back(e.id, p);
    for (int t = 0; t < n.sink_count(); ++t)
        for (int slot = 0; slot < n.demand_count(t); ++slot)
            for (int p : n.preds_of_edge(n.imag_sink_id(t, slot)))
                slots.emplace_back(n.imag_sink_id(t, slot), p);
    const uint32_t q = f->size();
    double total_d = 1;
    for (size_t i = 0; i < slots.size(); ++i) total_d *= q;
    REQUIRE(total_d <= 4e6);
    uint64_t total = uint64_t(total_d);
    for (uint64_t code = 0; code < total; ++code) {
        NetworkCode c(Mode::instantaneous, f.get());
        uint64_t t = code;
        for (auto [e, p] : slots) {
            uint32_t v = uint32_t(t % q);
            t /= q;
            if (v) c.set_kernel(e, p, Rat::constant(f.get(), v));
        }
        if (check_feasibility(n, c).feasible) return true;
    }
    return false;
}

Network tiny_random(uint64_t seed) {
    // 1 or 2 sources, h = 2, one or two sinks with arbitrary demand subsets
    std::mt19937_64 rng(seed);
    auto draw = [&](int lo, int hi) { return lo + int(rng() % uint64_t(hi - lo + 1)); };
    while (true) {
        bool two_sources = draw(0, 1) == 1;
        std::vector<std::string> names;
        std::vector<Source> sources;
        int next = 0;
        if (two_sources) {
            names = {"s1", "s2"};
            sources = {{0, 1}, {1, 1}};
            next = 2;
        } else {
            names = {"s"};
            sources = {{0, 2}};
            next = 1;
        }
        int inter = draw(1, 2);
        for (int i = 0; i < inter; ++i) names.push_back("n" + std::to_string(i));
        int sink_count = draw(1, 2);
        std::vector<SinkSpec> sinks;
        for (int i = 0; i < sink_count; ++i) {
            names.push_back("t" + std::to_string(i));
            int kind = draw(0, 2);
            std::vector<int> demands =
                kind == 0 ? std::vector<int>{1} : kind == 1 ? std::vector<int>{2}
                                                            : std::vector<int>{1, 2};
            sinks.push_back({next + inter + i, demands});
        }
        int nodes = int(names.size());
        int first_sink = next + inter;
        std::vector<Edge> edges;
        int edge_count = draw(4, 6);
        for (int id = 0; id < edge_count; ++id) {
            int tail = draw(0, first_sink - 1);
            int head = draw(tail + 1, nodes - 1);
            if (head < next) continue;  // no edges into sources
            edges.push_back({id, tail, head});
        }
        try {
            Network n(names, edges, sources, sinks);
            return n;
        } catch (const Error&) {
            continue;
        }
    }
}

}  // namespace

TEST_CASE("search agrees with the tap-enumerating baseline on tiny instances") {
    int checked = 0;
    for (uint64_t seed = 1; checked < 40; ++seed) {
        Network n = tiny_random(seed);
        // keep the full tap enumeration affordable
        size_t tap_slots = 0;
        for (int t = 0; t < n.sink_count(); ++t)
            tap_slots += size_t(n.demand_count(t)) *
                         n.in_edges(n.sinks()[size_t(t)].node).size();
        size_t real_slots = 0;
        for (const Edge& e : n.edges()) real_slots += n.preds_of_edge(e.id).size();
        if (real_slots + tap_slots > 12) continue;

        FieldPtr f = (checked % 2 == 0) ? Field::make(2, 1) : Field::make(3, 1);
        if (f->size() == 3 && real_slots + tap_slots > 10) continue;
        SearchOptions opts;
        bool fast = oracle::exhaustive_search(n, f, Mode::instantaneous, opts).feasible;
        bool slow = baseline_inst_feasible(n, f);
        CHECK_MESSAGE(fast == slow, "seed ", seed, " q=", f->size(), " fast=", fast,
                      " slow=", slow);
        ++checked;
    }
}

namespace {

// Baseline for tiny unit-delay MULTICAST instances: taps cannot change
// multicast feasibility (it is exactly rank M = h over F_q(z)), so
// enumerating real-edge kernels alone is complete.
bool baseline_ud_multicast_feasible(const Network& n, const FieldPtr& f, int deg) {
    std::vector<std::tuple<int, int, bool>> slots;  // (edge, pred, source?)
    for (const Edge& e : n.edges())
        for (int p : n.preds_of_edge(e.id))
            slots.emplace_back(e.id, p, n.is_source(e.tail));
    const uint32_t q = f->size();
    std::vector<uint64_t> sizes;
    double total_d = 1;
    for (auto& [e, p, src] : slots) {
        uint64_t m = 1;
        for (int i = 0; i < (src ? deg + 1 : 1); ++i) m *= q;
        sizes.push_back(m);
        total_d *= double(m);
    }
    REQUIRE(total_d <= 2e6);
    for (uint64_t code = 0; code < uint64_t(total_d); ++code) {
        NetworkCode c(Mode::unit_delay, f.get());
        uint64_t t = code;
        for (size_t i = 0; i < slots.size(); ++i) {
            uint64_t v = t % sizes[i];
            t /= sizes[i];
            auto [e, p, src] = slots[i];
            if (v == 0) continue;
            if (src) {
                std::vector<uint32_t> cs;
                uint64_t w = v;
                while (w) {
                    cs.push_back(uint32_t(w % q));
                    w /= q;
                }
                c.set_kernel(e, p, Rat(Poly(f.get(), cs).shifted(1)));
            } else {
                c.set_kernel(e, p, Rat(Poly::monomial(f.get(), uint32_t(v), 1)));
            }
        }
        // multicast: feasible iff some sink tap assignment works, i.e. the
        // observed columns have full rank at every sink
        bool ok = true;
        auto vectors = propagate(n, c);
        for (int tt = 0; tt < n.sink_count() && ok; ++tt) {
            std::vector<std::vector<Rat>> cols;
            for (int e : n.in_edges(n.sinks()[size_t(tt)].node))
                cols.push_back(vectors.at(e));
            if (vec_rank(cols) < size_t(n.h())) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("unit-delay search agrees with the kernel-enumerating baseline") {
    int checked = 0;
    for (uint64_t seed = 100; checked < 12; ++seed) {
        Network n = [&] {
            try {
                return netgen::random_acyclic(5, 7, 2, 1, seed);
            } catch (const Error&) {
                return netgen::butterfly();
            }
        }();
        size_t slot_count = 0;
        for (const Edge& e : n.edges()) slot_count += n.preds_of_edge(e.id).size();
        if (slot_count > 9) continue;
        SearchOptions opts;
        opts.source_deg_bound = 1;
        auto fast = oracle::exhaustive_search(n, Field::make(2, 1), Mode::unit_delay, opts);
        bool slow = baseline_ud_multicast_feasible(n, Field::make(2, 1), 1);
        CHECK_MESSAGE(fast.feasible == slow, "seed ", seed);
        if (fast.feasible) CHECK(check_feasibility(n, *fast.code).feasible);
        ++checked;
    }
}

TEST_CASE("scaling-quotient reduction preserves verdicts") {
    for (uint64_t seed = 300; seed < 312; ++seed) {
        Network n = tiny_random(seed);
        size_t real_slots = 0;
        for (const Edge& e : n.edges()) real_slots += n.preds_of_edge(e.id).size();
        if (real_slots > 8) continue;
        SearchOptions with;
        SearchOptions without;
        without.quotient_scaling = false;
        FieldPtr f3 = Field::make(3, 1);
        auto a = oracle::exhaustive_search(n, f3, Mode::instantaneous, with);
        auto b = oracle::exhaustive_search(n, f3, Mode::instantaneous, without);
        CHECK(a.feasible == b.feasible);
        CHECK(a.explored <= b.explored);
    }
}

TEST_CASE("audit soak over random instances") {
    // the relationship table must hold on every instance the generator emits
    SearchOptions opts;
    for (int i = 0; i < 30; ++i) {
        int sinks = 2 + (i % 2);
        Network n = netgen::random_acyclic(sinks + 4 + (i % 3), 2 * sinks + 7, 2,
                                           sinks, 7000 + uint64_t(i));
        auto audit = oracle::relationship_audit(n, {2, 3}, opts);
        CHECK_MESSAGE(audit.consistent, "instance ", i, ": ", audit.detail);
    }
}

TEST_CASE("parallel search matches sequential") {
    Network n = netgen::fig2_cascade();
    SearchOptions seq;
    auto a = oracle::exhaustive_search(n, Field::make(3, 1), Mode::instantaneous, seq);
    SearchOptions par = seq;
    par.threads = 4;
    auto b = oracle::exhaustive_search(n, Field::make(3, 1), Mode::instantaneous, par);
    REQUIRE(a.feasible);
    REQUIRE(b.feasible);
    CHECK(a.code->kernels() == b.code->kernels());
}
