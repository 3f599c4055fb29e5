#include "doctest.h"
#include "netcode/delaycode.hpp"
#include "netcode/netgen.hpp"
#include "netcode/serialize.hpp"

using namespace netcode;

namespace {
FieldPtr f2() { return Field::make(2, 1); }

std::vector<Rat> cvec(std::vector<uint32_t> vals) {
    std::vector<Rat> v;
    for (uint32_t x : vals) v.push_back(Rat::constant(f2().get(), x));
    return v;
}
}  // namespace

TEST_CASE("delayed_combine") {
    // single pair: u = x (shifted by the edge z in unit-delay mode)
    auto one = delayed_combine({{cvec({1, 0}), cvec({1, 0}), 5}}, 3, Mode::unit_delay);
    CHECK(one.taps == std::map<int, int>{{5, 0}});
    CHECK(one.u[0] == Rat::z(f2().get()));

    // u_i already works for the next pair: no delay spent
    auto keep = delayed_combine({{cvec({1, 1}), cvec({1, 0}), 5},
                                 {cvec({0, 1}), cvec({0, 1}), 6}},
                                3, Mode::instantaneous);
    CHECK(keep.taps == std::map<int, int>{{5, 0}});

    // the forbidden-value rule rejects beta = 0, so beta = 1 is chosen:
    // u_1 = x_1 = (1,0); pair 2 has x_2 = (1,1), y_2 = (0,1) with
    // u_1 . y_2 = 0, and beta = 0 would give (u_1 + x_2) . y_1 = 0.
    auto shifted = delayed_combine({{cvec({1, 0}), cvec({1, 0}), 5},
                                    {cvec({1, 1}), cvec({0, 1}), 6}},
                                   3, Mode::instantaneous);
    CHECK(shifted.taps == std::map<int, int>{{5, 0}, {6, 1}});
    for (const auto& y : {cvec({1, 0}), cvec({0, 1})})
        CHECK_FALSE(dot(shifted.u, y).is_zero());

    // precondition x_i . y_i != 0
    CHECK_THROWS_AS(delayed_combine({{cvec({1, 0}), cvec({0, 1}), 5}}, 3,
                                    Mode::instantaneous),
                    Error);

    // two pairs share one predecessor and the later one invalidates its tap:
    // the single-copy-per-pair discipline forces the tap to move (beta 0 -> 1)
    auto moved = delayed_combine({{cvec({1, 0}), cvec({1, 0}), 5},
                                  {cvec({0, 1}), cvec({0, 1}), 6},
                                  {cvec({1, 0}), cvec({1, 1}), 5}},
                                 3, Mode::instantaneous);
    CHECK(moved.taps.at(5) == 1);
    CHECK(moved.taps.at(6) == 0);
    for (const auto& y : {cvec({1, 0}), cvec({0, 1}), cvec({1, 1})})
        CHECK_FALSE(dot(moved.u, y).is_zero());
}

TEST_CASE("nonuniform_construct") {
    // butterfly: feasible with zero extra memory
    Network bf = netgen::butterfly();
    DelayCodeScheme s = nonuniform_construct(bf, Mode::unit_delay);
    CHECK(check_feasibility(bf, scheme_to_code(bf, s)).feasible);
    auto audit = budget_audit(bf, s);
    CHECK(audit.ok);
    CHECK(audit.max_memory == 0);

    // (4 choose 2): feasible binary scheme within the |T|-1 budget
    Network c42 = netgen::combination(4, 2);
    DelayCodeScheme s42 = nonuniform_construct(c42, Mode::unit_delay);
    CHECK(check_feasibility(c42, scheme_to_code(c42, s42)).feasible);
    auto a42 = budget_audit(c42, s42);
    CHECK(a42.ok);
    CHECK(a42.max_memory <= 2);

    // |T| = 1: plain routing, no memory in instantaneous mode
    Network chain({"s", "a", "t"}, {{0, 0, 1}, {1, 1, 2}}, {{0, 1}}, {{2, {1}}});
    DelayCodeScheme sc = nonuniform_construct(chain, Mode::instantaneous);
    for (const SchemeEntry& e : sc.entries) CHECK(e.delay == 0);
    CHECK(check_feasibility(chain, scheme_to_code(chain, sc)).feasible);

    // instantaneous mode works too (memory without transmission delays)
    DelayCodeScheme si = nonuniform_construct(c42, Mode::instantaneous);
    CHECK(check_feasibility(c42, scheme_to_code(c42, si)).feasible);
}

TEST_CASE("uniform_construct") {
    for (auto [nm, kk] : {std::pair<int, int>{4, 2}, {5, 2}, {5, 3}}) {
        Network n = netgen::combination(nm, kk);
        DelayCodeScheme s = uniform_construct(n, Mode::unit_delay);
        CHECK(uniformity_audit(n, s));
        CHECK(budget_audit(n, s).ok);
        CHECK(check_feasibility(n, scheme_to_code(n, s)).feasible);
    }
    // the butterfly is per-sink node-disjoint, so the uniform scheme applies
    Network bf = netgen::butterfly();
    DelayCodeScheme sbf = uniform_construct(bf, Mode::unit_delay);
    CHECK(uniformity_audit(bf, sbf));
    CHECK(check_feasibility(bf, scheme_to_code(bf, sbf)).feasible);

    // two paths forced through one relay: no node-disjoint decomposition
    Network squeeze({"s", "a", "t"},
                    {{0, 0, 1}, {1, 0, 1}, {2, 1, 2}, {3, 1, 2}}, {{0, 2}},
                    {{2, {1, 2}}});
    CHECK_THROWS_AS(uniform_construct(squeeze, Mode::unit_delay), MincutError);

    // chain: trivial scheme
    Network chain({"s", "a", "t"}, {{0, 0, 1}, {1, 1, 2}}, {{0, 1}}, {{2, {1}}});
    DelayCodeScheme sc = uniform_construct(chain, Mode::unit_delay);
    CHECK(check_feasibility(chain, scheme_to_code(chain, sc)).feasible);
}

TEST_CASE("materialize") {
    // all delays at the mandatory minimum: the network is unchanged
    Network c42 = netgen::combination(4, 2);
    DelayCodeScheme s = uniform_construct(c42, Mode::unit_delay);
    auto mat = materialize(c42, s);
    CHECK(check_feasibility(mat.network, mat.code).feasible);

    // hand-built scheme with one unit of shared intermediate memory:
    // s -(eA,eB)-> v -(eC,eD)-> t, eC = z(z y_A + y_B), eD = z z y_A
    Network w({"s", "v", "t"}, {{0, 0, 1}, {1, 0, 1}, {2, 1, 2}, {3, 1, 2}},
              {{0, 2}}, {{2, {1, 2}}});
    DelayCodeScheme hand;
    hand.discipline = Discipline::uniform;
    hand.mode = Mode::unit_delay;
    hand.set(0, Network::imag_source_id(1), 1, 1);
    hand.set(1, Network::imag_source_id(2), 1, 1);
    hand.set(2, 0, 1, 2);  // a_{eA} = 2: one memory element on eA
    hand.set(2, 1, 1, 1);
    hand.set(3, 0, 1, 2);  // shared with eC (uniform discipline)
    hand.set(w.imag_sink_id(0, 0), 2, 1, 0);
    hand.set(w.imag_sink_id(0, 1), 3, 1, 0);
    REQUIRE(uniformity_audit(w, hand));
    REQUIRE(check_feasibility(w, scheme_to_code(w, hand)).feasible);

    auto m2 = materialize(w, hand);
    CHECK(m2.nodes_added == 1);
    CHECK(m2.network.node_count() == 4);
    CHECK(check_feasibility(m2.network, m2.code).feasible);
    // every intermediate kernel in the materialized code is z * constant
    CHECK_NOTHROW(m2.code.validate(m2.network));

    // the sink transfer matrices agree entrywise
    auto before = transfer_matrices(w, scheme_to_code(w, hand));
    auto after = transfer_matrices(m2.network, m2.code);
    CHECK(before.sinks[0].M == after.sinks[0].M);

    // non-uniform schemes are rejected
    DelayCodeScheme nu = hand;
    nu.discipline = Discipline::non_uniform;
    CHECK_THROWS_AS(materialize(w, nu), Error);
}

TEST_CASE("uniformity_audit catches violations") {
    Network w({"s", "v", "t"}, {{0, 0, 1}, {1, 0, 1}, {2, 1, 2}, {3, 1, 2}},
              {{0, 2}}, {{2, {1, 2}}});
    DelayCodeScheme bad;
    bad.discipline = Discipline::uniform;
    bad.mode = Mode::unit_delay;
    bad.set(2, 0, 1, 2);
    bad.set(3, 0, 1, 1);  // same incoming edge, different delay
    CHECK_FALSE(uniformity_audit(w, bad));
}

TEST_CASE("fig4_delay_code_search") {
    auto c4 = fig4_delay_code_search(4);
    CHECK_FALSE(c4.solution_found);
    CHECK(c4.combinations == 7 * 5 * 5 * 5);

    auto c8 = fig4_delay_code_search(8);
    CHECK_FALSE(c8.solution_found);
    CHECK(c8.log.size() == 7);

    auto planted = fig4_delay_code_search_planted(8);
    CHECK(planted.solution_found);
    CHECK_FALSE(planted.solution.empty());
}

TEST_CASE("scheme JSON round trip") {
    Network c42 = netgen::combination(4, 2);
    DelayCodeScheme s = nonuniform_construct(c42, Mode::unit_delay);
    DelayCodeScheme back = scheme_from_json(scheme_to_json(s));
    CHECK(scheme_to_json(back) == scheme_to_json(s));
    CHECK(check_feasibility(c42, scheme_to_code(c42, back)).feasible);
}
