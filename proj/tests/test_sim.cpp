#include <random>

#include "doctest.h"
#include "netcode/lif.hpp"
#include "netcode/netgen.hpp"
#include "netcode/sim.hpp"

using namespace netcode;

namespace {
FieldPtr f2() { return Field::make(2, 1); }
}

TEST_CASE("series expansion") {
    // 1/(1+z) over F_2 = 1 + z + z^2 + ...
    Rat geo(Poly::constant(f2().get(), 1), Poly(f2().get(), {1, 1}));
    CHECK(series(geo, 5) == std::vector<uint32_t>{1, 1, 1, 1, 1});
    // z^2/(1+z): shifted
    Rat sh(Poly::monomial(f2().get(), 1, 2), Poly(f2().get(), {1, 1}));
    CHECK(series(sh, 5) == std::vector<uint32_t>{0, 0, 1, 1, 1});
    // 1/z is non-causal
    CHECK_THROWS_AS(series(Rat(Poly::constant(f2().get(), 1), Poly::z(f2().get())), 4),
                    Error);
}

TEST_CASE("chain delays an impulse") {
    Network chain({"s", "a", "t"}, {{0, 0, 1}, {1, 1, 2}}, {{0, 1}}, {{2, {1}}});
    NetworkCode c(Mode::unit_delay, f2().get());
    c.set_kernel(0, Network::imag_source_id(1), Rat::z(f2().get()));
    c.set_kernel(1, 0, Rat::z(f2().get()));
    c.set_kernel(chain.imag_sink_id(0, 0), 1, Rat::constant(f2().get(), 1));

    std::vector<std::vector<uint32_t>> impulse{{1, 0, 0, 0, 0, 0}};
    Trace tr = simulate(chain, c, impulse, 6);
    CHECK(tr.sequences.at(0) == std::vector<uint32_t>{0, 1, 0, 0, 0, 0});
    CHECK(tr.sequences.at(1) == std::vector<uint32_t>{0, 0, 1, 0, 0, 0});
}

TEST_CASE("Example 2: e1 carries the impulse at time 3") {
    Network n = netgen::fig2_cascade();
    NetworkCode c(Mode::unit_delay, f2().get());
    for (const Edge& e : n.edges())
        for (int p : n.preds_of_edge(e.id)) c.set_kernel(e.id, p, Rat::z(f2().get()));
    c.set_kernel(0, Network::imag_source_id(2), Rat::zero(f2().get()));
    c.set_kernel(1, Network::imag_source_id(1), Rat::zero(f2().get()));
    auto e = netgen::fig2_cascade_e_ids();
    c.set_kernel(e[0], 7, Rat::zero(f2().get()));
    c.set_kernel(e[1], 2, Rat::zero(f2().get()));
    c.set_kernel(e[2], 8, Rat::zero(f2().get()));
    for (int t = 0; t < n.sink_count(); ++t) {
        const auto& in = n.in_edges(n.sinks()[size_t(t)].node);
        for (int slot = 0; slot < n.demand_count(t); ++slot)
            c.set_kernel(n.imag_sink_id(t, slot), in.at(size_t(slot)),
                         Rat::constant(f2().get(), 1));
    }
    int H = 12;
    std::vector<std::vector<uint32_t>> inputs{
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}};
    Trace tr = simulate(n, c, inputs, H);
    std::vector<uint32_t> want(size_t(H), 0);
    want[3] = 1;  // b(e1) = (z^3, 0)
    CHECK(tr.sequences.at(e[0]) == want);
}

TEST_CASE("traces equal the convolution of global vectors with inputs") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 10; ++i) {
        Network n = netgen::random_acyclic(7 + (i % 3), 13, 2, 2, 500 + uint64_t(i));
        auto code = lif_construct(n, Field::make(3, 1), Mode::unit_delay).code;
        auto vectors = propagate(n, code);
        int H = 14;
        std::vector<std::vector<uint32_t>> inputs(2);
        for (auto& x : inputs) {
            x.resize(size_t(H));
            for (auto& v : x) v = uint32_t(rng() % 3);
        }
        Trace tr = simulate(n, code, inputs, H);
        for (const Edge& e : n.edges())
            CHECK(tr.sequences.at(e.id) == expected_sequence(vectors.at(e.id), inputs, H));
    }
}

TEST_CASE("rational source kernels run as feedback filters") {
    // s -> a -> t with source kernel z/(1+z): the edge carries the running
    // parity of the input, one step delayed
    Network chain({"s", "a", "t"}, {{0, 0, 1}, {1, 1, 2}}, {{0, 1}}, {{2, {1}}});
    NetworkCode c(Mode::unit_delay, f2().get());
    c.set_kernel(0, Network::imag_source_id(1),
                 Rat(Poly::z(f2().get()), Poly(f2().get(), {1, 1})));
    c.set_kernel(1, 0, Rat::z(f2().get()));
    c.set_kernel(chain.imag_sink_id(0, 0), 1, Rat::constant(f2().get(), 1));
    REQUIRE(check_feasibility(chain, c).feasible);

    int H = 10;
    std::vector<std::vector<uint32_t>> impulse{{1, 0, 0, 0, 0, 0, 0, 0, 0, 0}};
    Trace tr = simulate(chain, c, impulse, H);
    // b(edge 0) = z/(1+z): series 0,1,1,1,...
    CHECK(tr.sequences.at(0) == std::vector<uint32_t>{0, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    auto vectors = propagate(chain, c);
    CHECK(tr.sequences.at(1) == expected_sequence(vectors.at(1), impulse, H));

    auto report = transfer_matrices(chain, c);
    auto ok = decode_check(chain, tr, report);
    CHECK(ok == std::vector<bool>{true});

    // random inputs through the same filter
    std::mt19937_64 rng(41);
    std::vector<std::vector<uint32_t>> x(1);
    x[0].resize(size_t(H));
    for (auto& v : x[0]) v = uint32_t(rng() % 2);
    Trace tx = simulate(chain, c, x, H);
    CHECK(tx.sequences.at(1) == expected_sequence(vectors.at(1), x, H));
    CHECK(decode_check(chain, tx, report) == std::vector<bool>{true});
}

TEST_CASE("simulate rejects bad inputs") {
    Network chain({"s", "a", "t"}, {{0, 0, 1}, {1, 1, 2}}, {{0, 1}}, {{2, {1}}});
    NetworkCode c(Mode::unit_delay, Field::make(2, 1).get());
    c.set_kernel(0, Network::imag_source_id(1), Rat::z(f2().get()));
    // symbol outside F_2
    CHECK_THROWS_AS(simulate(chain, c, {{2, 0}}, 2), FieldError);
    // wrong sequence count
    CHECK_THROWS_AS(simulate(chain, c, {{0, 0}, {0, 0}}, 2), Error);
    // non-causal kernel (1/z on a source edge fails validation and the
    // simulator alike)
    NetworkCode bad(Mode::unit_delay, f2().get());
    bad.set_kernel(0, Network::imag_source_id(1),
                   Rat(Poly::constant(f2().get(), 1), Poly::z(f2().get())));
    CHECK_THROWS_AS(simulate(chain, bad, {{1, 0}}, 2), Error);
}

TEST_CASE("causality: changed future inputs leave earlier symbols alone") {
    Network bf = netgen::butterfly();
    auto code = lif_construct(bf, f2(), Mode::unit_delay).code;
    int H = 10;
    std::vector<std::vector<uint32_t>> a{{1, 0, 1, 0, 1, 0, 1, 0, 1, 0},
                                         {0, 1, 1, 0, 0, 1, 1, 0, 0, 1}};
    auto b = a;
    b[0][5] ^= 1;  // change one input symbol at time 5
    Trace ta = simulate(bf, code, a, H);
    Trace tb = simulate(bf, code, b, H);
    for (const Edge& e : bf.edges())
        for (int t = 0; t <= 5; ++t)
            CHECK(ta.sequences.at(e.id)[size_t(t)] == tb.sequences.at(e.id)[size_t(t)]);
}

TEST_CASE("linearity of traces") {
    Network bf = netgen::butterfly();
    auto code = lif_construct(bf, Field::make(3, 1), Mode::unit_delay).code;
    const Field* f = code.field();
    int H = 8;
    std::mt19937_64 rng(9);
    std::vector<std::vector<uint32_t>> a(2), b(2), sum(2);
    for (int i = 0; i < 2; ++i) {
        a[size_t(i)].resize(size_t(H));
        b[size_t(i)].resize(size_t(H));
        sum[size_t(i)].resize(size_t(H));
        for (int t = 0; t < H; ++t) {
            a[size_t(i)][size_t(t)] = uint32_t(rng() % 3);
            b[size_t(i)][size_t(t)] = uint32_t(rng() % 3);
            sum[size_t(i)][size_t(t)] = f->add(a[size_t(i)][size_t(t)], b[size_t(i)][size_t(t)]);
        }
    }
    Trace ta = simulate(bf, code, a, H);
    Trace tb = simulate(bf, code, b, H);
    Trace ts = simulate(bf, code, sum, H);
    for (const Edge& e : bf.edges())
        for (int t = 0; t < H; ++t)
            CHECK(ts.sequences.at(e.id)[size_t(t)] ==
                  f->add(ta.sequences.at(e.id)[size_t(t)],
                         tb.sequences.at(e.id)[size_t(t)]));
}

TEST_CASE("decode_check") {
    Network bf = netgen::butterfly();
    auto code = lif_construct(bf, f2(), Mode::unit_delay).code;
    auto report = transfer_matrices(bf, code);
    int H = 16;
    std::mt19937_64 rng(3);
    std::vector<std::vector<uint32_t>> inputs(2);
    for (auto& x : inputs) {
        x.resize(size_t(H));
        for (auto& v : x) v = uint32_t(rng() % 2);
    }
    Trace tr = simulate(bf, code, inputs, H);
    auto ok = decode_check(bf, tr, report);
    CHECK(ok == std::vector<bool>{true, true});

    // zero inputs: trivially true
    std::vector<std::vector<uint32_t>> zero(2, std::vector<uint32_t>(size_t(H), 0));
    auto okz = decode_check(bf, simulate(bf, code, zero, H), report);
    CHECK(okz == std::vector<bool>{true, true});

    // horizon too short is reported
    Trace small = simulate(bf, code, {{1, 0}, {0, 1}}, 2);
    CHECK_THROWS_AS(decode_check(bf, small, report), Error);

    // an Example-1-style lifted code shows its interference in the trace
    Network ex1 = netgen::example1_net();
    NetworkCode inst(Mode::instantaneous, f2().get());
    for (const Edge& e : ex1.edges())
        for (int p : ex1.preds_of_edge(e.id))
            inst.set_kernel(e.id, p, Rat::constant(f2().get(), 1));
    inst.set_kernel(ex1.imag_sink_id(0, 0), 10, Rat::constant(f2().get(), 1));
    inst.set_kernel(ex1.imag_sink_id(1, 0), 9, Rat::constant(f2().get(), 1));
    NetworkCode lifted = lift_to_unit_delay(ex1, inst);
    auto rep1 = transfer_matrices(ex1, lifted);
    REQUIRE_FALSE(check_feasibility(rep1).feasible);
    std::vector<std::vector<uint32_t>> ximp(2, std::vector<uint32_t>(16, 0));
    ximp[0][0] = 1;
    ximp[1][1] = 1;
    auto bad = decode_check(ex1, simulate(ex1, lifted, ximp, 16), rep1);
    CHECK((bad[0] == false || bad[1] == false));
}
