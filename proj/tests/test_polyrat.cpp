#include <random>

#include "doctest.h"
#include "netcode/polyrat.hpp"

using namespace netcode;

namespace {

Poly rand_poly(const Field* f, int max_deg, std::mt19937_64& rng) {
    int deg = int(rng() % uint64_t(max_deg + 1));
    std::vector<uint32_t> c(size_t(deg) + 1);
    for (auto& x : c) x = uint32_t(rng() % f->size());
    return Poly(f, std::move(c));
}

// Independent determinant oracle: direct cofactor expansion.
Rat cofactor_det(const RatMatrix& m) {
    const size_t n = m.rows();
    if (n == 0) return Rat::constant(m.field(), 1);
    if (n == 1) return m.at(0, 0);
    Rat acc(m.field());
    for (size_t j = 0; j < n; ++j) {
        RatMatrix sub(m.field(), n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rat term = m.at(0, j) * cofactor_det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TEST_CASE("rational arithmetic canonical forms") {
    auto f2 = Field::make(2, 1);
    auto f3 = Field::make(3, 1);

    Rat z2 = Rat::z(f2.get());
    CHECK((z2 + z2).is_zero());  // characteristic 2

    Rat z5 = Rat(Poly::monomial(f2.get(), 1, 2)) * Rat(Poly::monomial(f2.get(), 1, 3));
    CHECK(z5.num() == Poly::monomial(f2.get(), 1, 5));

    // (z^2-1)/(z-1) over F_3 canonicalizes to z+1; re-multiplication confirms
    Poly num(f3.get(), {2, 0, 1});  // z^2 + 2 = z^2 - 1
    Poly den(f3.get(), {2, 1});     // z + 2 = z - 1
    Rat r(num, den);
    CHECK(r.is_polynomial());
    CHECK(r.num() == Poly(f3.get(), {1, 1}));
    CHECK(r.num() * den == num);

    CHECK_THROWS_AS((void)(r / Rat::zero(f3.get())), FieldError);

    // denominator kept monic
    Rat s(Poly::constant(f3.get(), 1), Poly(f3.get(), {1, 2}));
    CHECK(s.den().is_monic());
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937_64 rng(11);
    auto f3 = Field::make(3, 1);
    for (int i = 0; i < 100; ++i) {
        Poly num = rand_poly(f3.get(), 5, rng);
        Poly den = rand_poly(f3.get(), 4, rng);
        if (den.is_zero()) continue;
        Rat r(num, den);
        Rat again(r.num(), r.den());
        CHECK(r == again);
    }
}

TEST_CASE("degree_bound") {
    auto f2 = Field::make(2, 1);
    auto f3 = Field::make(3, 1);

    Rat a(Poly(f2.get(), {0, 0, 0, 1, 0, 1}));  // z^5+z^3
    CHECK(a.degree_bound() == std::pair<int, int>{5, 0});

    CHECK(Rat::zero(f2.get()).degree_bound() == std::pair<int, int>{kNegInfDegree, 0});

    Rat c(Poly(f3.get(), {1, 0, 1}), Poly(f3.get(), {1, 1}));  // (z^2+1)/(z+1) over F_3
    CHECK(c.degree_bound() == std::pair<int, int>{2, 1});
    CHECK(Poly::gcd(c.num(), c.den()).degree() == 0);  // coprime
}

TEST_CASE("mat_det examples") {
    auto f2 = Field::make(2, 1);

    RatMatrix d(f2.get(), 2, 2);
    d.at(0, 0) = Rat::z(f2.get());
    d.at(1, 1) = Rat::z(f2.get());
    CHECK(mat_det(d).num() == Poly::monomial(f2.get(), 1, 2));

    // Example 2 independence of (z^3,0)^T and (z^5,z^5)^T
    RatMatrix e(f2.get(), 2, 2);
    e.at(0, 0) = Rat(Poly::monomial(f2.get(), 1, 3));
    e.at(0, 1) = Rat(Poly::monomial(f2.get(), 1, 5));
    e.at(1, 0) = Rat::zero(f2.get());
    e.at(1, 1) = Rat(Poly::monomial(f2.get(), 1, 5));
    Rat det = mat_det(e);
    CHECK(det.num() == Poly::monomial(f2.get(), 1, 8));
    CHECK_FALSE(det.is_zero());
}

TEST_CASE("Bareiss determinant equals cofactor expansion (randomized)") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = (trial % 2 == 0) ? Field::make(2, 1) : Field::make(3, 1);
        size_t n = 1 + size_t(rng() % 4);
        RatMatrix m(f.get(), n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                m.at(r, c) = Rat(rand_poly(f.get(), 3, rng));
        CHECK(mat_det(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant handles rational entries (denominators cleared per row)") {
    std::mt19937_64 rng(29);
    auto f3 = Field::make(3, 1);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 2 + size_t(rng() % 2);
        RatMatrix m(f3.get(), n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) {
                Poly den = rand_poly(f3.get(), 2, rng);
                if (den.is_zero()) den = Poly::constant(f3.get(), 1);
                m.at(r, c) = Rat(rand_poly(f3.get(), 2, rng), den);
            }
        CHECK(mat_det(m) == cofactor_det(m));
    }
}

TEST_CASE("mat_rank") {
    auto f2 = Field::make(2, 1);

    RatMatrix zero(f2.get(), 3, 2);
    CHECK(mat_rank(zero) == 0);

    // Example 2 vectors at v_2: (z^2,0)^T and (z^4,z^4)^T
    RatMatrix v2(f2.get(), 2, 2);
    v2.at(0, 0) = Rat(Poly::monomial(f2.get(), 1, 2));
    v2.at(0, 1) = Rat(Poly::monomial(f2.get(), 1, 4));
    v2.at(1, 1) = Rat(Poly::monomial(f2.get(), 1, 4));
    CHECK(mat_rank(v2) == 2);

    RatMatrix ones(f2.get(), 2, 2);
    for (size_t r = 0; r < 2; ++r)
        for (size_t c = 0; c < 2; ++c) ones.at(r, c) = Rat::z(f2.get());
    CHECK(mat_rank(ones) == 1);
}

TEST_CASE("rank is preserved at a verified nonvanishing point") {
    std::mt19937_64 rng(31);
    auto f3 = Field::make(3, 1);
    for (int trial = 0; trial < 50; ++trial) {
        size_t rows = 2 + size_t(rng() % 2), cols = 2 + size_t(rng() % 2);
        RatMatrix m(f3.get(), rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                m.at(r, c) = Rat(rand_poly(f3.get(), 2, rng));
        size_t rk = mat_rank(m);
        if (rk == 0) continue;

        // certificate: some rk x rk minor with nonzero determinant
        Rat minor_det(f3.get());
        std::vector<size_t> rsel, csel;
        bool found = false;
        for (size_t r0 = 0; r0 + rk <= rows && !found; ++r0)
            for (size_t c0 = 0; c0 + rk <= cols && !found; ++c0) {
                RatMatrix sub(f3.get(), rk, rk);
                for (size_t i = 0; i < rk; ++i)
                    for (size_t j = 0; j < rk; ++j) sub.at(i, j) = m.at(r0 + i, c0 + j);
                Rat d = mat_det(sub);
                if (!d.is_zero()) {
                    minor_det = d;
                    found = true;
                }
            }
        if (!found) continue;  // the witness minor need not be contiguous

        // evaluate in a big enough extension at a point where the minor
        // determinant and all denominators stay nonzero
        auto [ext, emb] = extension_containing(f3, 26);
        for (uint32_t z0 = 0; z0 < ext->size(); ++z0) {
            bool ok = true;
            try {
                if (minor_det.eval_embedded(emb, z0) == 0) ok = false;
            } catch (const PoleError&) {
                ok = false;
            }
            if (!ok) continue;
            RatMatrix ev(ext.get(), rows, cols);
            try {
                for (size_t r = 0; r < rows; ++r)
                    for (size_t c = 0; c < cols; ++c)
                        ev.at(r, c) = Rat::constant(ext.get(),
                                                    m.at(r, c).eval_embedded(emb, z0));
            } catch (const PoleError&) {
                continue;
            }
            CHECK(mat_rank(ev) == rk);
            break;
        }
    }
}

TEST_CASE("monomial-column factorization of the determinant") {
    // det of [z^{a_i} v_i] = det(V) * z^{sum a_i} for constant v_i
    std::mt19937_64 rng(41);
    auto f3 = Field::make(3, 1);
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = 2 + size_t(rng() % 2);
        RatMatrix m(f3.get(), n, n);
        RatMatrix v(f3.get(), n, n);
        int total = 0;
        for (size_t c = 0; c < n; ++c) {
            int a = int(rng() % 4);
            total += a;
            for (size_t r = 0; r < n; ++r) {
                uint32_t coeff = uint32_t(rng() % 3);
                v.at(r, c) = Rat::constant(f3.get(), coeff);
                m.at(r, c) = Rat(Poly::monomial(f3.get(), coeff, a));
            }
        }
        Rat lhs = mat_det(m);
        Rat rhs = mat_det(v) * Rat(Poly::monomial(f3.get(), 1, total));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("eval and poles") {
    auto f2 = Field::make(2, 1);
    auto id = identity_embedding(Field::make(2, 1));

    Rat sq(Poly(f2.get(), {0, 0, 1}));
    CHECK(sq.eval(1) == 1);

    Rat pole(Poly::constant(f2.get(), 1), Poly(f2.get(), {1, 1}));  // 1/(z+1)
    CHECK_THROWS_AS(pole.eval_embedded(id, 1), PoleError);
    CHECK(pole.eval_embedded(id, 0) == 1);
}
