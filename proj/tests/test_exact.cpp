#include "descent/bigfloat.hpp"
#include "descent/errors.hpp"
#include "descent/roots.hpp"
#include "descent/upoly.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace descent;
using namespace testing_support;

namespace {

Cyclo cy(int p, std::vector<long> c) {
    std::vector<Rational> r;
    for (long v : c) r.push_back(Rational(v));
    return Cyclo(p, r);
}

bool close(std::complex<double> a, std::complex<double> b, double scale) {
    return std::abs(a - b) <= 1e-9 * (1 + scale);
}

} // namespace

TEST_CASE("cyclotomic arithmetic examples") {
    Cyclo z = Cyclo::zeta(3);
    CHECK(z * z * z == Cyclo(3, 1L));
    CHECK(z * Cyclo::zeta(3, 2) == Cyclo(3, 1L));
    CHECK(Cyclo::zeta(3, 2) == cy(3, {-1, -1}));
    CHECK(Cyclo(3, Rational(1, 2)) + z + (Cyclo(3, Rational(1, 2)) - z) == Cyclo(3, 1L));

    Cyclo d = Cyclo::zeta(5, 1) - Cyclo::zeta(5, 4);
    CHECK(d * d.inv() == Cyclo(5, 1L));
    CHECK(mul_naive(d, d.inv()) == Cyclo(5, 1L));

    CHECK(galois_auto(2, z) == cy(3, {-1, -1}));
    CHECK(galois_auto(2, Cyclo(3, 5L)) == Cyclo(3, 5L));
    CHECK(galois_auto(2, galois_auto(3, Cyclo::zeta(5))) == Cyclo::zeta(5));
    CHECK_THROWS_AS(Cyclo(3).inv(), DivisionByZero);
}

TEST_CASE("height") {
    CHECK(element_height(Cyclo(3)) == 0);
    CHECK(element_height(Cyclo(3, std::vector<Rational>{Rational(1, 2), Rational(3)})) == 6);
    CHECK(element_height(Cyclo::zeta(3, 2)) == 1);
}

TEST_CASE("field operations agree with independent oracles") {
    std::mt19937_64 rng(11);
    for (int p : {3, 5}) {
        for (int trial = 0; trial < 60; ++trial) {
            Cyclo x = random_cyclo(rng, p, 20, 6), y = random_nonzero(rng, p, 20, 6);
            CHECK(x * y == mul_naive(x, y));
            CHECK(x * y == y * x);
            CHECK((x + y) * y == x * y + y * y);
            CHECK((x / y) * y == x);
            for (int j = 1; j < p; ++j) {
                CHECK(close(x.embed(j), embed_naive(x, j), std::abs(embed_naive(x, j))));
                CHECK((x * y).galois(j) == x.galois(j) * y.galois(j));
                CHECK((x + y).galois(j) == x.galois(j) + y.galois(j));
            }
            CHECK(x.norm() == norm_naive(x));
            std::complex<double> trn = 0;
            for (int j = 1; j < p; ++j) trn += embed_naive(x, j);
            CHECK(std::abs(x.trace().get_d() - trn.real()) < 1e-9 * (1 + std::abs(trn)));
            CHECK(x.pow(3) == x * x * x);
            CHECK(y.pow(-2) * y * y == Cyclo(p, 1L));
        }
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0", "x"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc", "x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2", "x"), ParseError);
    try {
        parse_rational("q", "model.lambda");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.location == "model.lambda");
    }
}

TEST_CASE("p-th power examples") {
    CHECK(is_pth_power(Cyclo(3, 8L)) == Cyclo(3, 2L));
    CHECK_FALSE(is_pth_power(Cyclo::zeta(3)).has_value());
    CHECK(is_pth_power(Cyclo(3, 35L).pow(3)).has_value());
    CHECK(is_pth_power(Cyclo(3, 35L).pow(3))->pow(3) == Cyclo(3, 35L).pow(3));
}

TEST_CASE("roots of unity and p-th powers") {
    // In Q(z_p) the p-th powers among roots of unity are exactly +-1:
    // z^k = w^p with w = +-z^m means z^k = +-z^{pm} = +-1.
    for (int p : {3, 5})
        for (int k = 1; k < p; ++k) {
            CHECK_FALSE(is_pth_power(Cyclo::zeta(p, k)).has_value());
            CHECK_FALSE(is_pth_power(-Cyclo::zeta(p, k)).has_value());
        }
    auto m = is_pth_power(Cyclo(5, -1L));
    REQUIRE(m.has_value());
    CHECK(m->pow(5) == Cyclo(5, -1L));
}

TEST_CASE("p-th power detection against a norm oracle") {
    std::mt19937_64 rng(12);
    for (int p : {3, 5}) {
        for (int trial = 0; trial < 25; ++trial) {
            Cyclo r = random_nonzero(rng, p, 40, 5);
            Cyclo x = r.pow(p);
            auto s = is_pth_power(x);
            REQUIRE(s.has_value());
            CHECK(s->pow(p) == x);
            // 2 r^p has norm 2^{p-1} N(r)^p, whose 2-adic valuation is not
            // divisible by p, so it is not a p-th power.
            Cyclo y = x * Rational(2);
            CHECK_FALSE(rational_is_pth_power(y.norm(), p));
            CHECK_FALSE(is_pth_power(y).has_value());
        }
    }
}

TEST_CASE("p-th powers with heavy cancellation in one embedding") {
    // r = (50 + 20z + 15z^2 + 50z^3)^5: coefficients near 1e9, first
    // embedding near 1e3.  Root found by factoring X^5 - r independently.
    Cyclo root = cy(5, {50, 20, 15, 50});
    Cyclo r = cy(5, {-1301103125, -267281250, -638937500, -1071406250});
    REQUIRE(root.pow(5) == r);
    auto s = is_pth_power(r);
    REQUIRE(s.has_value());
    CHECK(s->pow(5) == r);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        // large balanced coefficients make small embeddings by cancellation
        Cyclo big = random_nonzero(rng, 5, 300, 1);
        Cyclo unit = (Cyclo(5, 1L) + Cyclo::zeta(5)).pow(trial % 7 + 1);  // a unit
        Cyclo w = big * unit;
        auto t = is_pth_power(w.pow(5));
        REQUIRE(t.has_value());
        CHECK(t->pow(5) == w.pow(5));
    }
}

TEST_CASE("k_roots finds exactly the roots in K") {
    std::mt19937_64 rng(14);
    for (int p : {3, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            Cyclo r1 = random_cyclo(rng, p, 9, 4), r2 = random_cyclo(rng, p, 9, 4);
            if (r1 == r2) continue;
            // X^2 - 2 has no root: the quadratic subfield of K is Q(sqrt(-3)) or Q(sqrt(5)).
            UPoly f = UPoly(p, {-r1, Cyclo(p, 1L)}) * UPoly(p, {-r2, Cyclo(p, 1L)}) *
                      UPoly(p, {Cyclo(p, -2L), Cyclo(p), Cyclo(p, 1L)});
            auto roots = k_roots(f.coeffs());
            std::vector<Cyclo> want = {r1, r2};
            std::sort(want.begin(), want.end());
            CHECK(roots == want);
        }
    }
    CHECK(k_roots({Cyclo(3, -2L), Cyclo(3), Cyclo(3), Cyclo(3, 1L)}).empty());
    CHECK(k_roots({Cyclo(3), Cyclo(3, 1L)}) == std::vector<Cyclo>{Cyclo(3)});
}

TEST_CASE("precision ceiling from the environment") {
    setenv("DESCENT_KIT_MAX_PRECISION", "256", 1);
    CHECK(PrecisionConfig::from_env().max_bits == 256);
    unsetenv("DESCENT_KIT_MAX_PRECISION");
    CHECK(PrecisionConfig::from_env().max_bits == PrecisionConfig{}.max_bits);
}

TEST_CASE("big floats") {
    BigFloat a(Rational(1, 3), 256);
    BigFloat b = a * BigFloat(3.0, 256);
    CHECK(b.round() == 1);
    BigComplex w = root_of_unity(1, 3, 200);
    BigComplex c = w * w * w;
    CHECK(std::abs(c.re.to_double() - 1) < 1e-50);
    CHECK(std::abs(c.im.to_double()) < 1e-50);
}
