#include "descent/descent_map.hpp"
#include "descent/errors.hpp"
#include "descent/torsor.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace descent;
using namespace testing_support;

namespace {

KummerElement elt(const AlgebraPtr& alg, std::vector<long> c) {
    std::vector<Cyclo> v;
    for (long x : c) v.emplace_back(alg->p(), Rational(x));
    return KummerElement(alg, v);
}

Form xyz_cubic(int p, const Cyclo& cubes, const Cyclo& xyz) {
    Form F(p, 3);
    F.add_term({3, 0, 0}, cubes);
    F.add_term({0, 3, 0}, cubes);
    F.add_term({0, 0, 3}, cubes);
    F.add_term({1, 1, 1}, xyz);
    return F;
}

// j of X^3 + Y^3 + Z^3 = 3k XYZ is 27 k^3 (k^3 + 8)^3 / (k^3 - 1)^3.
Cyclo classical_j(const Cyclo& mu) {
    Cyclo k = mu * Rational(-1, 3), k3 = k.pow(3);
    return k3 * Rational(27) * (k3 + Cyclo(3, 8L)).pow(3) / (k3 - Cyclo(3, 1L)).pow(3);
}

bool passes(const Report& r, const std::string& name) {
    const Check* c = r.find(name);
    return c && c->pass;
}

} // namespace

TEST_CASE("trivial class cubic") {
    for (long lv : {1L, 2L, 5L, -1L}) {
        Cyclo l(3, lv);
        auto alg = KummerAlgebra::make(Cyclo(3, 1L));
        CubicTorsor m = build_cubic(l, Cyclo(3, 1L), KummerElement(alg, Cyclo(3, 1L)));
        CHECK(m.form == xyz_cubic(3, l + Cyclo(3, 3L), (Cyclo(3, 6L) - l) * Rational(3)));
        CHECK(verify_torsor(m).all_pass());
        Curve E = hesse_curve(l);
        Cyclo mu = (Cyclo(3, 6L) - l) * Rational(3) / (l + Cyclo(3, 3L));
        CHECK(classical_j(mu) == classical_j(l));
        CHECK(cubic_j_invariant(m.form, E.origin) == classical_j(l));
        CHECK(cubic_j_invariant(E.equations[0], E.origin) == classical_j(l));
    }
}

TEST_CASE("j-invariant routine against the classical formula") {
    std::mt19937_64 rng(51);
    Cyclo one(3, 1L), zero(3);
    for (int trial = 0; trial < 8; ++trial) {
        Cyclo mu = random_cyclo(rng, 3, 12, 5);
        if ((mu.pow(3) + Cyclo(3, 27L)).is_zero()) continue;
        Form F = xyz_cubic(3, one, mu);
        CHECK(hesse_j_invariant(mu) == classical_j(mu));
        CHECK(cubic_j_invariant(F, {one, -one, zero}) == classical_j(mu));
        // any flex gives the same value
        CHECK(cubic_j_invariant(F, {zero, one, -Cyclo::zeta(3)}) == classical_j(mu));
        // scaling the form does not change it
        CHECK(cubic_j_invariant(F * Cyclo(3, 7L), {one, -one, zero}) == classical_j(mu));
    }
}

TEST_CASE("cube case b = 10") {
    auto alg = KummerAlgebra::make(Cyclo(3, 1L));
    CubicTorsor m = build_cubic(Cyclo(3, 1L), Cyclo(3, 1L), elt(alg, {4, 3, 3}));
    CHECK(m.form.coeff({3, 0, 0}) == Cyclo(3, Rational(121, 10)));
    CHECK(m.form.coeff({0, 0, 3}) == Cyclo(3, Rational(121, 10)));
    CHECK(m.form.apply_matrix(m.M_S) == m.form);
    CHECK(verify_torsor(m).all_pass());
}

TEST_CASE("cubic torsor examples") {
    auto alg = KummerAlgebra::make(Cyclo(3, 2L));
    CubicTorsor m = build_cubic(Cyclo(3, 2L), Cyclo(3, 2L), elt(alg, {3, 1, 0}));
    Report r = verify_torsor(m);
    for (auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
    CHECK(jacobian_lambda(m) == Cyclo(3, 2L));

    CubicTorsor bad = m;
    bad.form.add_term({2, 1, 0}, Cyclo(3, 1L));
    Report rb = verify_torsor(bad);
    CHECK_FALSE(rb.all_pass());
    CHECK_FALSE(passes(rb, "invariance_M_S"));

    CHECK_THROWS_AS(build_cubic(Cyclo(3, -3L), Cyclo(3, 2L), elt(alg, {3, 1, 0})), SingularParameter);
    auto neg = KummerAlgebra::make(Cyclo(3, -1L));
    CHECK_THROWS_AS(build_cubic(Cyclo(3, 2L), Cyclo(3, -1L), elt(neg, {1, 1, 0})), MathError);
}

TEST_CASE("cubic torsor properties") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 6; ++trial) {
        Cyclo l = random_cyclo(rng, 3, 5, 2), a = random_nonzero(rng, 3, 5, 2);
        if ((l.pow(3) + Cyclo(3, 27L)).is_zero()) continue;
        auto alg = KummerAlgebra::make(a);
        std::vector<Cyclo> c;
        for (int i = 0; i < 3; ++i) c.push_back(random_cyclo(rng, 3, 5, 2));
        KummerElement beta(alg, c);
        if (beta.norm().is_zero()) continue;
        CubicTorsor m = build_cubic(l, a, beta);
        Cyclo b = beta.norm();
        CHECK(m.form.apply_matrix(m.M_S) == m.form * a);
        CHECK(m.form.apply_matrix(m.M_T) == m.form * b);
        CHECK(det(m.M_T) == b);

        auto v = eigenvectors(alg);
        KummerElement al = KummerElement::alpha(alg), zero(alg);
        for (int i = 0; i < 3; ++i) {
            auto w = m.M_S.apply(v[i]);
            for (int k = 0; k < 3; ++k) CHECK(w[k] == v[i][k] * al * Cyclo::zeta(3, i));
            for (int k = 0; k < 3; ++k) CHECK(v[i][k].sigma(1) == v[(i + 1) % 3][k]);
        }
        KummerElement u = beta / beta.sigma(2);
        CubicProfile pr = cubic_profile(m);
        for (int i = 0; i < 3; ++i) {
            CHECK(pr.F[i] == u.sigma(i) * pr.scale);
            CHECK(m.form.apply_matrix(m.M_T).eval(v[i], zero) == beta.sigma(i).pow(3) * pr.F[(i + 1) % 3]);
        }
        CHECK(pr.T == KummerElement(alg, l * pr.scale));
        CHECK(jacobian_lambda(m) == l);
    }
}

TEST_CASE("cubic coefficient matrices") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 5; ++trial) {
        auto alg = KummerAlgebra::make(random_nonzero(rng, 3, 9, 4));
        KMatrix prod = cubic_coefficient_matrix(alg) * cubic_coefficient_inverse(alg);
        Cyclo s = alg->a() * alg->a() * Rational(27);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) CHECK(prod(i, j) == KummerElement(alg, i == j ? s : Cyclo(3)));
        auto dims = cubic_eigenspace_dims(alg->a());
        std::sort(dims.begin(), dims.end());
        CHECK(dims == std::vector<size_t>{3, 3, 4});
    }
}

TEST_CASE("cubic nonsingularity") {
    Cyclo one(3, 1L);
    CHECK(cubic_nonsingular(xyz_cubic(3, one, Cyclo(3, 1L))) == std::optional<bool>(true));
    CHECK(cubic_nonsingular(xyz_cubic(3, one, Cyclo(3, -3L))) == std::optional<bool>(false));
    Form cusp(3, 3);  // Y^2 Z - X^3
    cusp.add_term({0, 2, 1}, one);
    cusp.add_term({3, 0, 0}, -one);
    CHECK(cubic_nonsingular(cusp) != std::optional<bool>(true));
}

TEST_CASE("quintic torsor examples") {
    auto alg = KummerAlgebra::make(Cyclo(5, 2L));
    QuinticTorsor m = build_quintic(Cyclo(5, 1L), Cyclo(5, 2L), elt(alg, {2, 1, 0, 0, 0}));
    Report r = verify_torsor(m);
    for (auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
    CHECK_FALSE(m.split);
    CHECK(r.find("hypothesis") == nullptr);

    QuinticTorsor bad = m;
    bad.quadrics[0].add_term({1, 1, 0, 0, 0}, Cyclo(5, 1L));
    CHECK_FALSE(verify_torsor(bad).all_pass());

    for (long lv : {1L, 2L, -3L}) {
        Cyclo l(5, lv);
        QuinticTorsor t = build_quintic(l, Cyclo(5, 2L), one_like(KummerElement::alpha(alg)));
        Monomial sq(5, 0);
        sq[0] = 2;
        CHECK(t.Q.coeff(sq) == (Cyclo(5, 1L) + l - l.inv()) * Rational(5));
        for (int i = 1; i < 5; ++i) {
            Monomial m2(5, 0);
            m2[i] = 2;
            CHECK(t.Q.coeff(m2).is_zero());
        }
    }
}

TEST_CASE("quintic torsor properties") {
    std::mt19937_64 rng(54);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 3; ++trial) {
        Cyclo l(5, Rational(d(rng) + 4, 1 + trial));
        Cyclo a(5, Rational(2 + trial));
        auto alg = KummerAlgebra::make(a);
        std::vector<Cyclo> c;
        for (int i = 0; i < 5; ++i) c.push_back(Cyclo(5, d(rng)));
        KummerElement beta(alg, c);
        if (beta.norm().is_zero()) continue;
        QuinticTorsor m = build_quintic(l, a, beta);
        QuinticProfile pr = quintic_profile(m);
        for (int i = 1; i < 5; ++i) CHECK(pr.Q[i] == pr.Q[0]);
        CHECK(pr.B[1][4] / pr.Q[0] == beta.sigma(4) / beta * l);
        KummerElement u2 = beta.sigma(3) * beta.sigma(4) / (beta * beta.sigma(1));
        KummerElement minus_ratio = -(pr.Q[0] / pr.B[2][3]) * u2;
        CHECK(minus_ratio == KummerElement(alg, l));
        CHECK(jacobian_lambda(m) == l);
        // A is the fifth power of -l, i.e. minus the fifth power of the ratio above
        CHECK(quintic_A(m) == (-l).pow(5));
        CHECK(quintic_A(m) == -l.pow(5));
        CHECK(verify_torsor(m).all_pass());
    }
}

TEST_CASE("E_A model") {
    for (long lv : {1L, 2L, 3L, -2L}) CHECK(quintic_EA_matches(Cyclo(5, lv)));
}

TEST_CASE("quintic split case is flagged") {
    auto alg = KummerAlgebra::make(Cyclo(5, 1L));
    QuinticTorsor m = build_quintic(Cyclo(5, 2L), Cyclo(5, 1L), elt(alg, {2, 1, 0, 0, 0}));
    CHECK(m.split);
    Report r = verify_torsor(m);
    REQUIRE(r.find("hypothesis") != nullptr);
}

TEST_CASE("torsor point search") {
    auto alg = KummerAlgebra::make(Cyclo(3, 1L));
    CubicTorsor m = build_cubic(Cyclo(3, 2L), Cyclo(3, 1L), KummerElement(alg, Cyclo(3, 1L)));
    auto pts = torsor_point_search({m.form}, 2);
    REQUIRE_FALSE(pts.empty());
    for (auto& P : pts) CHECK(m.form(P).is_zero());
    auto first = torsor_point_search({m.form}, 2, 1);
    REQUIRE(first.size() == 1);
    CHECK(first[0] == pts[0]);
}

TEST_CASE("split cubic: closed form and searched beta") {
    std::mt19937_64 rng(55);
    auto alg = KummerAlgebra::make(Cyclo(3, 8L));
    Cyclo l(3, 2L);
    for (int trial = 0; trial < 3; ++trial) {
        Cyclo b(3, Rational(std::uniform_int_distribution<long>(2, 9)(rng)));
        auto closed = split_cube_solution(alg, b);
        NormSearchOptions opt;
        opt.use_closed_form = false;
        opt.height_bound = 4;
        auto searched = solve_norm(alg, b, opt);
        REQUIRE(closed.has_value());
        if (!searched) continue;
        CubicTorsor m1 = build_cubic(l, alg->a(), *closed), m2 = build_cubic(l, alg->a(), *searched);
        CHECK(verify_torsor(m1).all_pass());
        CHECK(verify_torsor(m2).all_pass());
        CHECK(jacobian_lambda(m1) == l);
        CHECK(jacobian_lambda(m2) == l);
    }
}
