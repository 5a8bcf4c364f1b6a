#include "descent/errors.hpp"
#include "descent/geometry.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <set>

using namespace descent;
using namespace testing_support;

namespace {

Cyclo det3(const Point& a, const Point& b, const Point& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Closure of {O} under the given matrices, computed by breadth-first search.
std::vector<Point> orbit(const Point& O, const std::vector<CMatrix>& gens) {
    std::vector<Point> out = {normalize(O)};
    for (size_t i = 0; i < out.size(); ++i)
        for (auto& g : gens) {
            Point q = normalize(g.apply(out[i]));
            bool seen = false;
            for (auto& r : out) seen = seen || r == q;
            if (!seen) out.push_back(q);
        }
    return out;
}

bool contains(const std::vector<Point>& pts, const Point& P) {
    for (auto& q : pts)
        if (same_point(q, P)) return true;
    return false;
}

} // namespace

TEST_CASE("translation matrices") {
    for (int p : {3, 5}) {
        Cyclo a(p, Rational(5, 3));
        auto [D, M] = translation_matrices(p, a);
        CHECK(det(D) == Cyclo(p, 1L));
        CHECK(det(M) == a);
        CHECK(scalar_value(matrix_pow(M, p)) == a);
        CHECK(scalar_value(matrix_pow(D, p)) == Cyclo(p, 1L));
        CHECK(scalar_value(M * D * inverse(M) * inverse(D)) == Cyclo::zeta(p, 1));
        CHECK(scalar_value(D * M * inverse(D) * inverse(M)) == Cyclo::zeta(p, -1));
    }
    Cyclo one(3, 1L), zero(3), z = Cyclo::zeta(3);
    Point O = {one, -one, zero};
    CHECK(same_point(shift_matrix(3, one).apply(O), {one, zero, -one}));
    CHECK(shift_matrix(3, one).apply(O) == Point{-one, zero, one});
    CHECK(diag_matrix(3).apply(O) == Point{one, -z, zero});
}

TEST_CASE("points on the Hesse cubic") {
    Cyclo one(3, 1L), zero(3), z = Cyclo::zeta(3);
    for (long l : {0L, 1L, 2L, -5L}) {
        Curve E = hesse_curve(Cyclo(3, l));
        CHECK(on_curve(E, {one, -one, zero}));
        CHECK(on_curve(E, {one, -z, zero}));
        CHECK_FALSE(on_curve(E, {one, z, zero}));  // 1 + z^3 = 2
    }
    CHECK_THROWS_AS(hesse_curve(Cyclo(3, -3L)), SingularParameter);
    CHECK_THROWS_AS(hesse_curve(Cyclo(3, -3L) * z), SingularParameter);
}

TEST_CASE("quintic origin holds identically in lambda") {
    // Each q_i(0, l, -1, 1, -l) is a polynomial of degree <= 4 in l, so
    // vanishing at eight values of l makes it vanish identically.
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 8; ++trial) {
        Cyclo l = random_nonzero(rng, 5, 9, 4);
        std::vector<Form> qs = quintic_forms(l);
        Cyclo one(5, 1L), zero(5);
        Point fixed = {zero, l, -one, one, -l};
        Point moved = {one, l, -one, one, -l};
        bool all = true, moved_all = true;
        for (auto& q : qs) {
            all = all && q(fixed).is_zero();
            moved_all = moved_all && q(moved).is_zero();
        }
        CHECK(all);
        CHECK_FALSE(moved_all);
        ++checked;
    }
    CHECK(checked == 8);
}

TEST_CASE("quintic singular parameters") {
    CHECK_THROWS_AS(quintic_curve(Cyclo(5)), SingularParameter);
    // -phi = z^2 + z^3 satisfies l^10 + 11 l^5 - 1 = 0
    Cyclo mphi = Cyclo::zeta(5, 2) + Cyclo::zeta(5, 3);
    Cyclo l5 = mphi.pow(5);
    CHECK((l5 * l5 + l5 * Rational(11) - Cyclo(5, 1L)).is_zero());
    CHECK_THROWS_AS(quintic_curve(mphi), SingularParameter);
    CHECK_NOTHROW(quintic_curve(-mphi));
}

TEST_CASE("Hesse group law") {
    Cyclo l(3, 1L);
    Curve E = hesse_curve(l);
    Cyclo one(3, 1L), zero(3), z = Cyclo::zeta(3);
    Point O = E.origin, S = torsion_point(E, 1, 0), T = torsion_point(E, 0, 1);
    CHECK(same_point(S, {one, -z, zero}));
    CHECK(same_point(hesse_add(l, S, T), {one, zero, one + z}));  // -z^2
    CHECK(same_point(hesse_mul(l, 3, S), O));
    CHECK(same_point(hesse_add(l, S, T), normalize(shift_matrix(3, one).apply(diag_matrix(3).apply(O)))));

    auto pts = point_search(E, 3);
    REQUIRE(pts.size() >= 10);
    CMatrix D = diag_matrix(3), M = shift_matrix(3, one);
    for (size_t i = 0; i < pts.size(); ++i) {
        const Point& P = pts[i];
        CHECK(same_point(hesse_add(l, P, O), P));
        CHECK(same_point(hesse_add(l, P, hesse_neg(l, P)), O));
        CHECK(same_point(hesse_add(l, P, S), D.apply(P)));
        CHECK(same_point(hesse_add(l, P, T), M.apply(P)));
        for (size_t j = 0; j < pts.size(); j += 3) {
            const Point& Q = pts[j];
            Point R = hesse_third(l, P, Q);
            CHECK(on_curve(E, R));
            if (!same_point(P, Q)) CHECK(det3(P, Q, R).is_zero());
            Point sum = hesse_add(l, P, Q);
            CHECK(on_curve(E, sum));
            CHECK(same_point(sum, hesse_add(l, Q, P)));
            // O is a flex, so P + Q = -R is the third point on the line OR.
            CHECK(same_point(sum, hesse_third(l, O, R)));
            const Point& W = pts[(i + j + 1) % pts.size()];
            CHECK(same_point(hesse_add(l, sum, W), hesse_add(l, P, hesse_add(l, Q, W))));
        }
    }
}

TEST_CASE("point search") {
    Cyclo one(3, 1L);
    for (long lv : {1L, 2L, 7L}) {
        Curve E = hesse_curve(Cyclo(3, lv));
        auto flexes = orbit(E.origin, {diag_matrix(3), shift_matrix(3, one)});
        CHECK(flexes.size() == 9);
        auto pts = point_search(E, 1);
        for (auto& f : flexes) CHECK(contains(pts, f));
        for (auto& P : pts) CHECK(on_curve(E, P));
    }
    CHECK(contains(point_search(hesse_curve(Cyclo(3, 1L)), 3), {one, -one, Cyclo(3)}));
    // counts from an independent floating-point search over the same boxes
    CHECK(point_search(hesse_curve(Cyclo(3, 1L)), 4).size() == 18);
    CHECK(point_search(hesse_curve(Cyclo(3, 2L)), 4).size() == 9);

    auto a = point_search(hesse_curve(Cyclo(3, 1L)), 3, 1);
    auto b = point_search(hesse_curve(Cyclo(3, 1L)), 3, 3);
    CHECK(a == b);

    Curve Q = quintic_curve(Cyclo(5, 1L));
    auto torsion = orbit(Q.origin, {diag_matrix(5), shift_matrix(5, Cyclo(5, 1L))});
    CHECK(torsion.size() == 25);
    auto qp = point_search(Q, 1);
    for (auto& t : torsion) CHECK(contains(qp, t));
    for (auto& P : qp) CHECK(on_curve(Q, P));
    auto tp = torsion_points(Q);
    CHECK(tp.size() == 25);
    for (auto& t : tp) CHECK(contains(torsion, t));
}

TEST_CASE("elements up to a height") {
    auto e = elements_up_to(3, 1, true);
    std::set<Cyclo> s(e.begin(), e.end());
    CHECK(s.size() == e.size());
    CHECK(e.size() == 9);  // coefficient pairs in {-1, 0, 1}^2
    for (auto& x : elements_up_to(3, 2, false)) CHECK(element_height(x) <= 2);
}

TEST_CASE("Hesse local series") {
    for (long lv : {1L, 2L, 5L}) {
        Cyclo l(3, lv);
        Curve E = hesse_curve(l);
        BranchSeries B = local_series(E, 8);
        CHECK(B.chart == 0);
        CHECK(B.parameter == 2);
        // 3(1 + Y) = lambda Z + ...
        Series onePlusY = B.coords[1] + one_like(B.coords[1]);
        CHECK(onePlusY[0].is_zero());
        CHECK(onePlusY[1] == l * Rational(1, 3));
        // 3X + 3Y - lambda Z = a Z^3 + ... with a = -(1 + (lambda/3)^3)
        Form L = Form::linear({Cyclo(3, 3L), Cyclo(3, 3L), -l});
        Series s = eval_on_branch(L, B);
        CHECK(s.valuation() == 3);
        CHECK(s[3] == -(Cyclo(3, 1L) + (l * Rational(1, 3)).pow(3)));
        CHECK(eval_on_branch(E.equations[0], B).valuation() == -1);
        // branch at S through the matrix D
        BranchSeries BS = transform_branch(diag_matrix(3), B);
        CHECK(eval_on_branch(E.equations[0], BS).valuation() == -1);
    }
}

TEST_CASE("quintic local series") {
    Cyclo l(5, 1L);
    Curve E = quintic_curve(l);
    BranchSeries B = local_series(E, 8);
    for (auto& q : E.equations) CHECK(eval_on_branch(q, B).valuation() == -1);
    for (size_t i = 0; i < 5; ++i) CHECK(B.coords[i][0] == E.origin[i]);
}

TEST_CASE("forms under matrices") {
    Cyclo l(3, 4L);
    Form F = hesse_form(l);
    CHECK(F.apply_matrix(diag_matrix(3)) == F);
    CHECK(F.apply_matrix(identity_matrix(3, 3)) == F);
    CHECK(F.apply_matrix(shift_matrix(3, Cyclo(3, 1L))) == F);
    Form L = Form::linear({Cyclo(3, 3L), Cyclo(3, 3L), -l});
    Form LS = L.apply_matrix(inverse(diag_matrix(3)));
    Cyclo one(3, 1L), z = Cyclo::zeta(3);
    CHECK(LS({one, -z, Cyclo(3)}).is_zero());
}
