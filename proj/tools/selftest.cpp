#include "selftest.hpp"

#include "descent/descent_map.hpp"
#include "descent/errors.hpp"

#include <functional>
#include <random>

namespace descent {

namespace {

using Outcome = std::pair<bool, std::string>;

void guarded(Report& rep, const std::string& name, const std::function<Outcome()>& body) {
    try {
        auto [ok, detail] = body();
        rep.add(name, ok, detail);
    } catch (const std::exception& e) {
        rep.add(name, false, std::string("error: ") + e.what());
    }
}

Outcome heisenberg(int p, unsigned long long seed) {
    Cyclo z = Cyclo::zeta(p, 1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-10, 10), den(1, 10);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> coeffs;
        for (int i = 0; i < p - 1; ++i) coeffs.push_back(Rational(coef(rng)) / Rational(den(rng)));
        Cyclo a(p, coeffs);
        if (a.is_zero()) a = Cyclo(p, Rational(1));
        auto [D, M] = translation_matrices(p, a);
        auto c = scalar_value(M * D * inverse(M) * inverse(D));
        if (!c || *c != z) return {false, "commutator for a = " + a.str()};
        auto mp = scalar_value(matrix_pow(M, p));
        if (!mp || *mp != a) return {false, "M_{a,p}^p for a = " + a.str()};
        if (det(M) != a || !det(D).is_one()) return {false, "determinants for a = " + a.str()};
    }
    return {true, "[M_{a,p}, D_p] = z I, M_{a,p}^p = a I, det M_{a,p} = a, det D_p = 1"};
}

Report selftest3(const Cyclo& lambda, int threads, unsigned long long seed, const PrecisionConfig& cfg) {
    const int p = 3;
    Report rep;
    Curve E = hesse_curve(lambda);
    Cyclo one(p, Rational(1)), z = Cyclo::zeta(p, 1);
    guarded(rep, "heisenberg", [&] { return heisenberg(p, seed); });
    guarded(rep, "corrected_S", [&] {
        bool printed = on_curve(E, {one, z, Cyclo(p)});
        bool fixed = on_curve(E, {one, -z, Cyclo(p)});
        return Outcome{!printed && fixed && torsion_point(E, 1, 0) == Point{one, -z, Cyclo(p)},
                         "(1 : z : 0) off the curve, (1 : -z : 0) = D_3 O on it"};
    });
    auto pts = point_search(E, 2, threads, cfg);
    guarded(rep, "translations", [&] {
        CMatrix D = diag_matrix(p), M = shift_matrix(p, one);
        for (auto& P : pts) {
            if (!same_point(hesse_add(lambda, P, torsion_point(E, 1, 0)), D.apply(P))) return Outcome{false, "S"};
            if (!same_point(hesse_add(lambda, P, torsion_point(E, 0, 1)), M.apply(P))) return Outcome{false, "T"};
        }
        return Outcome{true, std::to_string(pts.size()) + " points: P + S = D_3 P, P + T = M_{1,3} P"};
    });
    DescentFunctions F = f3_functions(lambda);
    guarded(rep, "homomorphism", [&] {
        size_t pairs = 0;
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i; j < pts.size(); ++j) {
                auto R = hesse_add(lambda, pts[i], pts[j]);
                auto x = eval_descent(E, F, pts[i]), y = eval_descent(E, F, pts[j]), s = eval_descent(E, F, R);
                for (int c = 0; c < 2; ++c)
                    if (!is_pth_power(x.values[c] * y.values[c] / s.values[c], cfg))
                        return Outcome{false, "fails at a pair of searched points"};
                ++pairs;
            }
        return Outcome{true, std::to_string(pairs) + " pairs"};
    });
    guarded(rep, "leading_coefficient_one", [&] {
        Cyclo lc = leading_coefficient(E, F.numerator_S, F.denominator, F.constant_S, 6);
        Cyclo lt = leading_coefficient(E, F.numerator_T, F.denominator, F.constant_T, 6);
        bool ok = lc.is_one() && lt.is_one();
        return Outcome{ok, "t^3 f_S -> " + lc.str() + ", t^3 f_T -> " + lt.str()};
    });
    guarded(rep, "trivial_torsor", [&] {
        auto alg = KummerAlgebra::make(one, cfg);
        CubicTorsor m = build_cubic(lambda, one, KummerElement(alg, one));
        Report r = verify_torsor(m);
        bool same_j = cubic_j_invariant(m.form, E.origin) == cubic_j_invariant(E.equations[0], E.origin);
        return Outcome{r.all_pass() && same_j, "verify and j-invariant against E"};
    });
    guarded(rep, "torsor_2_alpha_plus_3", [&] {
        Cyclo a(p, Rational(2));
        auto alg = KummerAlgebra::make(a, cfg);
        KummerElement beta(alg, {Cyclo(p, Rational(3)), one, Cyclo(p)});
        Report r = verify_torsor(build_cubic(lambda, a, beta));
        return Outcome{r.all_pass(), std::to_string(r.checks.size()) + " checks"};
    });
    guarded(rep, "norm_solve", [&] {
        auto alg = KummerAlgebra::make(Cyclo(p, Rational(2)), cfg);
        auto beta = solve_norm(alg, Cyclo(p, Rational(29)));
        KummerElement want(alg, {Cyclo(p, Rational(3)), one, Cyclo(p)});
        return Outcome{beta && *beta == want, "N(beta) = 29 in K[alpha]/(alpha^3 - 2)"};
    });
    return rep;
}

Report selftest5(const Cyclo& lambda, unsigned long long seed, const PrecisionConfig& cfg) {
    const int p = 5;
    Report rep;
    Curve E = quintic_curve(lambda);
    Cyclo one(p, Rational(1));
    guarded(rep, "heisenberg", [&] { return heisenberg(p, seed); });
    guarded(rep, "corrected_origin", [&] {
        bool printed = on_curve(E, {Cyclo(p), lambda, one, -one, -lambda});
        bool fixed = on_curve(E, E.origin);
        return Outcome{!printed && fixed, "(0 : l : 1 : -1 : -l) off the curve, (0 : l : -1 : 1 : -l) on it"};
    });
    guarded(rep, "torsion_on_curve", [&] {
        auto T = torsion_points(E);
        bool ok = true;
        for (auto& P : T) ok = ok && on_curve(E, P);
        return Outcome{ok, std::to_string(T.size()) + " torsion points"};
    });
    DescentFunctions F = f5_functions(lambda);
    guarded(rep, "hypertangent_order", [&] {
        BranchSeries B = local_series(E, 8);
        int o = vanishing_order(F.denominator, B);
        return Outcome{o == 5, "H_O vanishes to order " + std::to_string(o)};
    });
    guarded(rep, "leading_coefficient_fifth_power", [&] {
        Cyclo lc = leading_coefficient(E, F.numerator_S, F.denominator, F.constant_S, 8);
        Cyclo lt = leading_coefficient(E, F.numerator_T, F.denominator, F.constant_T, 8);
        bool ok = is_pth_power(lc, cfg).has_value() && is_pth_power(lt, cfg).has_value();
        return Outcome{ok, "t^5 f_S -> " + lc.str() + ", t^5 f_T -> " + lt.str()};
    });
    guarded(rep, "torsion_homomorphism", [&] {
        std::vector<DescentValue> val;
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) val.push_back(eval_descent(E, F, torsion_point(E, i, j)));
        for (int r = 0; r < p * p; ++r)
            for (int q = r; q < p * p; ++q) {
                auto& s = val[((r / p + q / p) % p) * p + (r % p + q % p) % p];
                for (int c = 0; c < 2; ++c)
                    if (!is_pth_power(val[r].values[c] * val[q].values[c] / s.values[c], cfg))
                        return Outcome{false, "fails on torsion"};
            }
        return Outcome{true, "delta(R + Q) = delta(R) delta(Q) on all torsion pairs"};
    });
    guarded(rep, "torsor_2_alpha_plus_2", [&] {
        Cyclo a(p, Rational(2));
        auto alg = KummerAlgebra::make(a, cfg);
        KummerElement beta(alg, {Cyclo(p, Rational(2)), one, Cyclo(p), Cyclo(p), Cyclo(p)});
        Report r = verify_torsor(build_quintic(lambda, a, beta));
        return Outcome{r.all_pass(), std::to_string(r.checks.size()) + " checks"};
    });
    return rep;
}

} // namespace

Report run_selftest(int p, const Cyclo& lambda, int threads, unsigned long long seed, const PrecisionConfig& cfg) {
    check_prime(p);
    return p == 3 ? selftest3(lambda, threads, seed, cfg) : selftest5(lambda, seed, cfg);
}

} // namespace descent
