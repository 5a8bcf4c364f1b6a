#include "descent/descent_map.hpp"
#include "descent/errors.hpp"

namespace descent {

namespace {

Integer content(const Cyclo& x) {
    Integer g = 0;
    for (auto& c : x.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    return g;
}

Cyclo poly_in(const Cyclo& l, std::initializer_list<long> coeffs_high_to_low) {
    Cyclo r(l.p());
    for (long c : coeffs_high_to_low) r = r * l + Cyclo(l.p(), Rational(c));
    return r;
}

} // namespace

PthPowerClass make_class(const Cyclo& x) {
    if (x.is_zero()) throw MathError("zero has no class modulo p-th powers");
    const int p = x.p();
    Integer d = denominator(x);
    Integer dp;
    mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), p);
    Cyclo y = x * Rational(dp);
    Integer g = content(y);
    Integer strip = 1;
    for (unsigned long q = 2; q < 1000 && g > 1; ++q) {
        Integer qp;
        mpz_ui_pow_ui(qp.get_mpz_t(), q, p);
        while (mpz_divisible_p(g.get_mpz_t(), qp.get_mpz_t())) {
            g /= qp;
            strip *= q;
        }
    }
    Integer sp;
    mpz_pow_ui(sp.get_mpz_t(), strip.get_mpz_t(), p);
    y *= Rational(Integer(1), sp);
    Cyclo pi_p = (Cyclo(p, Rational(1)) - Cyclo::zeta(p, 1)).pow(p);
    for (;;) {
        Cyclo q = y / pi_p;
        if (denominator(q) != 1) break;
        y = q;
    }
    for (auto& c : y.coeffs()) {
        if (c == 0) continue;
        if (c < 0) y = -y;
        break;
    }
    return {y};
}

bool class_eq(const PthPowerClass& x, const PthPowerClass& y, const PrecisionConfig& cfg) {
    if (x.p() != y.p()) throw UsageError("classes over different fields");
    return is_pth_power(x.rep / y.rep, cfg).has_value();
}

bool is_trivial(const PthPowerClass& x, const PrecisionConfig& cfg) {
    return is_pth_power(x.rep, cfg).has_value();
}

DescentFunctions f3_functions(const Cyclo& lambda, Constants which) {
    const int p = 3;
    Curve E = hesse_curve(lambda);
    Cyclo three(p, Rational(3)), z = Cyclo::zeta(p, 1), z2 = Cyclo::zeta(p, 2);
    DescentFunctions F;
    F.p = p;
    F.lambda = lambda;
    F.numerator_S = Form::linear({three * z2, three * z, -lambda});
    F.numerator_T = Form::linear({three, -lambda, three});
    F.denominator = Form::linear({three, three, -lambda});
    F.constant_S = lambda.pow(3) + Cyclo(p, Rational(27));
    F.constant_T = lambda * lambda - lambda * Rational(3) + Cyclo(p, Rational(9));
    if (which == Constants::corrected) {
        F.constant_S = F.constant_S / ((z2 - z) * Rational(3)).pow(3);
        F.constant_T = F.constant_T / Cyclo(p, Rational(-27));
    }
    if (F.constant_T.is_zero()) throw SingularParameter("lambda^2 - 3 lambda + 9 = 0");
    return F;
}

Hypertangents quintic_hypertangents(const Cyclo& l) {
    const int p = 5;
    Hypertangents h;
    Cyclo l5 = l.pow(5);
    Cyclo one(p, Rational(1));
    h.alpha = l5 * l5 - l5 * Rational(14) - one;
    h.beta = -(l * l) * Rational(5) * (one + l5 * Rational(2));
    h.gamma = l.pow(3) * Rational(5) * (l5 - Cyclo(p, Rational(2)));
    auto z = [&](long k) { return Cyclo::zeta(p, k); };
    h.H_O = Form::linear({h.alpha, h.beta, h.gamma, h.gamma, h.beta});
    h.H_S = Form::linear({h.alpha, h.beta * z(4), h.gamma * z(3), h.gamma * z(2), h.beta * z(1)});
    h.H_T = Form::linear({h.beta, h.gamma, h.gamma, h.beta, h.alpha});
    return h;
}

DescentFunctions f5_functions(const Cyclo& l, Constants which) {
    const int p = 5;
    Curve E = quintic_curve(l);
    Hypertangents h = quintic_hypertangents(l);
    DescentFunctions F;
    F.p = p;
    F.lambda = l;
    F.numerator_S = h.H_S;
    F.numerator_T = h.H_T;
    F.denominator = h.H_O;
    if (which == Constants::corrected) {
        Cyclo l5 = l.pow(5);
        Cyclo nu = l5 * l5 + l5 * Rational(11) - Cyclo(p, Rational(1));
        Cyclo top = l.pow(3) * nu.pow(3);
        Cyclo hs = h.H_S(E.origin), ht = h.H_T(E.origin);
        if (hs.is_zero() || ht.is_zero()) throw SingularParameter("a hypertangent plane passes through O");
        F.constant_S = top / hs;
        F.constant_T = top / ht;
    } else {
        Cyclo g = poly_in(l, {1, 1, -1});
        Cyclo f2 = poly_in(l, {1, -3, 4, -2, 1});
        Cyclo f3 = poly_in(l, {1, 2, 4, 3, 1});
        Cyclo z = Cyclo::zeta(p, 1), z4 = Cyclo::zeta(p, 4);
        Cyclo den = l * Rational(5) * (z - z4) * (l.pow(5) - Cyclo(p, Rational(2)));
        if (den.is_zero() || g.is_zero()) throw SingularParameter("a printed constant has a vanishing denominator");
        F.constant_S = (g * f2 * f3).pow(2) / den;
        F.constant_T = l * l * f2 * f2 * f3 / g;
    }
    return F;
}

DescentFunctions descent_functions(const Curve& E) {
    return E.p == 3 ? f3_functions(E.lambda) : f5_functions(E.lambda);
}

std::optional<Cyclo> eval_function(const Form& num, const Form& den, const Cyclo& constant, const Point& P) {
    Cyclo n = num(P), d = den(P);
    if (n.is_zero() || d.is_zero()) return std::nullopt;
    return constant * n / d;
}

DescentValue eval_descent(const Curve& E, const DescentFunctions& F, const Point& P,
                          std::optional<std::array<int, 2>> skip) {
    if (!on_curve(E, P)) throw UsageError("eval_descent: the point is not on the curve");
    const int p = E.p;
    CMatrix D = diag_matrix(p), M = shift_matrix(p, Cyclo(p, Rational(1)));
    DescentValue out;
    const Form* nums[2] = {&F.numerator_S, &F.numerator_T};
    const Cyclo* consts[2] = {&F.constant_S, &F.constant_T};
    for (int c = 0; c < 2; ++c) {
        if (auto v = eval_function(*nums[c], F.denominator, *consts[c], P)) {
            out.values[c] = *v;
            continue;
        }
        bool done = false;
        for (int i = 0; i < p && !done; ++i) {
            for (int j = 0; j < p && !done; ++j) {
                if (i == 0 && j == 0) continue;
                if (skip && (*skip)[0] == i && (*skip)[1] == j) continue;
                CMatrix T = matrix_pow(D, i) * matrix_pow(M, j);
                Point R = torsion_point(E, i, j);
                Point PR = T.apply(P);
                auto num = eval_function(*nums[c], F.denominator, *consts[c], PR);
                auto den = eval_function(*nums[c], F.denominator, *consts[c], R);
                if (!num || !den) continue;
                out.values[c] = *num / *den;
                out.shifted[c] = true;
                out.shift[c] = {i, j};
                done = true;
            }
        }
        if (!done) throw MathError("eval_descent: no torsion shift avoids the support");
    }
    return out;
}

int vanishing_order(const Form& F, const BranchSeries& B) {
    return eval_on_branch(F, B).valuation();
}

Cyclo leading_coefficient(const Curve& E, const Form& num, const Form& den, const Cyclo& constant, size_t order) {
    BranchSeries B = local_series(E, order);
    Series n = eval_on_branch(num, B), d = eval_on_branch(den, B);
    if (n.valuation() != 0) throw MathError("leading_coefficient: the numerator vanishes at O");
    if (d.valuation() != E.p) throw MathError("leading_coefficient: the denominator does not vanish to order p at O");
    return constant * n[0] / d[E.p];
}

} // namespace descent
