#include "descent/errors.hpp"
#include "descent/torsor.hpp"

namespace descent {

namespace {

std::optional<Cyclo> proportional(const Form& g, const Form& f) {
    if (f.is_zero()) return std::nullopt;
    const auto& [m0, c0] = *f.terms().begin();
    Cyclo c = g.coeff(m0) / c0;
    if (g == f * c) return c;
    return std::nullopt;
}

void check_inputs(const Cyclo& a, const KummerElement& beta, int p) {
    if (a.p() != p || beta.p() != p) throw UsageError("torsor inputs over the wrong field");
    if (a.is_zero()) throw UsageError("a must be nonzero");
    if (beta.algebra()->a() != a) throw UsageError("beta does not live in K[alpha]/(alpha^p - a)");
    if (beta.norm().is_zero()) throw MathError("beta is not a unit (norm zero)");
}

} // namespace

CubicTorsor build_cubic(const Cyclo& lambda, const Cyclo& a, const KummerElement& beta) {
    const int p = 3;
    hesse_curve(lambda);
    check_inputs(a, beta, p);
    const auto& alg = beta.algebra();
    KummerElement u = u_invariants(beta)[0];
    KummerElement al = KummerElement::alpha(alg);
    Cyclo tr = u.trace();
    Cyclo A = tr + lambda;
    Cyclo B = (al * u).trace() * Rational(3);
    Cyclo C = (al * al * u).trace() * Rational(3);
    Cyclo D = (a * tr * Rational(2) - lambda * a) * Rational(3);
    Form F(p, 3);
    F.add_term({3, 0, 0}, A * a * a);
    F.add_term({0, 3, 0}, A * a);
    F.add_term({0, 0, 3}, A);
    F.add_term({2, 0, 1}, B * a);
    F.add_term({1, 2, 0}, B * a);
    F.add_term({0, 1, 2}, B);
    F.add_term({2, 1, 0}, C * a);
    F.add_term({0, 2, 1}, C);
    F.add_term({1, 0, 2}, C);
    F.add_term({1, 1, 1}, D);
    CubicTorsor m{lambda, a, beta, F, shift_matrix(p, a), CMatrix()};
    m.M_T = torsor_MT(beta, m.M_S);
    return m;
}

CubicProfile cubic_profile(const CubicTorsor& m) {
    const auto& alg = m.beta.algebra();
    auto v = eigenvectors(alg);
    KummerElement zero(alg);
    CubicProfile out;
    for (auto& vi : v) out.F.push_back(m.form.eval(vi, zero));
    auto sum = [](std::vector<KummerElement> x, const std::vector<KummerElement>& y) {
        for (size_t i = 0; i < x.size(); ++i) x[i] = x[i] + y[i];
        return x;
    };
    auto val = [&](const std::vector<KummerElement>& x) { return m.form.eval(x, zero); };
    out.T = val(sum(sum(v[0], v[1]), v[2])) - val(sum(v[0], v[1])) - val(sum(v[0], v[2])) - val(sum(v[1], v[2])) +
            out.F[0] + out.F[1] + out.F[2];
    out.scale = m.a * m.a * Rational(27);
    return out;
}

Cyclo jacobian_lambda(const CubicTorsor& m) {
    CubicProfile pr = cubic_profile(m);
    for (auto& f : pr.F)
        if (f.is_zero()) throw MathError("F vanishes at an eigenvector: M_S has a fixed point on the model");
    KummerElement prod = pr.F[0] * pr.F[1] * pr.F[2];
    if (!prod.in_base() || prod[0] != pr.scale.pow(3))
        throw MathError("the product of the eigen-values is not (27 a^2)^3");
    if (!pr.T.in_base()) throw MathError("the trilinear value is not in K");
    return pr.T[0] / pr.scale;
}

KMatrix cubic_coefficient_matrix(const AlgebraPtr& alg) {
    const int p = 3;
    const Cyclo& a = alg->a();
    KummerElement al = KummerElement::alpha(alg);
    KummerElement zero(alg);
    auto K = [&](const Cyclo& c) { return KummerElement(alg, c); };
    KMatrix M(4, 4, zero);
    for (int i = 0; i < 3; ++i) {
        M(i, 0) = K(a * a * Rational(3));
        M(i, 1) = al * al * (a * Cyclo::zeta(p, 2 * i) * Rational(3));
        M(i, 2) = al * (a * Cyclo::zeta(p, i) * Rational(3));
        M(i, 3) = K(a * Rational(3));
    }
    M(3, 0) = K(a * a * Rational(18));
    M(3, 3) = K(a * Rational(-9));
    return M;
}

KMatrix cubic_coefficient_inverse(const AlgebraPtr& alg) {
    const int p = 3;
    const Cyclo& a = alg->a();
    KummerElement al = KummerElement::alpha(alg);
    KummerElement zero(alg);
    auto K = [&](const Cyclo& c) { return KummerElement(alg, c); };
    KMatrix M(4, 4, zero);
    const int z1[3] = {0, 1, 2}, z2[3] = {0, 2, 1};
    for (int j = 0; j < 3; ++j) {
        M(0, j) = K(Cyclo(p, Rational(1)));
        M(1, j) = al * (Cyclo::zeta(p, z1[j]) * Rational(3));
        M(2, j) = al * al * (Cyclo::zeta(p, z2[j]) * Rational(3));
        M(3, j) = K(a * Rational(2));
    }
    M(0, 3) = K(Cyclo(p, Rational(1)));
    M(3, 3) = K(-a);
    return M;
}

Report verify_torsor(const CubicTorsor& m) {
    const int p = 3;
    Report rep;
    const auto& alg = m.beta.algebra();
    const Cyclo b = m.beta.norm();
    const Cyclo z = Cyclo::zeta(p, 1);

    auto cs = proportional(m.form.apply_matrix(m.M_S), m.form);
    rep.add("invariance_M_S", cs.has_value() && *cs == m.a, cs ? "F^{M_S} = " + cs->str() + " F" : "not proportional");
    auto ct = proportional(m.form.apply_matrix(m.M_T), m.form);
    rep.add("invariance_M_T", ct.has_value() && *ct == b, ct ? "F^{M_T} = " + ct->str() + " F" : "not proportional");
    rep.add("det_M_S", det(m.M_S) == m.a, "det = " + det(m.M_S).str());
    rep.add("det_M_T", det(m.M_T) == b, "det = " + det(m.M_T).str() + ", norm(beta) = " + b.str());
    CMatrix comm = m.M_S * m.M_T * inverse(m.M_S) * inverse(m.M_T);
    auto cv = scalar_value(comm);
    rep.add("commutator", cv.has_value() && *cv == z, cv ? "[M_S, M_T] = " + cv->str() + " I" : "not scalar");

    auto v = eigenvectors(alg);
    KummerElement al = KummerElement::alpha(alg);
    bool eig = true;
    for (int i = 0; i < p; ++i) {
        auto w = m.M_S.apply(v[i]);
        for (int k = 0; k < p; ++k) eig = eig && w[k] == v[i][k] * al * Cyclo::zeta(p, i);
    }
    rep.add("eigenvectors", eig, "M_S v_i = alpha z^i v_i");

    CubicProfile pr = cubic_profile(m);
    bool nonzero = true;
    for (auto& f : pr.F) nonzero = nonzero && !f.is_zero();
    rep.add("eigen_values_nonzero", nonzero, "no M_S-fixed point on the model");

    KummerElement zero(alg);
    bool mt = true;
    Form FT = m.form.apply_matrix(m.M_T);
    for (int i = 0; i < p; ++i) mt = mt && FT.eval(v[i], zero) == m.beta.sigma(i).pow(3) * pr.F[(i + 1) % p];
    rep.add("F_M_T_eigen", mt, "F^{M_T}(v_i) = sigma^i(beta)^3 F(v_{i+1})");

    KummerElement u = u_invariants(m.beta)[0];
    bool scale = pr.T == KummerElement(alg, pr.scale * m.lambda);
    for (int i = 0; i < p; ++i) scale = scale && pr.F[i] == u.sigma(i) * pr.scale;
    rep.add("profile_scale", scale, "F(v_i) = 27a^2 sigma^i(u), T(v_0,v_1,v_2) = 27a^2 lambda");

    KummerElement prod = pr.F[0] * pr.F[1] * pr.F[2] * pr.scale.pow(-3);
    rep.add("product_F", prod == one_like(prod), "prod F(v_i) / (27a^2)^3 = 1");

    std::vector<KummerElement> coeffs{KummerElement(alg, m.form.coeff({0, 0, 3})),
                                      KummerElement(alg, m.form.coeff({0, 1, 2})),
                                      KummerElement(alg, m.form.coeff({1, 0, 2})),
                                      KummerElement(alg, m.form.coeff({1, 1, 1}) * Rational(1, 3))};
    KMatrix fwd = cubic_coefficient_matrix(alg);
    std::vector<KummerElement> lhs;
    for (int r = 0; r < 4; ++r) {
        KummerElement acc = zero;
        for (int c = 0; c < 4; ++c) acc = acc + fwd(r, c) * coeffs[c];
        lhs.push_back(acc);
    }
    rep.add("coefficient_matrix", lhs[0] == pr.F[0] && lhs[1] == pr.F[1] && lhs[2] == pr.F[2] && lhs[3] == pr.T,
            "(F(v_i), T) from (A, B, C, D)");
    KMatrix prodm = fwd * cubic_coefficient_inverse(alg);
    bool inv_ok = true;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            inv_ok = inv_ok && prodm(r, c) == (r == c ? KummerElement(alg, pr.scale) : zero);
    rep.add("inverse_matrix", inv_ok, "product = 27a^2 I");

    std::string jl;
    bool jok = false;
    try {
        Cyclo l = jacobian_lambda(m);
        jok = l == m.lambda;
        jl = "recovered " + l.str();
    } catch (const MathError& e) {
        jl = e.what();
    }
    rep.add("jacobian_lambda", jok, jl);

    auto ns = cubic_nonsingular(m.form);
    rep.add("nonsingular", ns.value_or(false), ns ? (*ns ? "no singular point" : "singular point found") : "undecided");
    return rep;
}

} // namespace descent
