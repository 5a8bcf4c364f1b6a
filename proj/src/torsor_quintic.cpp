#include "descent/errors.hpp"
#include "descent/torsor.hpp"

namespace descent {

QuinticTorsor build_quintic(const Cyclo& lambda, const Cyclo& a, const KummerElement& beta) {
    const int p = 5;
    quintic_curve(lambda);
    if (a.p() != p || beta.p() != p) throw UsageError("torsor inputs over the wrong field");
    if (a.is_zero()) throw UsageError("a must be nonzero");
    if (beta.algebra()->a() != a) throw UsageError("beta does not live in K[alpha]/(alpha^p - a)");
    if (beta.norm().is_zero()) throw MathError("beta is not a unit (norm zero)");
    const auto& alg = beta.algebra();
    auto us = u_invariants(beta);
    const KummerElement &u1 = us[0], &u2 = us[1];
    KummerElement ainv = KummerElement::alpha(alg).inv();
    std::vector<KummerElement> neg(2 * p - 1);  // alpha^{-k}
    neg[0] = one_like(ainv);
    for (size_t k = 1; k < neg.size(); ++k) neg[k] = neg[k - 1] * ainv;
    Cyclo linv = lambda.inv();
    auto z = [&](long k) { return Cyclo::zeta(p, k); };

    Form Q(p, 5);
    for (int i = 0; i < p; ++i)
        for (int j = i; j < p; ++j) {
            const KummerElement& w = neg[i + j];
            Cyclo c;
            if (i == j) {
                c = w.trace() + lambda * (u1 * w).trace() - linv * (u2 * w).trace();
            } else {
                c = (w * Cyclo(p, Rational(2))).trace() + lambda * (u1 * w * (z(i - j) + z(j - i))).trace() -
                    linv * (u2 * w * (z(2 * i - 2 * j) + z(2 * j - 2 * i))).trace();
            }
            Monomial m(5, 0);
            m[i] += 1;
            m[j] += 1;
            Q.add_term(m, c);
        }
    QuinticTorsor t;
    t.lambda = lambda;
    t.a = a;
    t.beta = beta;
    t.Q = Q;
    t.M_S = shift_matrix(p, a);
    t.M_T = torsor_MT(beta, t.M_S);
    t.split = alg->is_split();
    CMatrix pw = identity_matrix(p, p);
    for (int k = 0; k < p; ++k) {
        t.quadrics.push_back(Q.apply_matrix(pw));
        pw = pw * t.M_S;
    }
    return t;
}

QuinticProfile quintic_profile(const QuinticTorsor& m) {
    const auto& alg = m.beta.algebra();
    auto v = eigenvectors(alg);
    KummerElement zero(alg);
    QuinticProfile out;
    for (auto& vi : v) out.Q.push_back(m.Q.eval(vi, zero));
    out.B.assign(5, std::vector<KummerElement>(5, zero));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            std::vector<KummerElement> s;
            for (int k = 0; k < 5; ++k) s.push_back(v[i][k] + v[j][k]);
            out.B[i][j] = m.Q.eval(s, zero) - out.Q[i] - out.Q[j];
        }
    return out;
}

namespace {

Cyclo base_value(const KummerElement& x, const char* what) {
    if (!x.in_base()) throw MathError(std::string(what) + " is not in K");
    return x[0];
}

} // namespace

Cyclo jacobian_lambda(const QuinticTorsor& m) {
    QuinticProfile pr = quintic_profile(m);
    if (pr.B[2][3].is_zero()) throw MathError("B(v_2, v_3) vanishes");
    KummerElement u2 = u_invariants(m.beta)[1];
    return base_value(-(pr.Q[0] / pr.B[2][3]) * u2, "-(Q(v_0)/B(v_2,v_3)) u_2");
}

Cyclo quintic_A(const QuinticTorsor& m) {
    QuinticProfile pr = quintic_profile(m);
    KummerElement acc = one_like(pr.Q[0]);
    for (int i = 0; i < 5; ++i) {
        if (pr.B[i][(i + 1) % 5].is_zero()) throw MathError("B(v_i, v_{i+1}) vanishes");
        acc = acc * pr.Q[i] / pr.B[i][(i + 1) % 5];
    }
    return base_value(acc, "A");
}

Report verify_torsor(const QuinticTorsor& m) {
    const int p = 5;
    Report rep;
    const auto& alg = m.beta.algebra();
    const Cyclo b = m.beta.norm();
    const KummerElement& beta = m.beta;

    if (m.split)
        rep.add("hypothesis", true, "a is a fifth power: construction applied beyond its stated hypothesis");

    std::vector<Form> basis = m.quadrics;
    auto mons = monomials(5, 2);
    CMatrix coeffs(mons.size(), basis.size(), Cyclo(p));
    for (size_t j = 0; j < basis.size(); ++j) {
        auto cv = basis[j].coeff_vector(mons);
        for (size_t i = 0; i < mons.size(); ++i) coeffs(i, j) = cv[i];
    }
    size_t rk = rank(coeffs);
    rep.add("span_dimension", rk == 5, "rank " + std::to_string(rk));

    std::vector<Form> imgS, imgT;
    for (auto& q : basis) {
        imgS.push_back(q.apply_matrix(m.M_S));
        imgT.push_back(q.apply_matrix(m.M_T));
    }
    rep.add("invariance_M_S", in_span(basis, imgS), "Q_k^{M_S} in the span");
    rep.add("invariance_M_T", in_span(basis, imgT), "Q_k^{M_T} in the span");

    auto gam = span_coordinates(basis, m.Q.apply_matrix(m.M_T));
    bool gok = false;
    if (gam) {
        KummerElement g(alg);
        KummerElement al = KummerElement::alpha(alg);
        for (int k = 0; k < p; ++k) g = g + al.pow(2 * k) * (*gam)[k];
        gok = g == beta * beta;
    }
    rep.add("gamma_beta_squared", gok, "Q^{M_T} = sum gamma_k Q^{M_S^k} with sum gamma_k alpha^{2k} = beta^2");

    rep.add("det_M_S", det(m.M_S) == m.a, "det = " + det(m.M_S).str());
    rep.add("det_M_T", det(m.M_T) == b, "det = " + det(m.M_T).str() + ", norm(beta) = " + b.str());
    CMatrix comm = m.M_S * m.M_T * inverse(m.M_S) * inverse(m.M_T);
    auto cv = scalar_value(comm);
    rep.add("commutator", cv.has_value() && *cv == Cyclo::zeta(p, 1),
            cv ? "[M_S, M_T] = " + cv->str() + " I" : "not scalar");

    QuinticProfile pr = quintic_profile(m);
    bool qc = pr.Q[0].in_base();
    for (int i = 1; i < p; ++i) qc = qc && pr.Q[i] == pr.Q[0];
    rep.add("Q_constancy", qc, "Q(v_i) = Q(v_0) in K");

    bool nz = !pr.Q[0].is_zero();
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j) nz = nz && !pr.B[i][j].is_zero();
    rep.add("eigen_values_nonzero", nz, "Q(v_i) and B(v_i, v_j) nonzero");
    if (!nz) return rep;

    auto s = [&](long k) { return beta.sigma(k); };
    KummerElement r1 = beta * beta / (s(1) * s(4));
    KummerElement r2 = beta * beta / (s(2) * s(3));
    bool c1 = true, c2 = true;
    KummerElement p1 = one_like(beta), p2 = one_like(beta);
    for (int i = 1; i <= 4; ++i) {
        p1 = p1 * r1.sigma(i - 1);
        p2 = p2 * r2.sigma(i - 1);
        c1 = c1 && pr.B[(i + 1) % p][(i + 4) % p] == pr.B[1][4] * p1;
        c2 = c2 && pr.B[(i + 2) % p][(i + 3) % p] == pr.B[2][3] * p2;
    }
    rep.add("cascade_B14", c1, "B(v_{i+1}, v_{i-1}) = B(v_1, v_4) prod sigma^{j-1}(beta^2/(sigma(beta) sigma^4(beta)))");
    rep.add("cascade_B23", c2, "B(v_{i+2}, v_{i-2}) = B(v_2, v_3) prod sigma^{j-1}(beta^2/(sigma^2(beta) sigma^3(beta)))");

    KummerElement lhs = pr.Q[0] * pr.Q[0] / (pr.B[1][4] * pr.B[2][3]);
    KummerElement rhs = -(beta * beta * s(1)) / (s(3) * s(4) * s(4));
    rep.add("Q0_squared_identity", lhs == rhs, "Q(v_0)^2 / (B(v_1,v_4) B(v_2,v_3)) = -beta^2 sigma(beta) / (sigma^3(beta) sigma^4(beta)^2)");

    auto us = u_invariants(beta);
    rep.add("ratio_B14", pr.B[1][4] / pr.Q[0] == us[0] * m.lambda, "B(v_1, v_4) / Q(v_0) = lambda u_1");

    std::string jl;
    bool jok = false, aok = false;
    std::string ad;
    try {
        Cyclo l = jacobian_lambda(m);
        jok = l == m.lambda;
        jl = "recovered " + l.str();
        Cyclo A = quintic_A(m);
        aok = A == (-m.lambda).pow(5) && A == (-l).pow(5);
        ad = "A = " + A.str();
    } catch (const MathError& e) {
        jl = ad = e.what();
    }
    rep.add("A_equals_minus_lambda_5", aok, ad);
    rep.add("jacobian_lambda", jok, jl);
    rep.add("E_A_model", quintic_EA_matches(m.lambda), "S_j(diag(1, -l, l, -1, l^-2) x) in the span of the q_i");
    return rep;
}

} // namespace descent
