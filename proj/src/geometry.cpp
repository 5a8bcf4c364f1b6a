#include "descent/geometry.hpp"
#include "descent/errors.hpp"

namespace descent {

Point normalize(const Point& P) {
    for (auto& c : P) {
        if (c.is_zero()) continue;
        Cyclo inv = c.inv();
        Point out;
        for (auto& x : P) out.push_back(x * inv);
        return out;
    }
    throw UsageError("the zero vector is not a projective point");
}

bool same_point(const Point& P, const Point& Q) {
    return P.size() == Q.size() && normalize(P) == normalize(Q);
}

bool point_less(const Point& P, const Point& Q) {
    Point a = normalize(P), b = normalize(Q);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

CMatrix diag_matrix(int p) {
    CMatrix m(p, p, Cyclo(p));
    for (int i = 0; i < p; ++i) m(i, i) = Cyclo::zeta(p, i);
    return m;
}

CMatrix shift_matrix(int p, const Cyclo& a) {
    if (a.is_zero()) throw UsageError("M_{a,p} needs a nonzero a");
    CMatrix m(p, p, Cyclo(p));
    for (int i = 0; i + 1 < p; ++i) m(i, i + 1) = Cyclo(p, Rational(1));
    m(p - 1, 0) = a;
    return m;
}

TranslationMatrices translation_matrices(int p, const Cyclo& a) {
    return {diag_matrix(p), shift_matrix(p, a)};
}

Form hesse_form(const Cyclo& lambda) {
    const int p = lambda.p();
    Form F(p, 3);
    Cyclo one(p, Rational(1));
    F.add_term({3, 0, 0}, one);
    F.add_term({0, 3, 0}, one);
    F.add_term({0, 0, 3}, one);
    F.add_term({1, 1, 1}, lambda);
    return F;
}

std::vector<Form> quintic_forms(const Cyclo& lambda) {
    const int p = lambda.p();
    std::vector<Form> out;
    Cyclo lam2 = lambda * lambda;
    for (int i = 0; i < 5; ++i) {
        Form q(p, 5);
        auto mono = [](int a, int b) {
            Monomial m(5, 0);
            m[((a % 5) + 5) % 5] += 1;
            m[((b % 5) + 5) % 5] += 1;
            return m;
        };
        q.add_term(mono(i, i), lambda);
        q.add_term(mono(i - 2, i + 2), lam2);
        q.add_term(mono(i - 1, i + 1), -Cyclo(p, Rational(1)));
        out.push_back(q);
    }
    return out;
}

Curve hesse_curve(const Cyclo& lambda) {
    if (lambda.p() != 3) throw UsageError("the Hesse family lives over Q(zeta_3)");
    if ((lambda.pow(3) + Cyclo(3, Rational(27))).is_zero())
        throw SingularParameter("lambda^3 = -27: the Hesse cubic is singular");
    Cyclo one(3, Rational(1));
    return {3, lambda, {hesse_form(lambda)}, {one, -one, Cyclo(3)}};
}

Curve quintic_curve(const Cyclo& lambda) {
    if (lambda.p() != 5) throw UsageError("the quintic family lives over Q(zeta_5)");
    if (lambda.is_zero()) throw SingularParameter("lambda = 0: the quintic model degenerates");
    Cyclo l5 = lambda.pow(5);
    if ((l5 * l5 + l5 * Rational(11) - Cyclo(5, Rational(1))).is_zero())
        throw SingularParameter("lambda^10 + 11 lambda^5 - 1 = 0: the quintic curve is singular");
    Cyclo one(5, Rational(1));
    return {5, lambda, quintic_forms(lambda), {Cyclo(5), lambda, -one, one, -lambda}};
}

Curve reference_curve(int p, const Cyclo& lambda) {
    check_prime(p);
    return p == 3 ? hesse_curve(lambda) : quintic_curve(lambda);
}

bool on_curve(const Curve& E, const Point& P) {
    if (P.size() != static_cast<size_t>(E.p)) throw UsageError("point has the wrong number of coordinates");
    bool nonzero = false;
    for (auto& c : P) nonzero |= !c.is_zero();
    if (!nonzero) return false;
    for (auto& F : E.equations)
        if (!F(P).is_zero()) return false;
    return true;
}

Point torsion_point(const Curve& E, int i, int j) {
    CMatrix D = diag_matrix(E.p), M = shift_matrix(E.p, Cyclo(E.p, Rational(1)));
    Point R = E.origin;
    for (int k = 0; k < ((j % E.p) + E.p) % E.p; ++k) R = M.apply(R);
    for (int k = 0; k < ((i % E.p) + E.p) % E.p; ++k) R = D.apply(R);
    return normalize(R);
}

std::vector<Point> torsion_points(const Curve& E) {
    std::vector<Point> out;
    for (int i = 0; i < E.p; ++i)
        for (int j = 0; j < E.p; ++j) out.push_back(torsion_point(E, i, j));
    return out;
}

namespace {

Point add_scaled(const Cyclo& s, const Point& P, const Cyclo& t, const Point& Q) {
    Point R;
    for (size_t i = 0; i < P.size(); ++i) R.push_back(s * P[i] + t * Q[i]);
    return R;
}

} // namespace

Point hesse_third(const Cyclo& lambda, const Point& P0, const Point& Q0) {
    Form F = hesse_form(lambda);
    Point P = normalize(P0), Q = normalize(Q0);
    const int p = lambda.p();
    Cyclo one(p, Rational(1));
    if (!F(P).is_zero() || !F(Q).is_zero()) throw UsageError("hesse_add: point not on the curve");
    if (P == Q) {
        std::vector<Cyclo> G;
        for (size_t i = 0; i < 3; ++i) G.push_back(F.derivative(i)(P));
        for (int e = 0; e < 3; ++e) {
            Point E(3, Cyclo(p));
            E[e] = one;
            Point W{G[1] * E[2] - G[2] * E[1], G[2] * E[0] - G[0] * E[2], G[0] * E[1] - G[1] * E[0]};
            if (W[0].is_zero() && W[1].is_zero() && W[2].is_zero()) continue;
            if (same_point(W, P)) continue;
            Cyclo FW = F(W);
            Cyclo c2 = F(add_scaled(one, P, one, W)) - FW;
            if (FW.is_zero() && c2.is_zero()) throw MathError("tangent line lies on the curve");
            return normalize(add_scaled(FW, P, -c2, W));
        }
        throw MathError("degenerate tangent at a point of the Hesse cubic");
    }
    Cyclo Fp = F(add_scaled(one, P, one, Q));
    Cyclo Fm = F(add_scaled(one, P, -one, Q));
    Cyclo A = (Fp - Fm) * Rational(1, 2), B = (Fp + Fm) * Rational(1, 2);
    if (A.is_zero() && B.is_zero()) throw MathError("chord lies on the curve");
    return normalize(add_scaled(B, P, -A, Q));
}

Point hesse_add(const Cyclo& lambda, const Point& P, const Point& Q) {
    Cyclo one(lambda.p(), Rational(1));
    Point O{one, -one, Cyclo(lambda.p())};
    return hesse_third(lambda, hesse_third(lambda, P, Q), O);
}

Point hesse_neg(const Cyclo&, const Point& P) {
    return normalize(Point{P[1], P[0], P[2]});
}

Point hesse_mul(const Cyclo& lambda, long n, const Point& P) {
    Cyclo one(lambda.p(), Rational(1));
    Point R{one, -one, Cyclo(lambda.p())};
    Point base = n < 0 ? hesse_neg(lambda, P) : normalize(P);
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) R = hesse_add(lambda, R, base);
        k >>= 1;
        if (k) base = hesse_add(lambda, base, base);
    }
    return R;
}

} // namespace descent
