#pragma once

#include "descent/geometry.hpp"
#include "descent/kummer.hpp"

#include <string>

namespace descent {

using KMatrix = Matrix<KummerElement>;

struct CubicTorsor {
    Cyclo lambda, a;
    KummerElement beta;
    Form form;
    CMatrix M_S, M_T;
};

struct QuinticTorsor {
    Cyclo lambda, a;
    KummerElement beta;
    Form Q;
    std::vector<Form> quadrics;  // Q^{M_S^k}, k = 0..4
    CMatrix M_S, M_T;
    bool split = false;  // a is a fifth power: construction used outside its stated hypothesis
};

// (Tr u + lambda)(a^2 X^3 + a Y^3 + Z^3) + 3 Tr(alpha u)(a X^2 Z + a Y^2 X + Z^2 Y)
//   + 3 Tr(alpha^2 u)(a X^2 Y + Y^2 Z + Z^2 X) + 3(2a Tr u - lambda a) XYZ
CubicTorsor build_cubic(const Cyclo& lambda, const Cyclo& a, const KummerElement& beta);
QuinticTorsor build_quintic(const Cyclo& lambda, const Cyclo& a, const KummerElement& beta);

// M_T = D_p (sum_i beta_i M_S^i)
CMatrix torsor_MT(const KummerElement& beta, const CMatrix& M_S);

// v_i = (1, alpha z^i, ..., alpha^{p-1} z^{(p-1) i}), so M_{a,p} v_i = alpha z^i v_i.
std::vector<std::vector<KummerElement>> eigenvectors(const AlgebraPtr& alg);

struct CubicProfile {
    std::vector<KummerElement> F;  // F(v_i)
    KummerElement T;               // XYZ-coefficient of F(X v_0 + Y v_1 + Z v_2)
    Cyclo scale;                   // 27 a^2: F(v_i) = scale sigma^i(u), T = scale lambda
};
CubicProfile cubic_profile(const CubicTorsor& m);

struct QuinticProfile {
    std::vector<KummerElement> Q;                // Q(v_i)
    std::vector<std::vector<KummerElement>> B;   // B(v_i, v_j) = Q(v_i + v_j) - Q(v_i) - Q(v_j)
};
QuinticProfile quintic_profile(const QuinticTorsor& m);

// p = 3: T / scale after checking prod F(v_i) = scale^3.
// p = 5: -(Q(v_0) / B(v_2, v_3)) u_2.
Cyclo jacobian_lambda(const CubicTorsor& m);
Cyclo jacobian_lambda(const QuinticTorsor& m);

// A = prod_i Q(v_i) / B(v_i, v_{i+1}).
Cyclo quintic_A(const QuinticTorsor& m);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    bool all_pass() const;
    const Check* find(const std::string& name) const;
    void add(std::string name, bool pass, std::string detail = "");
};

Report verify_torsor(const CubicTorsor& m);
Report verify_torsor(const QuinticTorsor& m);

// Small K-points: normalized coordinates of element_height <= bound.  When
// limit > 0 the search stops after that many points (the order stays
// deterministic: charts first, then increasing height of the free
// coordinates).
std::vector<Point> torsor_point_search(const std::vector<Form>& equations, int bound, size_t limit = 0,
                                       const PrecisionConfig& cfg = {});

// The 4x4 matrix taking (A, B, C, D) to (F(v_0), F(v_1), F(v_2), T) with
// the XYZ-coefficient written 3D, and the matrix claimed to be 27 a^2 times
// its inverse.
KMatrix cubic_coefficient_matrix(const AlgebraPtr& alg);
KMatrix cubic_coefficient_inverse(const AlgebraPtr& alg);

// Dimensions of the eigenspaces of F -> F^{M_{a,3}} on ternary cubics for
// the eigenvalues a, a z, a z^2.
std::vector<size_t> cubic_eigenspace_dims(const Cyclo& a);

// Checks that a ternary cubic has no singular point, by resultants of its
// partial derivatives.  Nothing when every elimination order is degenerate.
std::optional<bool> cubic_nonsingular(const Form& F);

// j-invariant of a plane cubic with a K-rational flex P: the flex is moved
// to (0:1:0) with tangent w = 0 and the Weierstrass invariants read off.
Cyclo cubic_j_invariant(const Form& F, const Point& flex);
// The classical value for X^3 + Y^3 + Z^3 + mu XYZ.
Cyclo hesse_j_invariant(const Cyclo& mu);

// S_0..S_4 of the curve E_A: S_0 = x0^2 - x2 x3 + x1 x4, ...
std::vector<Form> quintic_EA_forms(const Cyclo& A);
// Whether each S_j(diag(1, -l, l, -1, l^-2) x) lies in the span of the
// quadrics of E_l, for A = (-l)^5.
bool quintic_EA_matches(const Cyclo& lambda);

// Whether each form lies in the K-span of the basis forms.
bool in_span(const std::vector<Form>& basis, const std::vector<Form>& forms);
// Coordinates of f in the basis (which must be independent), if it lies in the span.
std::optional<std::vector<Cyclo>> span_coordinates(const std::vector<Form>& basis, const Form& f);

} // namespace descent
