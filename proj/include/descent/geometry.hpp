#pragma once

#include "descent/cyclo.hpp"
#include "descent/form.hpp"
#include "descent/matrix.hpp"
#include "descent/roots.hpp"
#include "descent/series.hpp"

#include <vector>

namespace descent {

using Point = std::vector<Cyclo>;

// Scales so that the first nonzero coordinate is 1.
Point normalize(const Point& P);
bool same_point(const Point& P, const Point& Q);
// Lexicographic order on normalized coordinates.
bool point_less(const Point& P, const Point& Q);

// D_p = diag(1, z, ..., z^{p-1}).
CMatrix diag_matrix(int p);
// M_{a,p}: (M x)_i = x_{i+1} for i < p-1 and (M x)_{p-1} = a x_0.
CMatrix shift_matrix(int p, const Cyclo& a);

struct TranslationMatrices {
    CMatrix diag;   // D_p
    CMatrix shift;  // M_{a,p}
};
TranslationMatrices translation_matrices(int p, const Cyclo& a);

// E_lambda: the Hesse cubic for p = 3, the five quadrics
// lambda x_i^2 + lambda^2 x_{i-2} x_{i+2} - x_{i-1} x_{i+1} for p = 5.
struct Curve {
    int p = 0;
    Cyclo lambda;
    std::vector<Form> equations;
    Point origin;
};

Form hesse_form(const Cyclo& lambda);
std::vector<Form> quintic_forms(const Cyclo& lambda);
// Throw SingularParameter for singular members of the families.
Curve hesse_curve(const Cyclo& lambda);
Curve quintic_curve(const Cyclo& lambda);
Curve reference_curve(int p, const Cyclo& lambda);

bool on_curve(const Curve& E, const Point& P);

// D^i M^j O: the torsion point i S + j T.
Point torsion_point(const Curve& E, int i, int j);
// All p^2 torsion points, ordered by (i, j).
std::vector<Point> torsion_points(const Curve& E);

// Chord-tangent group law on the Hesse cubic with origin (1 : -1 : 0).
Point hesse_third(const Cyclo& lambda, const Point& P, const Point& Q);
Point hesse_add(const Cyclo& lambda, const Point& P, const Point& Q);
Point hesse_neg(const Cyclo& lambda, const Point& P);
Point hesse_mul(const Cyclo& lambda, long n, const Point& P);

// Hesse: all points with coordinates in Z[z] whose coefficients are at
// most bound in absolute value.  Quintic: all points whose normalized
// coordinates have element_height <= bound.  Deterministic order: by
// search height, then coordinates.
std::vector<Point> point_search(const Curve& E, int bound, int threads = 1, const PrecisionConfig& cfg = {});

// Every element of K with height <= bound (integral ones only if asked),
// in a fixed order.
std::vector<Cyclo> elements_up_to(int p, int bound, bool integral_only);

// A branch of the curve through a point: every coordinate is a power
// series in the local parameter t = x_parameter / x_chart - P_parameter.
struct BranchSeries {
    size_t chart = 0;
    size_t parameter = 0;
    size_t order = 0;
    std::vector<Series> coords;
};

// Solves the selected equations for the remaining coordinates by linear
// Hensel lifting; every equation is checked to vanish to the order.
BranchSeries expand_branch(const std::vector<Form>& equations, const Point& P, size_t chart, size_t parameter,
                           const std::vector<size_t>& used, size_t order);

// Branch at the origin.  p = 3: chart X = 1, parameter Z, the cubic itself.
// p = 5: chart x_3 = 1, parameter x_0, quadrics q_0, q_1, q_2 solved and
// q_3, q_4 checked.
BranchSeries local_series(const Curve& E, size_t order);

// The image of a branch under a linear map (the same parameter).
BranchSeries transform_branch(const CMatrix& M, const BranchSeries& B);
Series eval_on_branch(const Form& F, const BranchSeries& B);

} // namespace descent
