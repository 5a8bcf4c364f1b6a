#pragma once

#include "descent/geometry.hpp"

#include <array>
#include <optional>

namespace descent {

// An element of K* taken modulo p-th powers.
struct PthPowerClass {
    Cyclo rep;
    int p() const { return rep.p(); }
};

// Clears denominators and strips p-th powers from the rational content and
// of the prime 1 - z.
PthPowerClass make_class(const Cyclo& x);
bool class_eq(const PthPowerClass& x, const PthPowerClass& y, const PrecisionConfig& cfg = {});
bool is_trivial(const PthPowerClass& x, const PrecisionConfig& cfg = {});

// f_X = constant_X * numerator_X / denominator for X in {S, T}.
struct DescentFunctions {
    int p = 0;
    Cyclo lambda;
    Form numerator_S, numerator_T, denominator;
    Cyclo constant_S, constant_T;
};

// Hypertangent planes of the quintic model at O, S and T.
struct Hypertangents {
    Cyclo alpha, beta, gamma;
    Form H_O, H_S, H_T;
};
Hypertangents quintic_hypertangents(const Cyclo& lambda);

enum class Constants {
    // p = 3: constant_S = (lambda^3 + 27) / (3 (z^2 - z))^3 and
    // constant_T = (lambda^2 - 3 lambda + 9) / (-27), so that t^3 f_S and
    // t^3 f_T both tend to 1 at O.
    // p = 5: kappa_X = lambda^3 nu^3 / H_X(O) with nu = lambda^10 + 11 lambda^5 - 1.
    // H_O = nu^3 / (5^5 lambda^12) t^5 + O(t^6) along local_series, so the
    // leading coefficient at O is (5 lambda^3)^5.
    corrected,
    // p = 3: lambda^3 + 27 and lambda^2 - 3 lambda + 9, for which t^3 f_S
    // tends to 81 (z - z^2) and t^3 f_T to -27.
    // p = 5: the closed forms
    //   f_S: (g f2 f3)^2 / (5 lambda (z - z^4)(lambda^5 - 2)),  f_T: lambda^2 f2^2 f3 / g,
    // g = l^2 + l - 1, f2 = l^4 - 3l^3 + 4l^2 - 2l + 1, f3 = l^4 + 2l^3 + 4l^2 + 3l + 1.
    // Their leading coefficients are not fifth powers in general.
    as_printed,
};

DescentFunctions f3_functions(const Cyclo& lambda, Constants which = Constants::corrected);
DescentFunctions f5_functions(const Cyclo& lambda, Constants which = Constants::corrected);
DescentFunctions descent_functions(const Curve& E);

// f(P) for a point outside the support of f.
std::optional<Cyclo> eval_function(const Form& num, const Form& den, const Cyclo& constant, const Point& P);

struct DescentValue {
    std::array<Cyclo, 2> values;        // representatives for S and T
    std::array<bool, 2> shifted{};      // whether a torsion shift was needed
    std::array<std::array<int, 2>, 2> shift{};  // (i, j) of the shift R = iS + jT
};

// Evaluates (f_S, f_T) at P; a point in the support is moved off it with
// f(P) = f(P + R) / f(R) for the first torsion point R that works, R
// running over (i, j) != (0, 0) in lexicographic order, skipping `skip`.
DescentValue eval_descent(const Curve& E, const DescentFunctions& F, const Point& P,
                          std::optional<std::array<int, 2>> skip = std::nullopt);

// Constant term of t^p f at O, where t is the branch parameter of
// local_series (Z for p = 3 in the chart X = 1, x_0/x_3 for p = 5).
Cyclo leading_coefficient(const Curve& E, const Form& num, const Form& den, const Cyclo& constant, size_t order);

// Order of vanishing of a form along a branch (-1 if it vanishes to the
// full order of the branch).
int vanishing_order(const Form& F, const BranchSeries& B);

} // namespace descent
