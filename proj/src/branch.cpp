#include "descent/errors.hpp"
#include "descent/geometry.hpp"

namespace descent {

BranchSeries expand_branch(const std::vector<Form>& equations, const Point& P0, size_t chart, size_t parameter,
                           const std::vector<size_t>& used, size_t order) {
    const size_t n = P0.size();
    if (chart >= n || parameter >= n || chart == parameter) throw UsageError("expand_branch: bad chart or parameter");
    if (P0[chart].is_zero()) throw UsageError("expand_branch: the point is at infinity in this chart");
    const int p = P0[0].p();
    Cyclo inv = P0[chart].inv();
    Point P;
    for (auto& c : P0) P.push_back(c * inv);

    std::vector<size_t> unknowns;
    for (size_t i = 0; i < n; ++i)
        if (i != chart && i != parameter) unknowns.push_back(i);
    if (used.size() != unknowns.size()) throw UsageError("expand_branch: need one equation per unknown coordinate");
    for (auto& F : equations)
        if (!F(P).is_zero()) throw UsageError("expand_branch: the point is not on the curve");

    const size_t k = unknowns.size();
    CMatrix J(k, k, Cyclo(p));
    for (size_t r = 0; r < k; ++r) {
        Form F = equations[used[r]];
        for (size_t c = 0; c < k; ++c) J(r, c) = F.derivative(unknowns[c])(P);
    }
    CMatrix Jinv;
    try {
        Jinv = inverse(J);
    } catch (const SingularParameter&) {
        throw MathError("Newton iteration cannot start: the chosen equations are singular at the point");
    }

    BranchSeries B;
    B.chart = chart;
    B.parameter = parameter;
    B.order = order;
    for (size_t i = 0; i < n; ++i) B.coords.push_back(Series::constant(P[i], order));
    if (order > 1) B.coords[parameter][1] = Cyclo(p, Rational(1));

    for (size_t deg = 1; deg < order; ++deg) {
        std::vector<Series> trunc;
        for (auto& s : B.coords) trunc.push_back(s.truncated(deg + 1));
        std::vector<Cyclo> r;
        for (size_t e : used) r.push_back(equations[e].eval(trunc, Series(p, deg + 1))[deg]);
        for (size_t c = 0; c < k; ++c) {
            Cyclo d(p);
            for (size_t j = 0; j < k; ++j) d -= Jinv(c, j) * r[j];
            B.coords[unknowns[c]][deg] = d;
        }
    }
    for (auto& F : equations)
        if (eval_on_branch(F, B).valuation() != -1)
            throw MathError("Newton iteration did not converge: residual does not vanish to the requested order");
    return B;
}

BranchSeries local_series(const Curve& E, size_t order) {
    if (order < static_cast<size_t>(E.p) + 1) throw UsageError("local_series: order must be at least p + 1");
    if (E.p == 3) return expand_branch(E.equations, E.origin, 0, 2, {0}, order);
    return expand_branch(E.equations, E.origin, 3, 0, {0, 1, 2}, order);
}

BranchSeries transform_branch(const CMatrix& M, const BranchSeries& B) {
    BranchSeries out = B;
    out.coords = M.apply(B.coords);
    return out;
}

Series eval_on_branch(const Form& F, const BranchSeries& B) {
    return F.eval(B.coords, Series(F.p(), B.order));
}

} // namespace descent
