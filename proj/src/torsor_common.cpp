#include "descent/errors.hpp"
#include "descent/torsor.hpp"
#include "descent/upoly.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace descent {

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(const std::string& name) const {
    for (auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

void Report::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

CMatrix torsor_MT(const KummerElement& beta, const CMatrix& M_S) {
    const int p = beta.p();
    CMatrix acc(p, p, Cyclo(p));
    CMatrix pw = identity_matrix(p, p);
    for (int i = 0; i < p; ++i) {
        acc = acc + pw.scaled(beta[i]);
        pw = pw * M_S;
    }
    return diag_matrix(p) * acc;
}

std::vector<std::vector<KummerElement>> eigenvectors(const AlgebraPtr& alg) {
    const int p = alg->p();
    KummerElement al = KummerElement::alpha(alg);
    std::vector<std::vector<KummerElement>> out;
    for (int i = 0; i < p; ++i) {
        std::vector<KummerElement> v;
        KummerElement pw(alg, Cyclo(p, Rational(1)));
        for (int k = 0; k < p; ++k) {
            v.push_back(pw * Cyclo::zeta(p, static_cast<long>(i) * k));
            pw = pw * al;
        }
        out.push_back(v);
    }
    return out;
}

namespace {

std::set<Monomial> support(const std::vector<Form>& forms) {
    std::set<Monomial> s;
    for (auto& f : forms)
        for (auto& [m, c] : f.terms()) s.insert(m);
    return s;
}

std::vector<Cyclo> coords_on(const Form& f, const std::set<Monomial>& mons) {
    std::vector<Cyclo> v;
    for (auto& m : mons) v.push_back(f.coeff(m));
    return v;
}

} // namespace

std::optional<std::vector<Cyclo>> span_coordinates(const std::vector<Form>& basis, const Form& f) {
    auto all = basis;
    all.push_back(f);
    auto mons = support(all);
    if (mons.empty()) return std::vector<Cyclo>(basis.size(), Cyclo(f.p()));
    std::vector<std::vector<Cyclo>> cols;
    for (auto& b : basis) cols.push_back(coords_on(b, mons));
    return solve_columns(cols, coords_on(f, mons));
}

bool in_span(const std::vector<Form>& basis, const std::vector<Form>& forms) {
    for (auto& f : forms)
        if (!span_coordinates(basis, f)) return false;
    return true;
}

// ---------------------------------------------------------------- point search

namespace {

// Substitutes the known coordinates; unknown coordinates become the
// variables of the result, in the order of `unknowns`.
Form substitute(const Form& F, const std::vector<Cyclo>& known, const std::vector<size_t>& unknowns) {
    const int p = F.p();
    const size_t n = F.nvars();
    std::vector<long> slot(n, -1);
    for (size_t k = 0; k < unknowns.size(); ++k) slot[unknowns[k]] = static_cast<long>(k);
    std::vector<std::vector<Cyclo>> pw(n);
    int d = std::max(F.degree(), 0);
    for (size_t i = 0; i < n; ++i) {
        if (slot[i] >= 0) continue;
        pw[i].push_back(Cyclo(p, Rational(1)));
        for (int e = 1; e <= d; ++e) pw[i].push_back(pw[i].back() * known[i]);
    }
    std::map<Monomial, Cyclo> acc;
    for (auto& [m, c] : F.terms()) {
        Cyclo v = c;
        Monomial mu(unknowns.size(), 0);
        bool zero = false;
        for (size_t i = 0; i < n && !zero; ++i) {
            if (slot[i] >= 0) {
                mu[slot[i]] = m[i];
            } else if (m[i] > 0) {
                if (known[i].is_zero()) zero = true;
                else v *= pw[i][m[i]];
            }
        }
        if (zero) continue;
        auto it = acc.find(mu);
        if (it == acc.end()) acc.emplace(mu, v);
        else it->second += v;
    }
    Form out(p, unknowns.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.add_term(m, c);
    return out;
}

UPoly as_upoly(const Form& f) {
    const int p = f.p();
    std::vector<Cyclo> c(std::max(f.degree(), 0) + 1, Cyclo(p));
    for (auto& [m, v] : f.terms()) c[m[0]] += v;
    return UPoly(p, c);
}

struct Solver {
    const std::vector<Cyclo>& elems;
    const PrecisionConfig& cfg;

    std::vector<std::vector<Cyclo>> univariate(const std::vector<Form>& polys) const {
        const int p = polys.front().p();
        UPoly g(p);
        for (auto& f : polys) g = gcd(g, as_upoly(f));
        if (g.is_zero()) throw MathError("point search: a whole line lies on the model");
        std::vector<std::vector<Cyclo>> out;
        if (g.degree() == 0) return out;
        for (auto& r : k_roots(g.coeffs(), cfg)) out.push_back({r});
        return out;
    }

    // Two unknowns (u, v): combinations free of u^2, uv, v^2 are linear.
    std::vector<std::vector<Cyclo>> bivariate(const std::vector<Form>& polys) const {
        const int p = polys.front().p();
        const std::vector<Monomial> cols{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}};
        std::vector<std::vector<Cyclo>> rows;
        for (auto& f : polys) {
            std::vector<Cyclo> r;
            for (auto& m : cols) r.push_back(f.coeff(m));
            rows.push_back(r);
        }
        size_t piv_row = 0;
        for (size_t c = 0; c < 3 && piv_row < rows.size(); ++c) {
            size_t k = piv_row;
            while (k < rows.size() && rows[k][c].is_zero()) ++k;
            if (k == rows.size()) continue;
            std::swap(rows[k], rows[piv_row]);
            Cyclo inv = rows[piv_row][c].inv();
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == piv_row || rows[r][c].is_zero()) continue;
                Cyclo f = rows[r][c] * inv;
                for (size_t j = 0; j < cols.size(); ++j) rows[r][j] -= f * rows[piv_row][j];
            }
            ++piv_row;
        }
        std::vector<std::array<Cyclo, 3>> lin;
        for (size_t r = piv_row; r < rows.size(); ++r) {
            if (rows[r][3].is_zero() && rows[r][4].is_zero()) {
                if (!rows[r][5].is_zero()) return {};
                continue;
            }
            lin.push_back({rows[r][3], rows[r][4], rows[r][5]});
        }
        std::vector<std::vector<Cyclo>> cand;
        if (lin.empty()) {
            // no linear information: run over u and solve for v
            for (auto& u : elems) {
                std::vector<Form> sub;
                for (auto& f : polys) sub.push_back(substitute(f, {u, Cyclo(p)}, {1}));
                for (auto& v : univariate(sub)) cand.push_back({u, v[0]});
            }
        } else {
            // take the first linear relation l_u u + l_v v + l_1 = 0
            auto [lu, lv, l1] = lin.front();
            std::vector<Form> sub;
            if (!lv.is_zero()) {
                // v = -(lu u + l1)/lv
                Cyclo s = -lv.inv();
                Form vexpr = Form::linear({lu * s}) + Form::constant(p, 1, l1 * s);
                Form uexpr = Form::variable(p, 1, 0);
                for (auto& f : polys) sub.push_back(f.eval(std::vector<Form>{uexpr, vexpr}, Form(p, 1)));
                for (auto& u : univariate(sub)) cand.push_back({u[0], eval_linear(lu * s, l1 * s, u[0])});
            } else {
                Cyclo u = -l1 / lu;
                for (auto& f : polys) sub.push_back(substitute(f, {u, Cyclo(p)}, {1}));
                for (auto& v : univariate(sub)) cand.push_back({u, v[0]});
            }
        }
        return cand;
    }

    static Cyclo eval_linear(const Cyclo& c1, const Cyclo& c0, const Cyclo& x) { return c1 * x + c0; }
};

} // namespace

std::vector<Point> torsor_point_search(const std::vector<Form>& equations, int bound, size_t limit,
                                       const PrecisionConfig& cfg) {
    if (equations.empty()) throw UsageError("torsor_point_search: no equations");
    if (bound < 1) throw UsageError("torsor_point_search: the height bound must be at least 1");
    const int p = equations.front().p();
    const size_t n = equations.front().nvars();
    const size_t solve_max = n == 3 ? 1 : 2;
    auto elems = elements_up_to(p, bound, false);
    Solver solver{elems, cfg};
    std::vector<Point> out;
    std::set<Point> seen;
    const Cyclo one(p, Rational(1)), zero(p);

    for (size_t c = 0; c < n; ++c) {
        const size_t m = n - 1 - c;
        const size_t s = std::min(m, solve_max);
        const size_t nfree = m - s;
        std::vector<size_t> unknowns;
        for (size_t i = c + 1 + nfree; i < n; ++i) unknowns.push_back(i);

        auto handle = [&](const std::vector<size_t>& idx) -> bool {
            Point P(n, zero);
            P[c] = one;
            for (size_t k = 0; k < nfree; ++k) P[c + 1 + k] = elems[idx[k]];
            std::vector<std::vector<Cyclo>> sols;
            if (s == 0) {
                sols.push_back({});
            } else {
                std::vector<Form> polys;
                for (auto& F : equations) {
                    Form g = substitute(F, P, unknowns);
                    if (!g.is_zero()) polys.push_back(g);
                }
                if (polys.empty()) throw MathError("point search: a linear space lies on the model");
                sols = s == 1 ? solver.univariate(polys) : solver.bivariate(polys);
            }
            for (auto& sol : sols) {
                Point Q = P;
                for (size_t k = 0; k < s; ++k) Q[unknowns[k]] = sol[k];
                bool ok = true;
                for (auto& F : equations) ok = ok && F(Q).is_zero();
                if (!ok) continue;
                Rational h = 0;
                for (auto& x : Q) h = std::max(h, element_height(x));
                if (h > bound || !seen.insert(Q).second) continue;
                out.push_back(Q);
                if (limit && out.size() >= limit) return true;
            }
            return false;
        };

        const size_t N = elems.size();
        if (nfree == 0) {
            if (handle({})) return out;
        } else if (nfree == 1) {
            for (size_t i = 0; i < N; ++i)
                if (handle({i})) return out;
        } else if (nfree == 2) {
            for (size_t sh = 0; sh < N; ++sh) {
                for (size_t j = 0; j <= sh; ++j)
                    if (handle({sh, j})) return out;
                for (size_t i = 0; i < sh; ++i)
                    if (handle({i, sh})) return out;
            }
        } else {
            throw UsageError("torsor_point_search: too many variables");
        }
    }
    return out;
}

// ---------------------------------------------------------------- cubic invariants

std::vector<size_t> cubic_eigenspace_dims(const Cyclo& a) {
    const int p = 3;
    auto mons = monomials(3, 3);
    CMatrix M_S = shift_matrix(p, a);
    CMatrix T(mons.size(), mons.size(), Cyclo(p));
    for (size_t j = 0; j < mons.size(); ++j) {
        Form f(p, 3);
        f.add_term(mons[j], Cyclo(p, Rational(1)));
        Form g = f.apply_matrix(M_S);
        for (size_t i = 0; i < mons.size(); ++i) T(i, j) = g.coeff(mons[i]);
    }
    std::vector<size_t> dims;
    for (int k = 0; k < 3; ++k) {
        Cyclo ev = a * Cyclo::zeta(p, k);
        CMatrix S = T;
        for (size_t i = 0; i < mons.size(); ++i) S(i, i) -= ev;
        dims.push_back(mons.size() - rank(S));
    }
    return dims;
}

namespace {

// Polynomial in chart x_c = 1, as coefficients (in x_e^k) of polynomials in x_r.
std::array<UPoly, 3> split_quadric(const Form& G, size_t e, size_t r) {
    const int p = G.p();
    std::array<std::vector<Cyclo>, 3> c;
    for (auto& v : c) v.assign(3, Cyclo(p));
    for (auto& [m, v] : G.terms()) c[m[e]][m[r]] += v;
    return {UPoly(p, c[0]), UPoly(p, c[1]), UPoly(p, c[2])};
}

UPoly quad_resultant(const std::array<UPoly, 3>& A, const std::array<UPoly, 3>& B) {
    UPoly x = A[2] * B[0] - A[0] * B[2];
    UPoly y = A[2] * B[1] - A[1] * B[2];
    UPoly z = A[1] * B[0] - A[0] * B[1];
    return x * x - y * z;
}

} // namespace

std::optional<bool> cubic_nonsingular(const Form& F) {
    if (F.nvars() != 3 || F.degree() != 3) throw UsageError("cubic_nonsingular: not a ternary cubic");
    const int p = F.p();
    std::vector<Form> G;
    for (size_t i = 0; i < 3; ++i) G.push_back(F.derivative(i));
    bool all_clear = true;
    for (size_t c = 0; c < 3; ++c) {
        bool clear = false;
        for (size_t e = 0; e < 3 && !clear; ++e) {
            if (e == c) continue;
            size_t r = 3 - c - e;
            std::vector<std::array<UPoly, 3>> parts;
            for (auto& g : G) parts.push_back(split_quadric(g, e, r));
            UPoly acc(p);
            bool usable = false;
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = i + 1; j < 3; ++j) {
                    if (parts[i][2].is_zero() && parts[j][2].is_zero()) continue;
                    usable = true;
                    acc = gcd(acc, quad_resultant(parts[i], parts[j]));
                }
            if (!usable) continue;
            if (!acc.is_zero() && acc.degree() == 0) {
                clear = true;
                break;
            }
            // look for a singular point over K along the common roots
            if (acc.is_zero()) continue;
            for (auto& xr : k_roots(acc.coeffs())) {
                UPoly h(p);
                for (auto& part : parts) {
                    std::vector<Cyclo> cf;
                    for (auto& q : part) cf.push_back(q.is_zero() ? Cyclo(p) : eval_poly(q.coeffs(), xr));
                    h = gcd(h, UPoly(p, cf));
                }
                if (h.is_zero() || h.degree() < 1) continue;
                for (auto& xe : k_roots(h.coeffs())) {
                    Point P(3, Cyclo(p));
                    P[c] = Cyclo(p, Rational(1));
                    P[e] = xe;
                    P[r] = xr;
                    bool sing = true;
                    for (auto& g : G) sing = sing && g(P).is_zero();
                    if (sing) return false;
                }
            }
        }
        all_clear = all_clear && clear;
    }
    if (all_clear) return true;
    return std::nullopt;
}

Cyclo cubic_j_invariant(const Form& F, const Point& P) {
    const int p = F.p();
    if (!F(P).is_zero()) throw UsageError("cubic_j_invariant: the point is not on the cubic");
    std::vector<Cyclo> g;
    for (size_t i = 0; i < 3; ++i) g.push_back(F.derivative(i)(P));
    if (std::all_of(g.begin(), g.end(), [](const Cyclo& x) { return x.is_zero(); }))
        throw MathError("cubic_j_invariant: singular point");
    Point e1;
    for (int k = 0; k < 3 && e1.empty(); ++k) {
        Point ek(3, Cyclo(p));
        ek[k] = Cyclo(p, Rational(1));
        Point W{g[1] * ek[2] - g[2] * ek[1], g[2] * ek[0] - g[0] * ek[2], g[0] * ek[1] - g[1] * ek[0]};
        if (std::all_of(W.begin(), W.end(), [](const Cyclo& x) { return x.is_zero(); })) continue;
        if (same_point(W, P)) continue;
        e1 = W;
    }
    Point e3;
    for (int k = 0; k < 3; ++k)
        if (!g[k].is_zero()) {
            e3.assign(3, Cyclo(p));
            e3[k] = Cyclo(p, Rational(1));
            break;
        }
    CMatrix A(3, 3, Cyclo(p));
    for (int i = 0; i < 3; ++i) {
        A(i, 0) = e1[i];
        A(i, 1) = P[i];
        A(i, 2) = e3[i];
    }
    Form G = F.apply_matrix(A);
    auto co = [&](int u, int v, int w) { return G.coeff({u, v, w}); };
    if (!co(0, 3, 0).is_zero() || !co(1, 2, 0).is_zero() || !co(2, 1, 0).is_zero())
        throw MathError("cubic_j_invariant: the point is not a flex");
    Cyclo c = co(3, 0, 0), qvv = co(0, 2, 1);
    if (c.is_zero() || qvv.is_zero()) throw MathError("cubic_j_invariant: degenerate cubic");
    Cyclo e = -c / qvv;
    Cyclo inv = qvv.inv();
    Cyclo a1 = co(1, 1, 1) * inv;
    Cyclo a3 = e * co(0, 1, 2) * inv;
    Cyclo a2 = -co(2, 0, 1) * inv;
    Cyclo a4 = -e * co(1, 0, 2) * inv;
    Cyclo a6 = -e * e * co(0, 0, 3) * inv;
    Cyclo b2 = a1 * a1 + a2 * Rational(4);
    Cyclo b4 = a4 * Rational(2) + a1 * a3;
    Cyclo b6 = a3 * a3 + a6 * Rational(4);
    Cyclo b8 = a1 * a1 * a6 + a2 * a6 * Rational(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    Cyclo c4 = b2 * b2 - b4 * Rational(24);
    Cyclo disc = -b2 * b2 * b8 - b4 * b4 * b4 * Rational(8) - b6 * b6 * Rational(27) + b2 * b4 * b6 * Rational(9);
    if (disc.is_zero()) throw MathError("cubic_j_invariant: singular cubic");
    return c4 * c4 * c4 / disc;
}

Cyclo hesse_j_invariant(const Cyclo& mu) {
    const int p = mu.p();
    Cyclo k = mu * Rational(-1, 3);
    Cyclo k3 = k * k * k;
    Cyclo one(p, Rational(1));
    Cyclo den = (k3 - one).pow(3);
    if (den.is_zero()) throw MathError("hesse_j_invariant: singular member");
    return k3 * Rational(27) * (k3 + Cyclo(p, Rational(8))).pow(3) / den;
}

// ---------------------------------------------------------------- E_A

std::vector<Form> quintic_EA_forms(const Cyclo& A) {
    const int p = A.p();
    Cyclo one(p, Rational(1));
    auto q = [&](std::initializer_list<std::pair<std::pair<int, int>, Cyclo>> terms) {
        Form f(p, 5);
        for (auto& [ij, c] : terms) {
            Monomial m(5, 0);
            m[ij.first] += 1;
            m[ij.second] += 1;
            f.add_term(m, c);
        }
        return f;
    };
    return {
        q({{{0, 0}, one}, {{2, 3}, -one}, {{1, 4}, one}}),
        q({{{1, 1}, one}, {{0, 2}, -one}, {{3, 4}, A}}),
        q({{{2, 2}, one}, {{1, 3}, -one}, {{0, 4}, -A}}),
        q({{{3, 3}, one}, {{0, 1}, -one}, {{2, 4}, -one}}),
        q({{{4, 4}, A}, {{1, 2}, one}, {{0, 3}, -one}}),
    };
}

bool quintic_EA_matches(const Cyclo& l) {
    const int p = l.p();
    Cyclo A = (-l).pow(5);
    CMatrix D(5, 5, Cyclo(p));
    D(0, 0) = Cyclo(p, Rational(1));
    D(1, 1) = -l;
    D(2, 2) = l;
    D(3, 3) = Cyclo(p, Rational(-1));
    D(4, 4) = l.pow(-2);
    std::vector<Form> moved;
    for (auto& S : quintic_EA_forms(A)) moved.push_back(S.apply_matrix(D));
    return in_span(quintic_forms(l), moved);
}

} // namespace descent
