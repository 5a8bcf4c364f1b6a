#include "descent/errors.hpp"
#include "descent/kummer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace descent {

namespace {

using cd = std::complex<double>;

// Exact coefficients of N(X + r) - b, r = sum_{i>=1} r_i alpha^i.
std::vector<Cyclo> exact_norm_poly(const KummerElement& r, const Cyclo& b) {
    const int p = r.p();
    const auto& alg = r.algebra();
    std::vector<KummerElement> poly{KummerElement(alg, Cyclo(p, Rational(1)))};
    for (int k = 0; k < p; ++k) {
        KummerElement s = r.sigma(k);
        std::vector<KummerElement> next(poly.size() + 1, KummerElement(alg));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] + poly[i] * s;
        }
        poly = std::move(next);
    }
    std::vector<Cyclo> out;
    for (auto& c : poly) {
        if (!c.in_base()) throw MathError("internal: norm polynomial left the base field");
        out.push_back(c[0]);
    }
    out[0] -= b;
    return out;
}

struct Embedded {
    std::vector<cd> zeta_pow;  // omega^{j t}
    cd alpha;                  // a chosen p-th root of the image of a
    cd b;
};

} // namespace

std::optional<KummerElement> solve_norm(const AlgebraPtr& alg, const Cyclo& b, const NormSearchOptions& opt) {
    const int p = alg->p();
    if (b.is_zero()) throw UsageError("solve_norm: b must be nonzero");
    if (b.p() != p) throw UsageError("solve_norm: b over the wrong field");
    if (opt.use_closed_form)
        if (auto s = split_cube_solution(alg, b)) return s;

    const int half = (p - 1) / 2;
    std::vector<Embedded> emb;
    for (int j = 1; j <= half; ++j) {
        Embedded e;
        for (int t = 0; t < p; ++t) {
            double ang = 2.0 * M_PI * static_cast<double>((t * j) % p) / p;
            e.zeta_pow.push_back({std::cos(ang), std::sin(ang)});
        }
        e.alpha = std::pow(alg->a().embed(j), 1.0 / p);
        e.b = b.embed(j);
        emb.push_back(e);
    }
    const Integer den_a = denominator(alg->a());
    const Integer den_b = denominator(b);

    const size_t m = static_cast<size_t>((p - 1) * (p - 1));  // numerators of beta_1..beta_{p-1}
    auto pick = [](const std::vector<KummerElement>& sols) {
        return *std::min_element(sols.begin(), sols.end(),
                                 [](const KummerElement& x, const KummerElement& y) { return simpler(x[0], y[0]); });
    };

    auto try_rest = [&](const std::vector<long>& n, long d) -> std::optional<KummerElement> {
        std::vector<Cyclo> coeffs(p, Cyclo(p));
        for (int i = 1; i < p; ++i) {
            std::vector<Rational> c(p - 1);
            for (int t = 0; t < p - 1; ++t) {
                c[t] = Rational(Integer(n[(i - 1) * (p - 1) + t]), Integer(d));
                c[t].canonicalize();
            }
            coeffs[i] = Cyclo(p, c);
        }
        KummerElement rest(alg, coeffs);
        Integer D = 1;
        for (int i = 0; i < p; ++i) D *= d;
        for (int i = 0; i < p - 1; ++i) D *= den_a;
        D *= den_b;

        // roots of the embedded norm polynomial, one list per embedding
        std::vector<std::vector<cd>> vals;
        double mag = 0;
        for (auto& e : emb) {
            std::vector<cd> beta_i(p, 0.0);
            for (int i = 1; i < p; ++i) {
                cd s = 0;
                for (int t = 0; t < p - 1; ++t) s += static_cast<double>(n[(i - 1) * (p - 1) + t]) * e.zeta_pow[t];
                beta_i[i] = s / static_cast<double>(d);
            }
            std::vector<cd> poly{1.0};
            for (int k = 0; k < p; ++k) {
                cd rho = 0;
                cd ak = e.alpha * e.zeta_pow[k % p];  // sigma^k acts as alpha -> omega^{jk} alpha
                cd apow = 1;
                for (int i = 1; i < p; ++i) {
                    apow *= ak;
                    rho += beta_i[i] * apow;
                }
                std::vector<cd> next(poly.size() + 1, 0.0);
                for (size_t i = 0; i < poly.size(); ++i) {
                    next[i + 1] += poly[i];
                    next[i] += poly[i] * rho;
                }
                poly = std::move(next);
            }
            poly[0] -= e.b;
            auto z = complex_roots(poly);
            for (auto& r : z) mag = std::max(mag, std::abs(r));
            vals.push_back(std::move(z));
        }
        std::vector<KummerElement> sols;
        if (mag * D.get_d() < 1e9) {
            for (auto& c0 : candidates_from_embeddings(p, vals, D, 1e-5)) {
                KummerElement beta = rest + KummerElement(alg, c0);
                if (beta.norm() == b) sols.push_back(beta);
            }
        } else {
            // too large for the double screen: solve exactly
            for (auto& c0 : k_roots(exact_norm_poly(rest, b), opt.precision))
                sols.push_back(rest + KummerElement(alg, c0));
        }
        if (sols.empty()) return std::nullopt;
        return pick(sols);
    };

    // value order 0, 1, -1, 2, -2, ...
    auto value_at = [](int k) -> long { return k == 0 ? 0 : (k % 2 ? (k + 1) / 2 : -(k / 2)); };
    const int H = std::max(0, opt.height_bound);
    if (H == 0) return try_rest(std::vector<long>(m, 0), 1);
    for (long h = 1; h <= H; ++h) {
        for (long d = 1; d <= h; ++d) {
            std::vector<int> idx(m, 0);
            const int nvals = static_cast<int>(2 * h + 1);
            while (true) {
                std::vector<long> n(m);
                long mx = d;
                Integer g = d;
                for (size_t i = 0; i < m; ++i) {
                    n[i] = value_at(idx[i]);
                    mx = std::max(mx, std::labs(n[i]));
                    mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(std::labs(n[i])));
                }
                if (mx == h && g == 1)
                    if (auto s = try_rest(n, d)) return s;
                size_t pos = 0;
                while (pos < m && ++idx[pos] == nvals) idx[pos++] = 0;
                if (pos == m) break;
            }
        }
    }
    return std::nullopt;
}

} // namespace descent
