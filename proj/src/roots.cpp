#include "descent/roots.hpp"
#include "descent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <set>

namespace descent {

PrecisionConfig PrecisionConfig::from_env() {
    PrecisionConfig cfg;
    if (const char* s = std::getenv("DESCENT_KIT_MAX_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end == s || *end != '\0' || v < 64)
            throw UsageError("DESCENT_KIT_MAX_PRECISION must be an integer >= 64");
        cfg.max_bits = static_cast<unsigned>(v);
        cfg.start_bits = std::min(cfg.start_bits, cfg.max_bits);
    }
    return cfg;
}

EmbeddingApprox embed_approx(const Cyclo& x, int j, unsigned bits) {
    const int p = x.p();
    BigComplex s(bits);
    for (int i = 0; i < p - 1; ++i) {
        if (x[i] == 0) continue;
        BigFloat c(x[i], bits);
        s = s + root_of_unity(static_cast<long>(i) * j, p, bits) * c;
    }
    return {s, bits};
}

Cyclo eval_poly(const std::vector<Cyclo>& coeffs, const Cyclo& x) {
    Cyclo r(x.p());
    for (size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
    return r;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

// log2(2^a + 2^b)
double log2_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    double m = std::max(a, b), lo = std::min(a, b);
    return m + std::log2(1.0 + std::exp2(lo - m));
}

// Numeric backends for the root iteration.
struct DoubleBackend {
    using C = std::complex<double>;
    unsigned bits = 53;
    C make(double re, double im) const { return {re, im}; }
    C embed(const Cyclo& x, int j) const { return x.embed(j); }
    static double log2abs(const C& z) {
        double a = std::abs(z);
        return a == 0 ? kNegInf : std::log2(a);
    }
    static bool finite(const C& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
    C unity(long k, long n) const {
        double ang = 2.0 * M_PI * static_cast<double>(((k % n) + n) % n) / static_cast<double>(n);
        return {std::cos(ang), std::sin(ang)};
    }
};

struct BigBackend {
    using C = BigComplex;
    unsigned bits;
    C make(double re, double im) const { return {BigFloat(re, bits), BigFloat(im, bits)}; }
    C embed(const Cyclo& x, int j) const { return embed_approx(x, j, bits + 16).value; }
    static double log2abs(const C& z) { return z.log2abs(); }
    static bool finite(const C& z) { return z.finite(); }
    C unity(long k, long n) const { return root_of_unity(k, n, bits); }
};

template <class B>
typename B::C horner(const B& be, const std::vector<typename B::C>& c, const typename B::C& z,
                     typename B::C* deriv) {
    using C = typename B::C;
    C f = be.make(0, 0), d = be.make(0, 0);
    for (size_t i = c.size(); i-- > 0;) {
        if (deriv) d = d * z + f;
        f = f * z + c[i];
    }
    if (deriv) *deriv = d;
    return f;
}

template <class B>
struct Approx {
    std::vector<typename B::C> z;
    double log2_err = kPosInf;  // bound on distance from any true root to its approximation
};

// Aberth iteration followed by the Braess-Hadeler inclusion: the union of
// the discs D(z_k, n|W_k|) contains every root, W_k the Weierstrass
// correction.  The returned bound 2*sum r_k covers any root's distance to
// the nearest approximation in its component.
// scale[i], when given, is log2 of a bound on the inputs c[i] was computed
// from; its rounding error enters the bound like evaluation rounding.
template <class B>
Approx<B> approximate(const B& be, const std::vector<typename B::C>& c, std::vector<typename B::C> z,
                      const std::vector<double>& scale = {}) {
    using C = typename B::C;
    const size_t n = c.size() - 1;
    const double target = -static_cast<double>(be.bits) + 8;
    const int max_iter = 200 + static_cast<int>(be.bits);
    for (int it = 0; it < max_iter; ++it) {
        double worst = kNegInf;
        for (size_t k = 0; k < n; ++k) {
            C d = be.make(0, 0);
            C f = horner(be, c, z[k], &d);
            if (B::log2abs(f) == kNegInf) continue;
            if (B::log2abs(d) == kNegInf) {
                z[k] = z[k] + be.make(1e-3 * (k + 1), 1e-3);
                worst = kPosInf;
                continue;
            }
            C ratio = f / d;
            C s = be.make(0, 0);
            for (size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                C diff = z[k] - z[j];
                if (B::log2abs(diff) == kNegInf) diff = be.make(1e-12, 1e-12);
                s = s + be.make(1, 0) / diff;
            }
            C w = ratio / (be.make(1, 0) - ratio * s);
            if (!B::finite(w)) {
                worst = kPosInf;
                continue;
            }
            z[k] = z[k] - w;
            double rel = B::log2abs(w) - std::max(0.0, B::log2abs(z[k]));
            worst = std::max(worst, rel);
        }
        if (worst < target) break;
    }

    Approx<B> out;
    double total = kNegInf;
    const double log2n = std::log2(static_cast<double>(n));
    for (size_t k = 0; k < n; ++k) {
        if (!B::finite(z[k])) return out;
        C f = horner(be, c, z[k], nullptr);
        // rounding in the evaluation: |c_i| |z|^i summed, scaled by 2^-bits
        double lz = B::log2abs(z[k]);
        double mag = kNegInf;
        for (size_t i = 0; i <= n; ++i) {
            double lc = B::log2abs(c[i]);
            if (i < scale.size()) lc = std::max(lc, scale[i]);
            if (lc == kNegInf) continue;
            mag = log2_add(mag, lc + (lz == kNegInf ? (i == 0 ? 0 : kNegInf) : lz * static_cast<double>(i)));
        }
        double lf = log2_add(B::log2abs(f), mag - static_cast<double>(be.bits) + 6);
        double den = B::log2abs(c[n]);
        for (size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            den += B::log2abs(z[k] - z[j]);
        }
        if (!std::isfinite(den)) return out;
        total = log2_add(total, log2n + lf - den);
    }
    out.z = std::move(z);
    out.log2_err = total + 1;
    return out;
}

struct Poly {
    std::vector<Cyclo> c;  // monic, degree >= 2, nonzero constant term
    Integer D;             // D * root is integral for every root in K
};

// Fujiwara bound on root moduli, as log2.
double root_bound_log2(const std::vector<std::complex<double>>& c) {
    const size_t n = c.size() - 1;
    double lead = std::abs(c[n]);
    double best = kNegInf;
    for (size_t k = 1; k <= n; ++k) {
        double a = std::abs(c[n - k]);
        if (a == 0) continue;
        double v = std::log2(a / lead) / static_cast<double>(k);
        if (k == n) v -= 1.0 / static_cast<double>(n);
        best = std::max(best, v);
    }
    return best == kNegInf ? 0.0 : best + 1.0;
}

template <class B>
std::vector<typename B::C> circle_start(const B& be, double log2r, size_t n) {
    std::vector<typename B::C> z;
    double r = std::exp2(std::clamp(log2r, -900.0, 900.0));
    for (size_t k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.7;
        z.push_back(be.make(r * std::cos(ang), r * std::sin(ang)));
    }
    return z;
}

// Outcome of one attempt at a fixed precision.
struct Attempt {
    bool complete = false;
    std::vector<Cyclo> roots;
    std::vector<std::vector<std::complex<double>>> seeds;  // approximations per embedding
};

// Reconstructs candidate coefficient vectors from embedding values of the
// embeddings 1..(p-1)/2 (the rest are complex conjugates) and keeps those
// that verify exactly.
template <class B>
Attempt attempt(const B& be, const Poly& poly, const std::vector<std::vector<std::complex<double>>>& seeds) {
    using C = typename B::C;
    const int p = poly.c[0].p();
    const int half = (p - 1) / 2;
    const size_t n = poly.c.size() - 1;
    Attempt res;

    std::vector<double> scale;
    for (auto& x : poly.c) {
        double sum = 0;
        for (auto& q : x.coeffs()) sum += std::fabs(q.get_d());
        scale.push_back(sum == 0 ? kNegInf : std::log2(sum));
    }

    std::vector<Approx<B>> ap;
    double err_sum = kNegInf;
    double max_mag = 0;
    for (int j = 1; j <= half; ++j) {
        std::vector<C> cj;
        std::vector<std::complex<double>> cd;
        for (auto& x : poly.c) {
            cj.push_back(be.embed(x, j));
            cd.push_back(x.embed(j));
        }
        std::vector<C> start;
        if (seeds.size() == static_cast<size_t>(half) && seeds[j - 1].size() == n) {
            for (auto& s : seeds[j - 1]) start.push_back(be.make(s.real(), s.imag()));
        } else {
            start = circle_start(be, root_bound_log2(cd), n);
        }
        ap.push_back(approximate(be, cj, start, scale));
        if (ap.back().z.empty()) return res;
        err_sum = log2_add(err_sum, ap.back().log2_err);
        std::vector<std::complex<double>> sd;
        for (auto& z : ap.back().z) {
            double lz = B::log2abs(z);
            max_mag = std::max(max_mag, lz);
            if constexpr (std::is_same_v<C, std::complex<double>>) sd.push_back(z);
            else sd.push_back({z.re.to_double(), z.im.to_double()});
        }
        res.seeds.push_back(sd);
    }
    // |delta c_i| <= (2/p) sum_{j=1}^{p-1} |delta sigma_j|, conjugate pairs counted twice
    const double log2D = std::log2(poly.D.get_d()) + 0.0;
    double scaled_err = log2D + std::log2(4.0 / p) + err_sum;
    double slack = log2D + max_mag + std::log2(static_cast<double>(p)) - static_cast<double>(be.bits) + 6;
    double tol_log2 = log2_add(scaled_err, slack);
    res.complete = tol_log2 < -2.0;
    double tol = std::exp2(std::min(tol_log2, 10.0));
    if (!res.complete) return res;

    std::vector<C> w(p), winv(p);
    for (int k = 0; k < p; ++k) {
        w[k] = be.unity(k, p);
        winv[k] = be.unity(-k, p);
    }
    C Dc = be.make(0, 0);
    if constexpr (std::is_same_v<C, std::complex<double>>) Dc = C(poly.D.get_d(), 0);
    else Dc = C(BigFloat(Rational(poly.D), be.bits), BigFloat(be.bits));

    std::set<Cyclo> found;
    std::vector<size_t> idx(half, 0);
    while (true) {
        std::vector<C> sig(p, be.make(0, 0));
        for (int j = 1; j <= half; ++j) {
            sig[j] = ap[j - 1].z[idx[j - 1]];
            if constexpr (std::is_same_v<C, std::complex<double>>) sig[p - j] = std::conj(sig[j]);
            else sig[p - j] = sig[j].conj();
        }
        C s = be.make(0, 0);
        for (int j = 1; j < p; ++j) s = s - w[j] * sig[j];
        std::vector<Rational> coeff(p - 1);
        bool ok = true;
        for (int i = 0; i < p - 1 && ok; ++i) {
            C acc = s;
            for (int j = 1; j < p; ++j) acc = acc + winv[(static_cast<long>(i) * j) % p] * sig[j];
            acc = acc * Dc;
            Integer nearest;
            double dist;
            if constexpr (std::is_same_v<C, std::complex<double>>) {
                double v = acc.real() / p;
                nearest = Integer(std::nearbyint(v));
                dist = std::fabs(v - std::nearbyint(v));
            } else {
                BigFloat v = acc.re / BigFloat(static_cast<double>(p), be.bits);
                nearest = v.round();
                dist = (v - BigFloat(Rational(nearest), be.bits)).log2abs();
                dist = std::exp2(std::max(dist, -1000.0));
            }
            if (dist > tol + 1e-300) ok = false;
            coeff[i] = Rational(nearest, poly.D);
            coeff[i].canonicalize();
        }
        if (ok) {
            Cyclo cand(p, coeff);
            if (!found.count(cand) && eval_poly(poly.c, cand).is_zero()) found.insert(cand);
        }
        int pos = 0;
        while (pos < half && ++idx[pos] == n) idx[pos++] = 0;
        if (pos == half) break;
    }
    res.roots.assign(found.begin(), found.end());
    return res;
}

} // namespace

std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs) {
    std::vector<std::complex<double>> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0) c.pop_back();
    if (c.size() < 2) return {};
    DoubleBackend be;
    auto ap = approximate(be, c, circle_start(be, root_bound_log2(c), c.size() - 1));
    return ap.z;
}

std::vector<Cyclo> candidates_from_embeddings(int p, const std::vector<std::vector<std::complex<double>>>& values,
                                              const Integer& D, double tol) {
    const int half = (p - 1) / 2;
    std::vector<Cyclo> out;
    if (static_cast<int>(values.size()) != half) return out;
    for (auto& v : values)
        if (v.empty()) return out;
    DoubleBackend be;
    std::vector<std::complex<double>> w(p), winv(p);
    for (int k = 0; k < p; ++k) {
        w[k] = be.unity(k, p);
        winv[k] = be.unity(-k, p);
    }
    const double Dd = D.get_d();
    std::vector<size_t> idx(half, 0);
    while (true) {
        std::vector<std::complex<double>> sig(p);
        for (int j = 1; j <= half; ++j) {
            sig[j] = values[j - 1][idx[j - 1]];
            sig[p - j] = std::conj(sig[j]);
        }
        std::complex<double> s = 0;
        for (int j = 1; j < p; ++j) s -= w[j] * sig[j];
        std::vector<Rational> coeff(p - 1);
        bool ok = true;
        for (int i = 0; i < p - 1 && ok; ++i) {
            std::complex<double> acc = s;
            for (int j = 1; j < p; ++j) acc += winv[(static_cast<long>(i) * j) % p] * sig[j];
            double v = acc.real() * Dd / p;
            double r = std::nearbyint(v);
            if (!(std::fabs(v - r) <= tol)) ok = false;
            else coeff[i] = Rational(Integer(r), D);
            if (ok) coeff[i].canonicalize();
        }
        if (ok) out.emplace_back(p, coeff);
        int pos = 0;
        while (pos < half && ++idx[pos] == values[pos].size()) idx[pos++] = 0;
        if (pos == half) break;
    }
    return out;
}

std::vector<Cyclo> k_roots(const std::vector<Cyclo>& coeffs_in, const PrecisionConfig& cfg) {
    std::vector<Cyclo> c = coeffs_in;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) throw UsageError("k_roots: zero polynomial");
    const int p = c[0].p();
    std::set<Cyclo> out;
    // factor out powers of X
    size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    if (low > 0) {
        out.insert(Cyclo(p));
        c.erase(c.begin(), c.begin() + static_cast<long>(low));
    }
    if (c.size() == 1) return {out.begin(), out.end()};
    Cyclo lead_inv = c.back().inv();
    for (auto& x : c) x *= lead_inv;
    if (c.size() == 2) {
        out.insert(-c[0]);
        return {out.begin(), out.end()};
    }
    Poly poly{c, 1};
    for (auto& x : c) mpz_lcm(poly.D.get_mpz_t(), poly.D.get_mpz_t(), denominator(x).get_mpz_t());

    Attempt fast = attempt(DoubleBackend{}, poly, {});
    if (fast.complete) {
        out.insert(fast.roots.begin(), fast.roots.end());
        return {out.begin(), out.end()};
    }
    // precision needed to resolve D * coefficients, plus headroom
    double need = std::log2(poly.D.get_d()) + 96;
    for (auto& s : fast.seeds)
        for (auto& z : s)
            if (std::isfinite(std::abs(z)) && std::abs(z) > 1) need = std::max(need, std::log2(poly.D.get_d()) + std::log2(std::abs(z)) + 96);
    unsigned bits = std::max<unsigned>(cfg.start_bits, static_cast<unsigned>(std::max(0.0, need)));
    auto seeds = fast.seeds;
    while (bits <= cfg.max_bits) {
        Attempt a = attempt(BigBackend{bits}, poly, seeds);
        if (a.complete) {
            out.insert(a.roots.begin(), a.roots.end());
            return {out.begin(), out.end()};
        }
        if (!a.seeds.empty()) seeds = a.seeds;
        if (bits == cfg.max_bits) break;
        bits = std::min(cfg.max_bits, bits * 2);
    }
    throw Inconclusive("root isolation inconclusive at the precision ceiling of " +
                       std::to_string(cfg.max_bits) + " bits");
}

std::optional<Cyclo> is_pth_power(const Cyclo& x, const PrecisionConfig& cfg) {
    if (x.is_zero()) throw UsageError("is_pth_power: zero has no class");
    const int p = x.p();
    if (x.is_one()) return Cyclo(p, Rational(1));
    std::vector<Cyclo> poly(p + 1, Cyclo(p));
    poly[0] = -x;
    poly[p] = Cyclo(p, Rational(1));
    auto roots = k_roots(poly, cfg);
    if (roots.empty()) return std::nullopt;
    return *std::min_element(roots.begin(), roots.end(), simpler);
}

} // namespace descent
