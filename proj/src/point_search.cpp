#include "descent/errors.hpp"
#include "descent/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace descent {

namespace {

long value_at(int k) { return k == 0 ? 0 : (k % 2 ? (k + 1) / 2 : -(k / 2)); }

Integer integral_height(const Point& P) {
    Integer h = 0;
    for (auto& c : P)
        for (auto& q : c.coeffs()) h = std::max<Integer>(h, abs(q.get_num()));
    return h;
}

Rational point_height(const Point& P) {
    Rational h = 0;
    for (auto& c : P) h = std::max(h, element_height(c));
    return h;
}

using Found = std::map<Point, Rational>;

void record(Found& out, const Point& P, const Rational& h) {
    Point n = normalize(P);
    auto it = out.find(n);
    if (it == out.end() || h < it->second) out[n] = h;
}

// Runs body(i, found) for i in [0, n) over the given number of threads and
// merges the results keeping the smallest search height per point.
template <class Body>
Found parallel_collect(size_t n, int threads, Body body) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(std::max<size_t>(n, 1))));
    std::vector<Found> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto run = [&](int w) {
        try {
            for (size_t i = w; i < n; i += threads) body(i, parts[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Found all;
    for (auto& part : parts)
        for (auto& [P, h] : part) record(all, P, h);
    return all;
}

std::vector<Point> ordered(const Found& found) {
    std::vector<std::pair<Rational, Point>> v;
    for (auto& [P, h] : found) v.push_back({h, P});
    std::sort(v.begin(), v.end(), [](auto& x, auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });
    std::vector<Point> out;
    for (auto& e : v) out.push_back(e.second);
    return out;
}

std::vector<Point> hesse_search(const Curve& E, int bound, int threads, const PrecisionConfig& cfg) {
    const int p = E.p;
    auto elems = elements_up_to(p, bound, true);
    Found found = parallel_collect(elems.size(), threads, [&](size_t i, Found& out) {
        const Cyclo& X = elems[i];
        Cyclo X3 = X * X * X;
        for (const Cyclo& Y : elems) {
            if (X.is_zero() && Y.is_zero()) continue;
            // Z^3 + lambda X Y Z + X^3 + Y^3 = 0
            std::vector<Cyclo> poly{X3 + Y * Y * Y, E.lambda * X * Y, Cyclo(p), Cyclo(p, Rational(1))};
            for (auto& Z : k_roots(poly, cfg)) {
                if (denominator(Z) != 1) continue;
                Point P{X, Y, Z};
                Integer h = integral_height(P);
                if (h <= bound) record(out, P, Rational(h));
            }
        }
    });
    return ordered(found);
}

std::vector<Point> quintic_search(const Curve& E, int bound, int threads, const PrecisionConfig& cfg) {
    const int p = E.p;
    const Cyclo& lam = E.lambda;
    const Cyclo one(p, Rational(1)), zero(p);
    const Cyclo lam2 = lam * lam, lam4 = lam2 * lam2;
    auto elems = elements_up_to(p, bound, false);
    auto accept = [&](Found& out, const Point& P) {
        if (!on_curve(E, P)) return;
        Rational h = point_height(normalize(P));
        if (h <= bound) record(out, P, h);
    };
    Found found = parallel_collect(elems.size(), threads, [&](size_t i, Found& out) {
        const Cyclo& x1 = elems[i];
        for (const Cyclo& x4 : elems) {
            // chart x0 = 1: q1 and q4 are linear in (x2, x3)
            //   x2 - lam^2 x4 x3 = lam x1^2,  -lam^2 x1 x2 + x3 = lam x4^2
            Cyclo r1 = lam * x1 * x1, r4 = lam * x4 * x4;
            Cyclo det = one - lam4 * x1 * x4;
            if (!det.is_zero()) {
                Cyclo dinv = det.inv();
                Cyclo x2 = (r1 + lam2 * x4 * r4) * dinv;
                Cyclo x3 = (r4 + lam2 * x1 * r1) * dinv;
                accept(out, {one, x1, x2, x3, x4});
            } else {
                // x2 = r1 + lam^2 x4 x3 into q0: lam^4 x4 x3^2 + lam^3 x1^2 x3 + lam - x1 x4 = 0
                std::vector<Cyclo> poly{lam - x1 * x4, lam2 * lam * x1 * x1, lam4 * x4};
                for (auto& x3 : k_roots(poly, cfg)) accept(out, {one, x1, r1 + lam2 * x4 * x3, x3, x4});
            }
        }
        // chart x0 = 0, x1 = 1: q4 and q1 force x2 = -x4^2/lam, x3 = -1/(lam x4)
        const Cyclo& x4 = elems[i];
        if (!x4.is_zero()) accept(out, {zero, one, -(x4 * x4) * lam.inv(), -(lam * x4).inv(), x4});
        if (i == 0) {
            // x0 = x1 = 0 forces the remaining coordinates one by one
            accept(out, {zero, zero, one, zero, zero});
            accept(out, {zero, zero, zero, one, zero});
            accept(out, {zero, zero, zero, zero, one});
        }
    });
    return ordered(found);
}

} // namespace

std::vector<Cyclo> elements_up_to(int p, int bound, bool integral_only) {
    check_prime(p);
    const size_t m = p - 1;
    std::vector<Cyclo> out{Cyclo(p)};
    for (long h = 1; h <= bound; ++h) {
        for (long d = 1; d <= (integral_only ? 1 : h); ++d) {
            std::vector<int> idx(m, 0);
            const int nvals = static_cast<int>(2 * h + 1);
            while (true) {
                long mx = d;
                unsigned long g = d;
                std::vector<Rational> c(m);
                for (size_t i = 0; i < m; ++i) {
                    long n = value_at(idx[i]);
                    mx = std::max(mx, std::labs(n));
                    g = std::gcd(g, static_cast<unsigned long>(std::labs(n)));
                    c[i] = Rational(Integer(n), Integer(d));
                    c[i].canonicalize();
                }
                bool nonzero = std::any_of(idx.begin(), idx.end(), [](int k) { return k != 0; });
                if (mx == h && g == 1 && nonzero) out.emplace_back(p, c);
                size_t pos = 0;
                while (pos < m && ++idx[pos] == nvals) idx[pos++] = 0;
                if (pos == m) break;
            }
        }
    }
    return out;
}

std::vector<Point> point_search(const Curve& E, int bound, int threads, const PrecisionConfig& cfg) {
    if (bound < 1) throw UsageError("point_search: the height bound must be at least 1");
    return E.p == 3 ? hesse_search(E, bound, threads, cfg) : quintic_search(E, bound, threads, cfg);
}

} // namespace descent
