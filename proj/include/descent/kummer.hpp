#pragma once

#include "descent/cyclo.hpp"
#include "descent/roots.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace descent {

// L = K[alpha]/(alpha^p - a).
class KummerAlgebra {
public:
    static std::shared_ptr<const KummerAlgebra> make(const Cyclo& a, const PrecisionConfig& cfg = {});

    int p() const { return a_.p(); }
    const Cyclo& a() const { return a_; }
    bool is_split() const { return root_.has_value(); }
    // c with c^p = a when split.
    const std::optional<Cyclo>& root() const { return root_; }

    bool same(const KummerAlgebra& o) const { return a_ == o.a_; }

private:
    KummerAlgebra(Cyclo a, std::optional<Cyclo> root) : a_(std::move(a)), root_(std::move(root)) {}
    Cyclo a_;
    std::optional<Cyclo> root_;
};

using AlgebraPtr = std::shared_ptr<const KummerAlgebra>;

class KummerElement {
public:
    KummerElement() = default;
    explicit KummerElement(AlgebraPtr alg);  // zero
    KummerElement(AlgebraPtr alg, std::vector<Cyclo> coeffs);
    KummerElement(AlgebraPtr alg, const Cyclo& c);
    static KummerElement alpha(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    int p() const { return alg_->p(); }
    const std::vector<Cyclo>& coeffs() const { return c_; }
    const Cyclo& operator[](size_t i) const { return c_[i]; }

    bool is_zero() const;
    // True when all alpha-coefficients beyond the constant vanish.
    bool in_base() const;

    KummerElement operator-() const;
    friend KummerElement operator+(const KummerElement& x, const KummerElement& y);
    friend KummerElement operator-(const KummerElement& x, const KummerElement& y) { return x + (-y); }
    friend KummerElement operator*(const KummerElement& x, const KummerElement& y);
    friend KummerElement operator*(KummerElement x, const Cyclo& c);
    friend KummerElement operator*(const Cyclo& c, KummerElement x) { return std::move(x) * c; }
    friend KummerElement operator/(const KummerElement& x, const KummerElement& y) { return x * y.inv(); }
    friend bool operator==(const KummerElement& x, const KummerElement& y);
    friend bool operator!=(const KummerElement& x, const KummerElement& y) { return !(x == y); }

    // Throws NonUnit when the norm vanishes.
    KummerElement inv() const;
    KummerElement pow(long e) const;
    // sigma^k: alpha -> z^k alpha, K fixed.
    KummerElement sigma(long k) const;
    Cyclo norm() const;
    Cyclo trace() const;

private:
    void check_same(const KummerElement& o) const;
    AlgebraPtr alg_;
    std::vector<Cyclo> c_;
};

inline KummerElement one_like(const KummerElement& x) {
    return KummerElement(x.algebra(), Cyclo(x.p(), Rational(1)));
}

inline KummerElement sigma(const KummerElement& x, long k) { return x.sigma(k); }

// p = 3: {u} with u = beta / sigma^2(beta).
// p = 5: {u1, u2} with u1 = sigma^4(beta)/beta,
//        u2 = sigma^3(beta) sigma^4(beta) / (beta sigma(beta)).
std::vector<KummerElement> u_invariants(const KummerElement& beta);

struct NormSearchOptions {
    int height_bound = 5;
    PrecisionConfig precision = {};
    // Skip the closed form for split cubic algebras (used to compare both).
    bool use_closed_form = true;
};

// Some beta with norm(beta) = b.  The coefficients beta_1..beta_{p-1} run
// over vectors n/d with integral numerators |n_i| <= H and 1 <= d <= H, by
// increasing H; beta_0 is then solved exactly from the norm polynomial.
// Nothing returned means no solution within the bound.
std::optional<KummerElement> solve_norm(const AlgebraPtr& alg, const Cyclo& b, const NormSearchOptions& opt = {});

// Closed form for a split cubic algebra: with c^3 = a,
// beta = (b+2)/3 + (b-1)/(3c) alpha + (b-1)/(3c^2) alpha^2.
std::optional<KummerElement> split_cube_solution(const AlgebraPtr& alg, const Cyclo& b);

} // namespace descent
