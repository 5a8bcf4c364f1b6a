#pragma once

#include "descent/rational.hpp"

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace descent {

// An element c_0 + c_1 z + ... + c_{p-2} z^{p-2} of Q(z), z a primitive
// p-th root of unity, p in {3, 5}.  The power basis stops at z^{p-2}, so
// representations are unique.
class Cyclo {
public:
    Cyclo() = default;  // p == 0: placeholder, not usable in arithmetic
    explicit Cyclo(int p);
    Cyclo(int p, const Rational& r);
    Cyclo(int p, long r) : Cyclo(p, Rational(r)) {}
    Cyclo(int p, std::vector<Rational> coeffs);

    // z^k for any integer k.
    static Cyclo zeta(int p, long k = 1);
    // Reduces a coefficient vector on z^0..z^{m} (any length) modulo Phi_p.
    static Cyclo from_redundant(int p, const std::vector<Rational>& c);

    int p() const { return p_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](size_t i) const { return c_[i]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);
    Cyclo& operator*=(const Rational& r);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend Cyclo operator*(Cyclo a, const Rational& r) { return a *= r; }
    friend Cyclo operator*(const Rational& r, Cyclo a) { return a *= r; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
    // Arbitrary but fixed total order, used for deterministic output.
    friend bool operator<(const Cyclo& a, const Cyclo& b);

    Cyclo inv() const;
    Cyclo pow(long e) const;
    // z -> z^j, j coprime to p.
    Cyclo galois(long j) const;
    Rational norm() const;
    Rational trace() const;

    // Image under the embedding z -> exp(2 pi i j / p).
    std::complex<double> embed(int j) const;

    std::string str() const;

private:
    void check_same(const Cyclo& o) const;
    int p_ = 0;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& x);

void check_prime(int p);

// max(|n_i|, d) after writing x = (n_0 + n_1 z + ...)/d with d minimal;
// zero has height 0.
Rational element_height(const Cyclo& x);

// Common denominator of the coefficients.
Integer denominator(const Cyclo& x);

inline Cyclo galois_auto(long j, const Cyclo& x) { return x.galois(j); }

// Preference order for choosing among equivalent answers: smaller height,
// then fewer nonzero coefficients, then larger in the Cyclo order.
bool simpler(const Cyclo& a, const Cyclo& b);

inline Cyclo one_like(const Cyclo& x) { return Cyclo(x.p(), Rational(1)); }

} // namespace descent
