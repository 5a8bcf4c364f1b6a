#pragma once

#include "descent/rational.hpp"

#include <mpfr.h>
#include <string>

namespace descent {

// RAII wrapper around mpfr_t.  Results of binary operations take the larger
// precision of the operands; rounding is to nearest.
class BigFloat {
public:
    explicit BigFloat(unsigned bits = 128);
    BigFloat(double v, unsigned bits);
    BigFloat(const Rational& q, unsigned bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // log2 |x|, -infinity for zero; safe far outside the double range.
    double log2abs() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool finite() const { return mpfr_number_p(v_) != 0; }
    // Nearest integer.
    Integer round() const;
    std::string str(int digits = 20) const;

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

    static BigFloat pi(unsigned bits);
    static BigFloat cos(const BigFloat& x);
    static BigFloat sin(const BigFloat& x);
    static BigFloat hypot(const BigFloat& x, const BigFloat& y);
    static BigFloat abs(const BigFloat& x);

private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;
    explicit BigComplex(unsigned bits = 128) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    unsigned bits() const { return re.bits(); }
    BigFloat abs() const { return BigFloat::hypot(re, im); }
    double log2abs() const;
    bool finite() const { return re.finite() && im.finite(); }
    BigComplex conj() const { return BigComplex(re, -im); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
};

// exp(2 pi i k / n) at the given precision.
BigComplex root_of_unity(long k, long n, unsigned bits);

} // namespace descent
