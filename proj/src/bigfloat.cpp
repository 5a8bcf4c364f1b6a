#include "descent/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace descent {

BigFloat::BigFloat(unsigned bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, unsigned bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, unsigned bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

double BigFloat::log2abs() const {
    if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
    if (!mpfr_number_p(v_)) return std::numeric_limits<double>::infinity();
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

Integer BigFloat::round() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace {
unsigned max_bits(const BigFloat& a, const BigFloat& b) {
    return std::max(a.bits(), b.bits());
}
} // namespace

BigFloat BigFloat::operator-() const {
    BigFloat r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_bits(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_bits(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_bits(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_bits(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(unsigned bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_cos(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_sin(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(max_bits(x, y));
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
}

double BigComplex::log2abs() const {
    double a = re.log2abs(), b = im.log2abs();
    double m = std::max(a, b);
    if (std::isinf(m)) return m;
    double lo = std::min(a, b);
    // log2 sqrt(2^{2a} + 2^{2b})
    return m + 0.5 * std::log2(1.0 + std::exp2(2.0 * (lo - m)));
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

BigComplex root_of_unity(long k, long n, unsigned bits) {
    long kk = ((k % n) + n) % n;
    BigFloat ang = BigFloat::pi(bits + 16) * BigFloat(Rational(Integer(2 * kk), Integer(n)), bits + 16);
    BigComplex r(BigFloat::cos(ang), BigFloat::sin(ang));
    BigFloat re(bits), im(bits);
    mpfr_set(re.raw(), r.re.raw(), MPFR_RNDN);
    mpfr_set(im.raw(), r.im.raw(), MPFR_RNDN);
    return {re, im};
}

} // namespace descent
