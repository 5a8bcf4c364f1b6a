#include "descent/cyclo.hpp"
#include "descent/errors.hpp"

#include <cmath>
#include <numeric>
#include <ostream>

namespace descent {

void check_prime(int p) {
    if (p != 3 && p != 5) throw UsageError("p must be 3 or 5, got " + std::to_string(p));
}

Cyclo::Cyclo(int p) : p_(p), c_(p - 1) {
    check_prime(p);
}

Cyclo::Cyclo(int p, const Rational& r) : Cyclo(p) {
    c_[0] = r;
    c_[0].canonicalize();
}

Cyclo::Cyclo(int p, std::vector<Rational> coeffs) : p_(p) {
    check_prime(p);
    for (auto& c : coeffs) c.canonicalize();
    if (coeffs.size() == static_cast<size_t>(p - 1)) {
        c_ = std::move(coeffs);
    } else {
        *this = from_redundant(p, coeffs);
    }
}

Cyclo Cyclo::from_redundant(int p, const std::vector<Rational>& c) {
    check_prime(p);
    std::vector<Rational> full(p);
    for (size_t i = 0; i < c.size(); ++i) full[i % p] += c[i];
    Cyclo r(p);
    for (int i = 0; i < p - 1; ++i) r.c_[i] = full[i] - full[p - 1];
    return r;
}

Cyclo Cyclo::zeta(int p, long k) {
    check_prime(p);
    long e = ((k % p) + p) % p;
    std::vector<Rational> c(e + 1);
    c[e] = 1;
    return from_redundant(p, c);
}

void Cyclo::check_same(const Cyclo& o) const {
    if (p_ == 0 || o.p_ == 0) throw UsageError("uninitialised field element");
    if (p_ != o.p_) throw UsageError("field elements over different cyclotomic fields");
}

bool Cyclo::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    a.check_same(b);
    const int p = a.p_;
    std::vector<Rational> full(p);
    Rational t;
    for (int i = 0; i < p - 1; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < p - 1; ++j) {
            if (b.c_[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            full[(i + j) % p] += t;
        }
    }
    Cyclo r(p);
    for (int i = 0; i < p - 1; ++i) r.c_[i] = full[i] - full[p - 1];
    return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    *this = *this * o;
    return *this;
}

Cyclo& Cyclo::operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) {
    *this = *this * o.inv();
    return *this;
}

bool operator<(const Cyclo& a, const Cyclo& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        int s = cmp(a.c_[i], b.c_[i]);
        if (s != 0) return s < 0;
    }
    return false;
}

Cyclo Cyclo::galois(long j) const {
    if (p_ == 0) throw UsageError("uninitialised field element");
    long jj = ((j % p_) + p_) % p_;
    if (jj == 0) throw UsageError("Galois exponent must be coprime to p");
    std::vector<Rational> full(p_);
    for (int i = 0; i < p_ - 1; ++i) full[(i * jj) % p_] += c_[i];
    Cyclo r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = full[i] - full[p_ - 1];
    return r;
}

Rational Cyclo::norm() const {
    Cyclo r = *this;
    for (int j = 2; j < p_; ++j) r *= galois(j);
    return r.c_[0];
}

Rational Cyclo::trace() const {
    // Tr(z^i) = p - 1 for i = 0 and -1 otherwise.
    Rational t = c_[0] * (p_ - 1);
    for (int i = 1; i < p_ - 1; ++i) t -= c_[i];
    return t;
}

Cyclo Cyclo::inv() const {
    if (p_ == 0) throw UsageError("uninitialised field element");
    if (is_zero()) throw DivisionByZero();
    Cyclo rest(p_, Rational(1));
    for (int j = 2; j < p_; ++j) rest *= galois(j);
    Cyclo n = *this * rest;  // rational by construction
    Rational inv_n = 1 / n.c_[0];
    rest *= inv_n;
    return rest;
}

Cyclo Cyclo::pow(long e) const {
    Cyclo base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Cyclo r(p_, Rational(1));
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

std::complex<double> Cyclo::embed(int j) const {
    std::complex<double> s = 0;
    for (int i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        double ang = 2.0 * M_PI * static_cast<double>((static_cast<long>(i) * j) % p_) / p_;
        s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

std::string Cyclo::str() const {
    std::string out;
    for (int i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        std::string coef = c_[i].get_str();
        std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        bool neg = c_[i] < 0;
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (neg) coef = coef.substr(1);
        if (i == 0) out += coef;
        else out += (coef == "1" ? "" : coef + "*") + mono;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) {
    return os << x.str();
}

Integer denominator(const Cyclo& x) {
    auto& c = x.coeffs();
    return lcm_denominators(c.data(), c.data() + c.size());
}

Rational element_height(const Cyclo& x) {
    if (x.is_zero()) return 0;
    Integer d = denominator(x);
    Integer h = d;
    for (auto& c : x.coeffs()) {
        Integer n = abs(c.get_num() * (d / c.get_den()));
        if (n > h) h = n;
    }
    return Rational(h);
}

bool simpler(const Cyclo& a, const Cyclo& b) {
    Rational ha = element_height(a), hb = element_height(b);
    if (ha != hb) return ha < hb;
    auto nnz = [](const Cyclo& x) {
        int k = 0;
        for (auto& q : x.coeffs()) k += q != 0;
        return k;
    };
    if (nnz(a) != nnz(b)) return nnz(a) < nnz(b);
    return b < a;
}

} // namespace descent
