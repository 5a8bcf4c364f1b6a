#include "descent/upoly.hpp"
#include "descent/errors.hpp"

#include <algorithm>

namespace descent {

UPoly::UPoly(int p, std::vector<Cyclo> c) : p_(p), c_(std::move(c)) {
    trim();
}

UPoly UPoly::monomial(const Cyclo& c, size_t deg) {
    std::vector<Cyclo> v(deg + 1, Cyclo(c.p()));
    v[deg] = c;
    return UPoly(c.p(), v);
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Cyclo> c(std::max(a.c_.size(), b.c_.size()), Cyclo(a.p_));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UPoly(a.p_, c);
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Cyclo> c(std::max(a.c_.size(), b.c_.size()), Cyclo(a.p_));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return UPoly(a.p_, c);
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.p_);
    std::vector<Cyclo> c(a.c_.size() + b.c_.size() - 1, Cyclo(a.p_));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(a.p_, c);
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
    if (d.is_zero()) throw DivisionByZero();
    r = *this;
    std::vector<Cyclo> qc(std::max(0, degree() - d.degree() + 1), Cyclo(p_));
    Cyclo inv = d.lead().inv();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - d.degree());
        Cyclo f = r.lead() * inv;
        qc[shift] = f;
        r = r - UPoly::monomial(f, shift) * d;
    }
    q = UPoly(p_, qc);
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    Cyclo inv = lead().inv();
    std::vector<Cyclo> c = c_;
    for (auto& x : c) x *= inv;
    return UPoly(p_, c);
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        a.divmod(b, q, r);
        a = b;
        b = r;
    }
    return a.monic();
}

} // namespace descent
