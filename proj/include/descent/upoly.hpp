#pragma once

#include "descent/cyclo.hpp"

#include <vector>

namespace descent {

// Univariate polynomial over K, coefficients from the constant term up,
// no trailing zeros (the zero polynomial is empty).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(int p) : p_(p) {}
    UPoly(int p, std::vector<Cyclo> c);
    static UPoly monomial(const Cyclo& c, size_t deg);

    int p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Cyclo>& coeffs() const { return c_; }
    Cyclo coeff(size_t k) const { return k < c_.size() ? c_[k] : Cyclo(p_); }
    Cyclo lead() const { return c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    void divmod(const UPoly& d, UPoly& q, UPoly& r) const;
    UPoly monic() const;

private:
    void trim();
    int p_ = 0;
    std::vector<Cyclo> c_;
};

// Monic gcd (zero if both are zero).
UPoly gcd(UPoly a, UPoly b);

} // namespace descent
