#pragma once

#include "descent/cyclo.hpp"

#include <vector>

namespace descent {

// Truncated power series sum_{k < order} c_k t^k + O(t^order) over K.
class Series {
public:
    Series() = default;
    Series(int p, size_t order) : p_(p), c_(order, Cyclo(p)) {}
    static Series constant(const Cyclo& c, size_t order);
    static Series parameter(int p, size_t order);  // t

    int p() const { return p_; }
    size_t order() const { return c_.size(); }
    const Cyclo& operator[](size_t k) const { return c_[k]; }
    Cyclo& operator[](size_t k) { return c_[k]; }
    const std::vector<Cyclo>& coeffs() const { return c_; }

    // Index of the first nonzero coefficient, or -1 if zero to this order.
    int valuation() const;
    Series truncated(size_t order) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Cyclo& c);

private:
    int p_ = 0;
    std::vector<Cyclo> c_;
};

inline Series one_like(const Series& s) { return Series::constant(Cyclo(s.p(), Rational(1)), s.order()); }

} // namespace descent
