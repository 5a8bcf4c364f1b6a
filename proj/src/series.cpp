#include "descent/series.hpp"

#include <algorithm>

namespace descent {

Series Series::constant(const Cyclo& c, size_t order) {
    Series s(c.p(), order);
    if (order > 0) s.c_[0] = c;
    return s;
}

Series Series::parameter(int p, size_t order) {
    Series s(p, order);
    if (order > 1) s.c_[1] = Cyclo(p, Rational(1));
    return s;
}

int Series::valuation() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

Series Series::truncated(size_t order) const {
    Series s = *this;
    s.c_.resize(std::min(order, c_.size()), Cyclo(p_));
    return s;
}

Series Series::operator-() const {
    Series s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
}

Series operator+(const Series& a, const Series& b) {
    size_t n = std::min(a.order(), b.order());
    Series s(a.p_, n);
    for (size_t k = 0; k < n; ++k) s.c_[k] = a.c_[k] + b.c_[k];
    return s;
}

Series operator*(const Series& a, const Series& b) {
    size_t n = std::min(a.order(), b.order());
    Series s(a.p_, n);
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            s.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return s;
}

Series operator*(Series a, const Cyclo& c) {
    for (auto& x : a.c_) x = x * c;
    return a;
}

} // namespace descent
