#pragma once

#include "descent/cyclo.hpp"

#include <optional>
#include <vector>

namespace descent {

// Dense row-major matrix.  T needs +, - and *; the linear-algebra helpers
// further down are specific to Cyclo.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix out(x.r_, y.c_, x.a_.front() - x.a_.front());
        for (size_t i = 0; i < x.r_; ++i)
            for (size_t k = 0; k < x.c_; ++k)
                for (size_t j = 0; j < y.c_; ++j) out(i, j) = out(i, j) + x(i, k) * y(k, j);
        return out;
    }
    friend Matrix operator+(Matrix x, const Matrix& y) {
        for (size_t i = 0; i < x.a_.size(); ++i) x.a_[i] = x.a_[i] + y.a_[i];
        return x;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    template <class V>
    std::vector<V> apply(const std::vector<V>& v) const {
        std::vector<V> out;
        for (size_t i = 0; i < r_; ++i) {
            V acc = v[0] * (*this)(i, 0);
            for (size_t j = 1; j < c_; ++j) acc = acc + v[j] * (*this)(i, j);
            out.push_back(acc);
        }
        return out;
    }

    Matrix scaled(const T& s) const {
        Matrix out = *this;
        for (auto& x : out.a_) x = x * s;
        return out;
    }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using CMatrix = Matrix<Cyclo>;

CMatrix identity_matrix(int p, size_t n);
CMatrix matrix_pow(const CMatrix& m, unsigned e);
Cyclo det(const CMatrix& m);
// Throws SingularParameter when not invertible.
CMatrix inverse(const CMatrix& m);
// Some c with m = c * I, if one exists.
std::optional<Cyclo> scalar_value(const CMatrix& m);
size_t rank(const CMatrix& m);
// Solves sum_k x_k cols[k] = rhs; nothing if inconsistent.  When the
// columns are dependent the free unknowns are set to zero.
std::optional<std::vector<Cyclo>> solve_columns(const std::vector<std::vector<Cyclo>>& cols,
                                                const std::vector<Cyclo>& rhs);

} // namespace descent
