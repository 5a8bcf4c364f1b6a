#include "descent/matrix.hpp"
#include "descent/errors.hpp"

namespace descent {

CMatrix identity_matrix(int p, size_t n) {
    CMatrix m(n, n, Cyclo(p));
    for (size_t i = 0; i < n; ++i) m(i, i) = Cyclo(p, Rational(1));
    return m;
}

CMatrix matrix_pow(const CMatrix& m, unsigned e) {
    CMatrix r = identity_matrix(m(0, 0).p(), m.rows());
    CMatrix b = m;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<size_t> echelon(CMatrix& a, size_t ncols, Cyclo* det_out) {
    const int p = a(0, 0).p();
    Cyclo d(p, Rational(1));
    std::vector<size_t> piv;
    size_t row = 0;
    for (size_t c = 0; c < ncols && row < a.rows(); ++c) {
        size_t pr = row;
        while (pr < a.rows() && a(pr, c).is_zero()) ++pr;
        if (pr == a.rows()) {
            d = Cyclo(p);
            continue;
        }
        if (pr != row) {
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a(pr, j), a(row, j));
            d = -d;
        }
        Cyclo inv = a(row, c).inv();
        d *= a(row, c);
        for (size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c).is_zero()) continue;
            Cyclo f = a(r, c);
            for (size_t j = 0; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
        }
        piv.push_back(c);
        ++row;
    }
    if (det_out) *det_out = piv.size() == a.rows() ? d : Cyclo(p);
    return piv;
}

} // namespace

Cyclo det(const CMatrix& m) {
    CMatrix a = m;
    Cyclo d;
    echelon(a, a.cols(), &d);
    return d;
}

CMatrix inverse(const CMatrix& m) {
    const size_t n = m.rows();
    const int p = m(0, 0).p();
    CMatrix a(n, 2 * n, Cyclo(p));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = Cyclo(p, Rational(1));
    }
    auto piv = echelon(a, n, nullptr);
    if (piv.size() != n) throw SingularParameter("matrix is not invertible");
    CMatrix out(n, n, Cyclo(p));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
    return out;
}

std::optional<Cyclo> scalar_value(const CMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (i == j && m(i, j) != m(0, 0)) return std::nullopt;
            if (i != j && !m(i, j).is_zero()) return std::nullopt;
        }
    return m(0, 0);
}

size_t rank(const CMatrix& m) {
    CMatrix a = m;
    return echelon(a, a.cols(), nullptr).size();
}

std::optional<std::vector<Cyclo>> solve_columns(const std::vector<std::vector<Cyclo>>& cols,
                                                const std::vector<Cyclo>& rhs) {
    const size_t n = cols.size(), m = rhs.size();
    const int p = rhs[0].p();
    CMatrix a(m, n + 1, Cyclo(p));
    for (size_t r = 0; r < m; ++r) {
        for (size_t k = 0; k < n; ++k) a(r, k) = cols[k][r];
        a(r, n) = rhs[r];
    }
    auto piv = echelon(a, n, nullptr);
    for (size_t r = piv.size(); r < m; ++r)
        if (!a(r, n).is_zero()) return std::nullopt;
    std::vector<Cyclo> x(n, Cyclo(p));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a(r, n);
    return x;
}

} // namespace descent
