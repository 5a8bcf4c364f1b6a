#pragma once

#include "descent/cyclo.hpp"
#include "descent/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace descent {

using Monomial = std::vector<int>;

// "3,0,0" <-> {3,0,0}
std::string monomial_key(const Monomial& m);
Monomial parse_monomial_key(const std::string& key, size_t nvars, const std::string& where = "");

// All exponent vectors of the given total degree, in a fixed order
// (lexicographically decreasing: x0^d first).
std::vector<Monomial> monomials(size_t nvars, int degree);

// A polynomial over K in a fixed number of variables, stored sparsely.
class Form {
public:
    Form() = default;
    Form(int p, size_t nvars) : p_(p), n_(nvars) {}

    static Form variable(int p, size_t nvars, size_t i);
    static Form constant(int p, size_t nvars, const Cyclo& c);
    static Form linear(const std::vector<Cyclo>& coeffs);

    int p() const { return p_; }
    size_t nvars() const { return n_; }
    const std::map<Monomial, Cyclo>& terms() const { return t_; }

    Cyclo coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Cyclo& c);
    bool is_zero() const { return t_.empty(); }
    int degree() const;

    Form operator-() const;
    friend Form operator+(Form a, const Form& b);
    friend Form operator-(Form a, const Form& b) { return a + (-b); }
    friend Form operator*(const Form& a, const Form& b);
    friend Form operator*(Form a, const Cyclo& c);
    friend bool operator==(const Form& a, const Form& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

    // Evaluate at x; T must support T + T, T * T and T * Cyclo.
    template <class T>
    T eval(const std::vector<T>& x, const T& zero) const;
    Cyclo operator()(const std::vector<Cyclo>& x) const { return eval(x, Cyclo(p_)); }

    // F(M x)
    Form apply_matrix(const CMatrix& m) const;
    Form derivative(size_t i) const;
    // Coefficients on a list of monomials (missing ones are zero).
    std::vector<Cyclo> coeff_vector(const std::vector<Monomial>& basis) const;

private:
    int p_ = 0;
    size_t n_ = 0;
    std::map<Monomial, Cyclo> t_;
};

Form one_like(const Form& f);

inline Form apply_matrix_form(const Form& f, const CMatrix& m) { return f.apply_matrix(m); }

template <class T>
T Form::eval(const std::vector<T>& x, const T& zero) const {
    std::vector<std::vector<T>> pw(n_);
    int d = 0;
    for (auto& [m, c] : t_)
        for (int e : m) d = std::max(d, e);
    for (size_t i = 0; i < n_; ++i) {
        if (d == 0) break;
        pw[i].push_back(x[i]);
        for (int e = 2; e <= d; ++e) pw[i].push_back(pw[i].back() * x[i]);
    }
    T acc = zero;
    for (auto& [m, c] : t_) {
        bool first = true;
        T term = zero;
        for (size_t i = 0; i < n_; ++i) {
            if (m[i] == 0) continue;
            if (first) {
                term = pw[i][m[i] - 1];
                first = false;
            } else {
                term = term * pw[i][m[i] - 1];
            }
        }
        if (first) acc = acc + one_like(zero) * c;
        else acc = acc + term * c;
    }
    return acc;
}

} // namespace descent
