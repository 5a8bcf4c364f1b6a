#include "descent/form.hpp"
#include "descent/errors.hpp"

#include <algorithm>
#include <functional>

namespace descent {

std::string monomial_key(const Monomial& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s;
}

Monomial parse_monomial_key(const std::string& key, size_t nvars, const std::string& where) {
    Monomial m;
    size_t start = 0;
    while (start <= key.size()) {
        size_t comma = key.find(',', start);
        std::string part = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 3)
            throw ParseError(where, "malformed exponent key \"" + key + "\"");
        m.push_back(std::stoi(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (m.size() != nvars)
        throw ParseError(where, "exponent key \"" + key + "\" should have " + std::to_string(nvars) + " entries");
    return m;
}

std::vector<Monomial> monomials(size_t nvars, int degree) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i + 1 == nvars) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
    };
    if (nvars > 0) rec(0, degree);
    return out;
}

Form Form::variable(int p, size_t nvars, size_t i) {
    Form f(p, nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    f.add_term(m, Cyclo(p, Rational(1)));
    return f;
}

Form Form::constant(int p, size_t nvars, const Cyclo& c) {
    Form f(p, nvars);
    f.add_term(Monomial(nvars, 0), c);
    return f;
}

Form Form::linear(const std::vector<Cyclo>& coeffs) {
    Form f(coeffs.at(0).p(), coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Monomial m(coeffs.size(), 0);
        m[i] = 1;
        f.add_term(m, coeffs[i]);
    }
    return f;
}

Cyclo Form::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Cyclo(p_) : it->second;
}

void Form::add_term(const Monomial& m, const Cyclo& c) {
    if (m.size() != n_) throw UsageError("monomial has wrong number of variables");
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

int Form::degree() const {
    int d = -1;
    for (auto& [m, c] : t_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

Form Form::operator-() const {
    Form r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Form operator+(Form a, const Form& b) {
    if (a.n_ != b.n_) throw UsageError("adding forms in different numbers of variables");
    for (auto& [m, c] : b.t_) a.add_term(m, c);
    return a;
}

Form operator*(const Form& a, const Form& b) {
    if (a.n_ != b.n_) throw UsageError("multiplying forms in different numbers of variables");
    Form r(a.p_, a.n_);
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) {
            Monomial m(a.n_);
            for (size_t i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Form operator*(Form a, const Cyclo& c) {
    if (c.is_zero()) return Form(a.p_, a.n_);
    for (auto& [m, x] : a.t_) x *= c;
    return a;
}

Form Form::apply_matrix(const CMatrix& mat) const {
    if (mat.rows() != n_ || mat.cols() != n_) throw UsageError("matrix size does not match form");
    // x_i -> sum_k M_ik y_k
    std::vector<Form> sub;
    for (size_t i = 0; i < n_; ++i) {
        std::vector<Cyclo> row;
        for (size_t k = 0; k < n_; ++k) row.push_back(mat(i, k));
        sub.push_back(linear(row));
    }
    return eval(sub, Form(p_, n_));
}

Form Form::derivative(size_t i) const {
    Form r(p_, n_);
    for (auto& [m, c] : t_) {
        if (m[i] == 0) continue;
        Monomial mm = m;
        mm[i] -= 1;
        r.add_term(mm, c * Rational(m[i]));
    }
    return r;
}

std::vector<Cyclo> Form::coeff_vector(const std::vector<Monomial>& basis) const {
    std::vector<Cyclo> v;
    for (auto& m : basis) v.push_back(coeff(m));
    return v;
}

Form one_like(const Form& f) {
    return Form::constant(f.p(), f.nvars(), Cyclo(f.p(), Rational(1)));
}

} // namespace descent
