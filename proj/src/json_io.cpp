#include "descent/json_io.hpp"
#include "descent/errors.hpp"

#include <algorithm>

namespace descent {

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Cyclo& x) {
    json a = json::array();
    for (auto& c : x.coeffs()) a.push_back(to_string(c));
    return a;
}

json to_json(const KummerElement& x) {
    json a = json::array();
    for (auto& c : x.coeffs()) a.push_back(to_json(c));
    return a;
}

json to_json(const Point& P) {
    json a = json::array();
    for (auto& c : P) a.push_back(to_json(c));
    return a;
}

json to_json(const Form& F) {
    json o = json::object();
    for (auto& [m, c] : F.terms()) o[monomial_key(m)] = to_json(c);
    return o;
}

json to_json(const CMatrix& M) {
    json a = json::array();
    for (size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < M.cols(); ++j) row.push_back(to_json(M(i, j)));
        a.push_back(row);
    }
    return a;
}

json to_json(const Series& s) {
    json a = json::array();
    for (auto& c : s.coeffs()) a.push_back(to_json(c));
    return a;
}

json to_json(const Report& r) {
    json checks = json::array();
    for (auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"pass", r.all_pass()}, {"checks", checks}};
}

namespace {

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return parse_rational(j.get<std::string>(), where);
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    throw ParseError(where, "expected a rational as a string \"n\" or \"n/d\" or an integer");
}

std::string at(const std::string& where, size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& where, const std::string& key) { return where + "." + key; }

const json& field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where, "missing key \"" + key + "\"");
    return *it;
}

} // namespace

Cyclo cyclo_from_json(const json& j, int p, const std::string& where) {
    check_prime(p);
    if (!j.is_array()) return Cyclo(p, rational_from_json(j, where));
    if (j.size() != static_cast<size_t>(p - 1))
        throw ParseError(where, "a field element needs " + std::to_string(p - 1) + " coefficients, got " +
                                    std::to_string(j.size()));
    std::vector<Rational> c;
    for (size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], at(where, i)));
    return Cyclo(p, c);
}

json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(where, std::string("invalid JSON at byte ") + std::to_string(e.byte));
    }
}

Cyclo parse_field_arg(const std::string& text, int p, const std::string& where) {
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '"'))
        return cyclo_from_json(parse_json_text(text, where), p, where);
    return Cyclo(p, parse_rational(text, where));
}

KummerElement kummer_from_json(const json& j, const AlgebraPtr& alg, const std::string& where) {
    const int p = alg->p();
    if (!j.is_array() || j.size() != static_cast<size_t>(p))
        throw ParseError(where, "a Kummer element is an array of " + std::to_string(p) + " field elements");
    std::vector<Cyclo> c;
    for (size_t i = 0; i < j.size(); ++i) c.push_back(cyclo_from_json(j[i], p, at(where, i)));
    return KummerElement(alg, c);
}

Point point_from_json(const json& j, int p, size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n)
        throw ParseError(where, "a point is an array of " + std::to_string(n) + " field elements");
    Point P;
    for (size_t i = 0; i < n; ++i) P.push_back(cyclo_from_json(j[i], p, at(where, i)));
    if (std::all_of(P.begin(), P.end(), [](const Cyclo& c) { return c.is_zero(); }))
        throw ParseError(where, "all coordinates are zero");
    return P;
}

Form form_from_json(const json& j, int p, size_t nvars, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "a form is an object keyed by exponent tuples such as \"3,0,0\"");
    Form F(p, nvars);
    int deg = -1;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string w = at(where, it.key());
        Monomial m = parse_monomial_key(it.key(), nvars, w);
        int d = 0;
        for (int e : m) d += e;
        if (deg >= 0 && d != deg) throw ParseError(w, "the form is not homogeneous");
        deg = d;
        F.add_term(m, cyclo_from_json(it.value(), p, w));
    }
    return F;
}

CMatrix matrix_from_json(const json& j, int p, size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) throw ParseError(where, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    CMatrix M(n, n, Cyclo(p));
    for (size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) throw ParseError(at(where, i), "bad matrix row");
        for (size_t k = 0; k < n; ++k) M(i, k) = cyclo_from_json(j[i][k], p, at(at(where, i), k));
    }
    return M;
}

json model_to_json(const CubicTorsor& m) {
    return {{"schema", kSchema}, {"kind", "cubic-torsor"}, {"p", 3},
            {"lambda", to_json(m.lambda)}, {"a", to_json(m.a)}, {"beta", to_json(m.beta)},
            {"b", to_json(m.beta.norm())}, {"form", to_json(m.form)},
            {"M_S", to_json(m.M_S)}, {"M_T", to_json(m.M_T)}};
}

json model_to_json(const QuinticTorsor& m) {
    json qs = json::array();
    for (auto& q : m.quadrics) qs.push_back(to_json(q));
    return {{"schema", kSchema}, {"kind", "quintic-torsor"}, {"p", 5},
            {"lambda", to_json(m.lambda)}, {"a", to_json(m.a)}, {"beta", to_json(m.beta)},
            {"b", to_json(m.beta.norm())}, {"split", m.split}, {"quadrics", qs},
            {"M_S", to_json(m.M_S)}, {"M_T", to_json(m.M_T)}};
}

Model model_from_json(const json& j, const PrecisionConfig& cfg) {
    const std::string w = "model";
    const json& schema = field(j, "schema", w);
    if (!schema.is_string() || schema.get<std::string>() != kSchema)
        throw ParseError(at(w, "schema"), std::string("expected \"") + kSchema + "\"");
    const json& pj = field(j, "p", w);
    if (!pj.is_number_integer()) throw ParseError(at(w, "p"), "expected 3 or 5");
    const int p = pj.get<int>();
    if (p != 3 && p != 5) throw ParseError(at(w, "p"), "expected 3 or 5");
    Cyclo lambda = cyclo_from_json(field(j, "lambda", w), p, at(w, "lambda"));
    Cyclo a = cyclo_from_json(field(j, "a", w), p, at(w, "a"));
    if (a.is_zero()) throw ParseError(at(w, "a"), "a must be nonzero");
    auto alg = KummerAlgebra::make(a, cfg);
    KummerElement beta = kummer_from_json(field(j, "beta", w), alg, at(w, "beta"));
    if (p == 3) {
        CubicTorsor m = build_cubic(lambda, a, beta);
        m.form = form_from_json(field(j, "form", w), p, 3, at(w, "form"));
        if (m.form.degree() != 3) throw ParseError(at(w, "form"), "expected a cubic");
        return m;
    }
    QuinticTorsor m = build_quintic(lambda, a, beta);
    const json& qs = field(j, "quadrics", w);
    if (!qs.is_array() || qs.size() != 5) throw ParseError(at(w, "quadrics"), "expected five quadrics");
    m.quadrics.clear();
    for (size_t i = 0; i < 5; ++i) {
        m.quadrics.push_back(form_from_json(qs[i], p, 5, at(at(w, "quadrics"), i)));
        if (m.quadrics.back().degree() != 2) throw ParseError(at(at(w, "quadrics"), i), "expected a quadric");
    }
    m.Q = m.quadrics[0];
    return m;
}

} // namespace descent
