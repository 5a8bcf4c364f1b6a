#include "descent/rational.hpp"
#include "descent/errors.hpp"

#include <cctype>

namespace descent {

namespace {

bool is_integer_text(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text, const std::string& where) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw ParseError(where, "malformed rational \"" + text + "\"");
    if (num[0] == '+') num = num.substr(1);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw ParseError(where, "zero denominator in \"" + text + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str(10);
}

Integer lcm_denominators(const Rational* begin, const Rational* end) {
    Integer d = 1;
    for (auto it = begin; it != end; ++it)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), it->get_den_mpz_t());
    return d;
}

} // namespace descent
