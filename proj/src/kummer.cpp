#include "descent/kummer.hpp"
#include "descent/errors.hpp"

namespace descent {

AlgebraPtr KummerAlgebra::make(const Cyclo& a, const PrecisionConfig& cfg) {
    if (a.is_zero()) throw UsageError("Kummer algebra needs a nonzero a");
    auto root = is_pth_power(a, cfg);
    return AlgebraPtr(new KummerAlgebra(a, root));
}

KummerElement::KummerElement(AlgebraPtr alg) : alg_(std::move(alg)), c_(alg_->p(), Cyclo(alg_->p())) {}

KummerElement::KummerElement(AlgebraPtr alg, std::vector<Cyclo> coeffs) : alg_(std::move(alg)) {
    const int p = alg_->p();
    c_.assign(p, Cyclo(p));
    // alpha^{qp + r} = a^q alpha^r
    Cyclo apow(p, Rational(1));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0 && i % p == 0) apow *= alg_->a();
        if (coeffs[i].p() != p) throw UsageError("Kummer coefficient over the wrong field");
        c_[i % p] += coeffs[i] * apow;
    }
}

KummerElement::KummerElement(AlgebraPtr alg, const Cyclo& c) : KummerElement(std::move(alg)) {
    c_[0] = c;
}

KummerElement KummerElement::alpha(AlgebraPtr alg) {
    KummerElement x(std::move(alg));
    x.c_[1] = Cyclo(x.p(), Rational(1));
    return x;
}

void KummerElement::check_same(const KummerElement& o) const {
    if (!alg_ || !o.alg_) throw UsageError("uninitialised Kummer element");
    if (alg_ != o.alg_ && !alg_->same(*o.alg_)) throw UsageError("Kummer elements from different algebras");
}

bool KummerElement::is_zero() const {
    for (auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool KummerElement::in_base() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

KummerElement KummerElement::operator-() const {
    KummerElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

KummerElement operator+(const KummerElement& x, const KummerElement& y) {
    x.check_same(y);
    KummerElement r = x;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
    return r;
}

KummerElement operator*(const KummerElement& x, const KummerElement& y) {
    x.check_same(y);
    const int p = x.p();
    std::vector<Cyclo> lo(p, Cyclo(p)), hi(p, Cyclo(p));
    for (int i = 0; i < p; ++i) {
        if (x.c_[i].is_zero()) continue;
        for (int j = 0; j < p; ++j) {
            if (y.c_[j].is_zero()) continue;
            Cyclo t = x.c_[i] * y.c_[j];
            if (i + j < p) lo[i + j] += t;
            else hi[i + j - p] += t;
        }
    }
    KummerElement r(x.alg_);
    for (int i = 0; i < p; ++i) r.c_[i] = hi[i].is_zero() ? lo[i] : lo[i] + hi[i] * x.alg_->a();
    return r;
}

KummerElement operator*(KummerElement x, const Cyclo& c) {
    for (auto& v : x.c_) v = v * c;
    return x;
}

bool operator==(const KummerElement& x, const KummerElement& y) {
    if (!x.alg_ || !y.alg_) return false;
    return x.alg_->same(*y.alg_) && x.c_ == y.c_;
}

KummerElement KummerElement::sigma(long k) const {
    const int p = this->p();
    KummerElement r = *this;
    for (int i = 1; i < p; ++i)
        if (!r.c_[i].is_zero()) r.c_[i] = r.c_[i] * Cyclo::zeta(p, static_cast<long>(i) * k);
    return r;
}

Cyclo KummerElement::norm() const {
    KummerElement r = *this;
    for (int k = 1; k < p(); ++k) r = r * sigma(k);
    if (!r.in_base()) throw MathError("internal: norm left the base field");
    return r.c_[0];
}

Cyclo KummerElement::trace() const {
    return c_[0] * Rational(p());
}

KummerElement KummerElement::inv() const {
    KummerElement rest(alg_, Cyclo(p(), Rational(1)));
    for (int k = 1; k < p(); ++k) rest = rest * sigma(k);
    KummerElement n = *this * rest;
    if (!n.in_base()) throw MathError("internal: norm left the base field");
    if (n.c_[0].is_zero()) throw NonUnit();
    return rest * n.c_[0].inv();
}

KummerElement KummerElement::pow(long e) const {
    KummerElement base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    KummerElement r(alg_, Cyclo(p(), Rational(1)));
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

std::vector<KummerElement> u_invariants(const KummerElement& beta) {
    if (beta.p() == 3) return {beta / beta.sigma(2)};
    KummerElement u1 = beta.sigma(4) / beta;
    KummerElement u2 = (beta.sigma(3) * beta.sigma(4)) / (beta * beta.sigma(1));
    return {u1, u2};
}

std::optional<KummerElement> split_cube_solution(const AlgebraPtr& alg, const Cyclo& b) {
    if (alg->p() != 3 || !alg->is_split()) return std::nullopt;
    const Cyclo& c = *alg->root();
    Cyclo one(3, Rational(1));
    Cyclo b0 = (b + one + one) * Rational(1, 3);
    Cyclo b1 = (b - one) * Rational(1, 3);
    if (b0.is_zero() || b1.is_zero()) return std::nullopt;
    Cyclo ci = c.inv();
    return KummerElement(alg, {b0, b1 * ci, b1 * ci * ci});
}

} // namespace descent
