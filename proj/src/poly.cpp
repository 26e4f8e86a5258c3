#include "spoq/poly.hpp"

namespace spoq {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational r) {
    Poly p;
    if (!r.is_zero()) p.c_.push_back(std::move(r));
    return p;
}

Poly Poly::monomial(int degree, Rational coeff) {
    Poly p;
    if (!coeff.is_zero()) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
        p.c_.back() = std::move(coeff);
    }
    return p;
}

Poly Poly::derivative() const {
    Poly p;
    for (int i = 1; i <= degree(); ++i) p.c_.push_back(Rational(i) * c_[i]);
    p.trim();
    return p;
}

Poly Poly::scaled(const Rational& r) const {
    if (r.is_zero()) return Poly();
    Poly p;
    p.c_.reserve(c_.size());
    for (const auto& c : c_) p.c_.push_back(c * r);
    return p;
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly operator+(const Poly& a, const Poly& b) {
    Poly p;
    size_t n = std::max(a.c_.size(), b.c_.size());
    p.c_.resize(n, Rational(0));
    for (size_t i = 0; i < n; ++i) p.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    p.trim();
    return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    p.trim();
    return p;
}

}  // namespace spoq
