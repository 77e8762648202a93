#include "osculum/upoly.hpp"

#include "osculum/errors.hpp"
#include "osculum/polynomial.hpp"

namespace osculum {

UPoly::UPoly(QVector coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && osculum::is_zero(c_.back())) c_.pop_back();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(QVector{c}); }

UPoly UPoly::monomial(unsigned deg, const Rational& c) {
    QVector v(deg + 1);
    v[deg] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::linear(const Rational& a, const Rational& b) { return UPoly(QVector{a, b}); }

const Rational& UPoly::leading() const {
    if (c_.empty()) throw DegenerateCurveError("leading coefficient of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
    if (osculum::is_zero(c)) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    QVector r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (is_zero(a.c_[i])) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::pow(unsigned e) const {
    UPoly r = constant(1), base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    QVector r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UPoly(std::move(r));
}

Rational UPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    Rational inv = 1 / c_.back();
    return *this * inv;
}

std::string UPoly::to_string(const std::string& var) const {
    Polynomial p(1);
    for (std::size_t i = 0; i < c_.size(); ++i) p.add_term(MultiIndex{static_cast<unsigned>(i)}, c_[i]);
    return p.to_string({var});
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DimensionError("division by zero polynomial");
    QVector rem = a.coeffs();
    const QVector& d = b.coeffs();
    if (rem.size() < d.size()) return {UPoly(), a};
    QVector quot(rem.size() - d.size() + 1);
    Rational inv = 1 / d.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational f = rem[k + d.size() - 1] * inv;
        quot[k] = f;
        if (is_zero(f)) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DimensionError("exact_div: nonzero remainder");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = y.monic();
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

}  // namespace osculum
