#pragma once

#include <string>
#include <utility>

#include "osculum/rational.hpp"

namespace osculum {

// Dense univariate polynomial, coefficients stored from low to high degree.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(QVector coeffs);

    static UPoly constant(const Rational& c);
    static UPoly monomial(unsigned deg, const Rational& c = 1);
    // a + b*t
    static UPoly linear(const Rational& a, const Rational& b);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const QVector& coeffs() const { return c_; }
    const Rational& leading() const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const Rational& c);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
    friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly pow(unsigned e) const;
    UPoly derivative() const;
    Rational eval(const Rational& t) const;
    UPoly monic() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    QVector c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Exact quotient; throws if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace osculum
