#pragma once

#include <string>
#include <vector>

#include "osculum/matrix.hpp"
#include "osculum/upoly.hpp"

namespace osculum {

// Point [num : den] of the parameter line; t = num/den, den = 0 is t = infinity.
struct P1Point {
    Rational num{0};
    Rational den{1};

    static P1Point finite(const Rational& t) { return {t, 1}; }
    static P1Point infinity() { return {1, 0}; }
    bool is_infinite() const { return is_zero(den); }
    bool operator==(const P1Point& o) const { return num * o.den == den * o.num; }
    std::string to_string() const;
};

// t = (a u + b) / (c u + d)
struct Mobius {
    Rational a{1}, b{0}, c{0}, d{1};
    P1Point apply(const P1Point& u) const { return {a * u.num + b * u.den, c * u.num + d * u.den}; }
    Mobius inverse() const { return {d, -b, -c, a}; }
};

// Mobius map u -> t sending u = 0, infinity, 1 to the given parameters.
Mobius mobius_from_three(const P1Point& at0, const P1Point& at_inf, const P1Point& at1);

class RationalCurve {
public:
    RationalCurve() = default;
    explicit RationalCurve(std::vector<UPoly> components);

    std::size_t ambient_dim() const { return comps_.size() - 1; }
    int degree() const;
    const std::vector<UPoly>& components() const { return comps_; }

    // Homogenized evaluation at [num : den], in degree degree().
    QVector eval(const P1Point& t) const;
    QVector eval(const Rational& t) const { return eval(P1Point::finite(t)); }
    // Row k holds the coefficients of t^k across components.
    QMatrix coefficient_matrix() const;
    RationalCurve transformed(const QMatrix& g) const;

    std::string to_string(const std::string& var = "t") const;
    bool operator==(const RationalCurve& o) const { return comps_ == o.comps_; }

private:
    std::vector<UPoly> comps_;
};

RationalCurve curve_normalize(const RationalCurve& c);
// Substitutes t = (a u + b)/(c u + d) and clears the denominator (degree preserved).
RationalCurve apply_mobius(const RationalCurve& c, const Mobius& m);
// Parameters at which the curve passes through the projective point.
std::vector<P1Point> parameters_of(const RationalCurve& c, const QVector& point);

}  // namespace osculum
