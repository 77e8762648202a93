#include "osculum/curve.hpp"

#include <algorithm>

namespace osculum {

std::string P1Point::to_string() const {
    if (is_infinite()) return "inf";
    return Rational(num / den).get_str();
}

Mobius mobius_from_three(const P1Point& p0, const P1Point& pinf, const P1Point& p1) {
    // columns v0 = p0, vinf = pinf scaled so that v0 + vinf = p1
    Matrix<Rational> m(2, 2);
    m(0, 0) = p0.num;
    m(1, 0) = p0.den;
    m(0, 1) = pinf.num;
    m(1, 1) = pinf.den;
    auto lam = solve(m, QVector{p1.num, p1.den});
    if (!lam || is_zero((*lam)[0]) || is_zero((*lam)[1]))
        throw DegeneracyError("mobius_from_three: parameters not distinct", {0, 1, 2});
    // [t_num : t_den] = u_num * l1 * pinf + u_den * l0 * p0
    Rational l0 = (*lam)[0], l1 = (*lam)[1];
    return {l1 * pinf.num, l0 * p0.num, l1 * pinf.den, l0 * p0.den};
}

RationalCurve::RationalCurve(std::vector<UPoly> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw DimensionError("curve with no components");
    if (std::all_of(comps_.begin(), comps_.end(), [](const UPoly& p) { return p.is_zero(); }))
        throw DegenerateCurveError("all components of the curve vanish");
}

int RationalCurve::degree() const {
    int d = 0;
    for (const auto& p : comps_) d = std::max(d, p.degree());
    return d;
}

QVector RationalCurve::eval(const P1Point& t) const {
    int d = degree();
    QVector num_pow(d + 1), den_pow(d + 1);
    num_pow[0] = den_pow[0] = 1;
    for (int k = 1; k <= d; ++k) {
        num_pow[k] = num_pow[k - 1] * t.num;
        den_pow[k] = den_pow[k - 1] * t.den;
    }
    QVector out(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        Rational acc = 0;
        const auto& c = comps_[i].coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * num_pow[k] * den_pow[d - k];
        out[i] = acc;
    }
    return out;
}

QMatrix RationalCurve::coefficient_matrix() const {
    QMatrix m(degree() + 1, comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i)
        for (std::size_t k = 0; k < comps_[i].coeffs().size(); ++k) m(k, i) = comps_[i].coeffs()[k];
    return m;
}

RationalCurve RationalCurve::transformed(const QMatrix& g) const {
    if (g.cols() != comps_.size()) throw DimensionError("curve transform size mismatch");
    std::vector<UPoly> out(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < comps_.size(); ++j)
            if (!is_zero(g(i, j))) out[i] += comps_[j] * g(i, j);
    return RationalCurve(std::move(out));
}

std::string RationalCurve::to_string(const std::string& var) const {
    std::string out = "[";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += " : ";
        out += comps_[i].to_string(var);
    }
    return out + "]";
}

RationalCurve curve_normalize(const RationalCurve& c) {
    UPoly g;
    for (const auto& p : c.components()) g = gcd(g, p);
    std::vector<UPoly> comps;
    for (const auto& p : c.components()) comps.push_back(p.is_zero() ? p : exact_div(p, g));
    Integer lcm_den = 1, gcd_num = 0;
    for (const auto& p : comps)
        for (const auto& x : p.coeffs()) {
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), x.get_num_mpz_t());
        }
    Rational scale(lcm_den, gcd_num);
    scale.canonicalize();
    for (const auto& p : comps)
        if (!p.is_zero()) {
            if (sgn(p.leading()) < 0) scale = -scale;
            break;
        }
    for (auto& p : comps) p *= scale;
    return RationalCurve(std::move(comps));
}

RationalCurve apply_mobius(const RationalCurve& c, const Mobius& m) {
    int d = c.degree();
    UPoly num = UPoly::linear(m.b, m.a), den = UPoly::linear(m.d, m.c);
    std::vector<UPoly> num_pow{UPoly::constant(1)}, den_pow{UPoly::constant(1)};
    for (int k = 1; k <= d; ++k) {
        num_pow.push_back(num_pow.back() * num);
        den_pow.push_back(den_pow.back() * den);
    }
    std::vector<UPoly> out;
    for (const auto& p : c.components()) {
        UPoly acc;
        for (std::size_t k = 0; k < p.coeffs().size(); ++k)
            if (!is_zero(p.coeffs()[k])) acc += num_pow[k] * den_pow[d - k] * p.coeffs()[k];
        out.push_back(acc);
    }
    return RationalCurve(std::move(out));
}

std::vector<P1Point> parameters_of(const RationalCurve& c, const QVector& point) {
    if (point.size() != c.components().size()) throw DimensionError("parameters_of: point length mismatch");
    std::vector<P1Point> out;
    std::size_t j = 0;
    while (j < point.size() && is_zero(point[j])) ++j;
    if (j == point.size()) return out;
    UPoly g;
    const auto& comps = c.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i == j) continue;
        g = gcd(g, comps[i] * point[j] - comps[j] * point[i]);
    }
    if (g.is_zero()) throw DegenerateCurveError("constant curve");
    UPoly sqf = exact_div(g, gcd(g, g.derivative()));
    if (sqf.degree() == 1) out.push_back(P1Point::finite(-sqf.coeff(0) / sqf.coeff(1)));
    if (proportional(c.eval(P1Point::infinity()), point)) out.push_back(P1Point::infinity());
    return out;
}

}  // namespace osculum
