#include "osculum/fit.hpp"

#include "osculum/errors.hpp"
#include "osculum/rnc.hpp"

namespace osculum {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void expect_points(const std::vector<QVector>& pts, std::size_t count, std::size_t dim) {
    if (pts.size() != count)
        throw DimensionError("fit needs " + std::to_string(count) + " points, got " + std::to_string(pts.size()));
    for (const auto& p : pts)
        if (p.size() != dim) throw DimensionError("parameter point has the wrong length");
}

Mobius compose(const Mobius& f, const Mobius& g) {  // f after g
    return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

UPoly eval_linear(const std::vector<UPoly>& basis, const QVector& coeffs) {
    UPoly acc;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!is_zero(coeffs[i])) acc += basis[i] * coeffs[i];
    return acc;
}

// Homogeneous value of a polynomial of formal degree `deg` at [num : den].
Rational eval_hom(const UPoly& p, int deg, const P1Point& u) {
    Rational s = 0;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational term = p.coeff(k);
        for (int i = 0; i < k; ++i) term *= u.num;
        for (int i = k; i < deg; ++i) term *= u.den;
        s += term;
    }
    return s;
}

CurveFit fit_veronese(const Parametrization& v, const std::vector<QVector>& pts) {
    std::size_t d = v.param_dim();
    expect_points(pts, 2, d);
    if (pts[0] == pts[1]) throw DegeneracyError("coincident points", {0, 1});
    std::vector<UPoly> line{UPoly::constant(1)};
    for (std::size_t i = 0; i < d; ++i) line.push_back(UPoly::linear(pts[0][i], pts[1][i] - pts[0][i]));
    return {pushforward(v, line), {P1Point::finite(0), P1Point::finite(1)}, std::nullopt};
}

CurveFit fit_scroll(const Parametrization& v, const ScrollSpec& a, const std::vector<QVector>& pts) {
    std::size_t r = static_cast<std::size_t>(a.r());
    expect_points(pts, static_cast<std::size_t>(a.n()), r + 1);
    std::vector<std::pair<Rational, QVector>> samples;
    for (const auto& p : pts) samples.emplace_back(p[0], QVector(p.begin() + 1, p.end()));
    auto sec = fit_scroll_section(a, samples);
    std::vector<UPoly> pc{sec.P[0], UPoly::linear(0, 1) * sec.P[0]};
    for (std::size_t k = 1; k <= r; ++k) pc.push_back(sec.P[k]);
    CurveFit fit{pushforward(v, pc), {}, std::nullopt};
    for (const auto& p : pts) fit.params.push_back(P1Point::finite(p[0]));
    return fit;
}

// Sections of the cone chart: a conic in the (t1, t2)-plane and quartic s-coordinates over it.
CurveFit fit_cone(const Parametrization& v, int r, const std::vector<QVector>& pts) {
    std::size_t d = static_cast<std::size_t>(r + 1);
    expect_points(pts, 5, d);
    std::vector<QVector> plane;
    for (const auto& p : pts) plane.push_back({1, p[0], p[1]});
    auto conic = rnc_through_points(2, plane);
    const auto& g = conic.curve.components();
    int deg = conic.curve.degree();
    QMatrix sys(5, 5);
    std::vector<Rational> g0sq(5);
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& u = conic.params[i];
        for (int k = 0; k <= 4; ++k) {
            Rational term = 1;
            for (int e = 0; e < k; ++e) term *= u.num;
            for (int e = k; e < 4; ++e) term *= u.den;
            sys(i, static_cast<std::size_t>(k)) = term;
        }
        Rational g0 = eval_hom(g[0], deg, u);
        g0sq[i] = g0 * g0;
    }
    auto inv = inverse(sys);
    if (!inv) throw GenericityFailure("quartic interpolation system is singular");
    std::vector<UPoly> pc{g[0], g[1], g[2]};
    for (std::size_t j = 2; j < d; ++j) {
        QVector rhs(5);
        for (std::size_t i = 0; i < 5; ++i) rhs[i] = pts[i][j] * g0sq[i];
        pc.push_back(UPoly(inv->apply(rhs)));
    }
    std::vector<unsigned> weights(d, 2);
    weights[0] = weights[1] = 1;
    return {pushforward(v, pc, weights), conic.params, std::nullopt};
}

// Points (W, U0, u) = (1, -Q''(u), u) on the quadric of the given rank in P^{r+2}.
CurveFit fit_quadric_veronese(const Parametrization& v, const QuadricVeroneseFamily& f,
                              const std::vector<QVector>& pts) {
    std::size_t d = static_cast<std::size_t>(f.r + 1);
    expect_points(pts, 3, d);
    auto inner = QuadraticForm::hyperbolic(static_cast<std::size_t>(f.rank - 2), d);
    auto q = QuadraticForm::hyperbolic(static_cast<std::size_t>(f.rank), d + 2);
    std::vector<QVector> lifted;
    for (const auto& p : pts) {
        QVector x{1, -inner.value(p)};
        x.insert(x.end(), p.begin(), p.end());
        lifted.push_back(std::move(x));
    }
    ConicFit conic;
    try {
        conic = conic_on_quadric(q, lifted[0], lifted[1], lifted[2]);
    } catch (DegenerateConicError& e) {
        throw GenericityFailure(e.what());
    }
    const auto& g = conic.curve.components();
    std::vector<UPoly> pc{g[0]};
    pc.insert(pc.end(), g.begin() + 2, g.end());
    return {pushforward(v, pc), {conic.params.begin(), conic.params.end()}, std::nullopt};
}

// P^1 x (quadric): a conic through the three quadric components, joined to t by a Mobius map.
CurveFit fit_segre(const SegreSpecialFamily& f, const std::vector<QVector>& pts) {
    std::size_t r = static_cast<std::size_t>(f.r);
    expect_points(pts, 3, r + 1);
    auto inner = QuadraticForm::hyperbolic(static_cast<std::size_t>(f.mu - 2), r);
    auto q = QuadraticForm::hyperbolic(static_cast<std::size_t>(f.mu), r + 2);
    std::vector<QVector> lifted;
    for (const auto& p : pts) {
        QVector s(p.begin() + 1, p.end());
        QVector x{1, -inner.value(s)};
        x.insert(x.end(), s.begin(), s.end());
        lifted.push_back(std::move(x));
    }
    ConicFit conic;
    try {
        conic = conic_on_quadric(q, lifted[0], lifted[1], lifted[2]);
    } catch (DegenerateConicError& e) {
        throw GenericityFailure(e.what());
    }
    // tau(u): sends the conic parameter of point i to t_i
    Mobius psi = mobius_from_three(conic.params[0], conic.params[1], conic.params[2]);
    Mobius chi = mobius_from_three(P1Point::finite(pts[0][0]), P1Point::finite(pts[1][0]), P1Point::finite(pts[2][0]));
    Mobius tau = compose(chi, psi.inverse());
    UPoly num = UPoly::linear(tau.b, tau.a), den = UPoly::linear(tau.d, tau.c);
    const auto& g = conic.curve.components();
    UPoly y0 = g[0], yq = -g[1];
    std::vector<UPoly> comps{den * y0, num * y0};
    for (std::size_t j = 0; j < r; ++j) comps.push_back(den * g[j + 2]);
    for (std::size_t j = 0; j < r; ++j) comps.push_back(num * g[j + 2]);
    comps.push_back(den * yq);
    comps.push_back(num * yq);
    return {curve_normalize(RationalCurve(std::move(comps))), {conic.params.begin(), conic.params.end()}, std::nullopt};
}

// Twisted cubic in the P^3 spanned by the four points (1, t_i, s_i) of P^{r+2}, through the
// trace of the base locus {T0 = T1 = 0, q(S) = 0} on that P^3.
CurveFit fit_cubic_special(const Parametrization& v, const CubicSpecialFamily& f, const std::vector<QVector>& pts) {
    std::size_t r = static_cast<std::size_t>(f.r);
    expect_points(pts, 4, r + 1);
    auto q = QuadraticForm::hyperbolic(static_cast<std::size_t>(f.mu_prime), r);
    std::vector<QVector> P;
    for (const auto& p : pts) {
        QVector x{1};
        x.insert(x.end(), p.begin(), p.end());
        P.push_back(std::move(x));
    }
    if (span_of(r + 1, P).rank() != 4) throw GenericityFailure("the four points do not span a P^3");
    QMatrix cond = QMatrix::from_rows({{1, 1, 1, 1}, {pts[0][0], pts[1][0], pts[2][0], pts[3][0]}}, 4);
    QMatrix line = null_space(cond);
    if (line.rows() != 2) throw GenericityFailure("parameters t_i do not determine a line");
    auto s_part = [&](const QVector& y) {
        QVector s(r);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < r; ++j) s[j] += y[i] * pts[i][j + 1];
        return s;
    };
    QVector l1 = line.row(0), l2 = line.row(1);
    QVector s1 = s_part(l1), s2 = s_part(l2);
    Rational a = q.value(s1), b = q.bilinear(s1, s2), c = q.value(s2);
    Rational disc = b * b - a * c;
    std::vector<QVector> frame;
    for (std::size_t i = 0; i < 4; ++i) {
        QVector e(4);
        e[i] = 1;
        frame.push_back(std::move(e));
    }
    std::vector<UPoly> y;
    std::vector<P1Point> params;
    std::optional<Rational> radicand;
    auto combo = [&](const Rational& x, const Rational& z) {
        QVector p(4);
        for (std::size_t i = 0; i < 4; ++i) p[i] = x * l1[i] + z * l2[i];
        return p;
    };
    if (f.mu_prime == 1) {
        // q restricted to the line is a square: one base point, met tangentially along the line
        if (is_zero(a) && is_zero(c)) throw GenericityFailure("line lies in the base locus");
        QVector touch = is_zero(a) ? combo(1, 0) : combo(-b, a);
        QVector dir = is_zero(a) ? combo(0, 1) : combo(1, 0);
        auto fit = rnc_through_points_tangent(3, frame, touch, dir);
        y = fit.curve.components();
        params.assign(fit.params.begin(), fit.params.begin() + 4);
    } else {
        if (is_zero(disc)) throw GenericityFailure("line is tangent to the base quadric");
        Rational root;
        if (is_zero(a) || rational_sqrt(disc, root)) {
            std::vector<QVector> six = frame;
            if (is_zero(a)) {
                six.push_back(combo(1, 0));
                six.push_back(combo(-c, 2 * b));
            } else {
                six.push_back(combo(-b + root, a));
                six.push_back(combo(-b - root, a));
            }
            auto fit = rnc_through_points(3, six);
            y = fit.curve.components();
            params.assign(fit.params.begin(), fit.params.begin() + 4);
        } else {
            std::vector<std::vector<QuadExt>> six;
            for (const auto& e : frame) six.push_back({e.begin(), e.end()});
            for (int sign : {1, -1}) {
                std::vector<QuadExt> p(4);
                QuadExt lam(-b, Rational(sign), disc);
                for (std::size_t i = 0; i < 4; ++i) p[i] = lam * QuadExt(l1[i]) + QuadExt(a * l2[i]);
                six.push_back(std::move(p));
            }
            auto fit = rnc_through_points_ext(3, six, {0, 1, 2});
            y = fit.curve.components();
            for (std::size_t i = 0; i < 4; ++i) {
                if (!fit.params[i]) throw Error("rational point received an irrational parameter");
                params.push_back(*fit.params[i]);
            }
            radicand = disc;
        }
    }
    std::vector<UPoly> pc(r + 2);
    for (std::size_t k = 0; k < r + 2; ++k) {
        QVector col(4);
        for (std::size_t i = 0; i < 4; ++i) col[i] = P[i][k];
        pc[k] = eval_linear(y, col);
    }
    return {pushforward(v, pc), std::move(params), radicand};
}

CurveFit fit_v33(const Parametrization& v, const std::vector<QVector>& pts) {
    expect_points(pts, 6, 3);
    std::vector<QVector> lifted;
    for (const auto& p : pts) lifted.push_back({1, p[0], p[1], p[2]});
    auto c = rnc_through_points(3, lifted);
    return {pushforward(v, c.curve.components()), c.params, std::nullopt};
}

}  // namespace

CurveFit fit_rnc_through(const VarietySpec& spec, const Parametrization& v, const std::vector<QVector>& points) {
    return std::visit(
        Overloaded{
            [&](const VeroneseFamily&) { return fit_veronese(v, points); },
            [&](const ScrollFamily& f) { return fit_scroll(v, f.a, points); },
            [&](const StandardScrollFamily& f) { return fit_scroll(v, f.a, points); },
            [&](const ConeStandardFamily& f) { return fit_cone(v, f.r, points); },
            [&](const QuadricVeroneseFamily& f) { return fit_quadric_veronese(v, f, points); },
            [&](const SegreSpecialFamily& f) { return fit_segre(f, points); },
            [&](const CubicSpecialFamily& f) { return fit_cubic_special(v, f, points); },
            [&](const Veronese33Family&) { return fit_v33(v, points); },
        },
        spec.family);
}

CurveFit fit_rnc_through(const VarietySpec& spec, const std::vector<QVector>& points) {
    return fit_rnc_through(spec, make_variety(spec), points);
}

}  // namespace osculum
