#include <doctest.h>

#include "osculum/errors.hpp"
#include "osculum/fit.hpp"
#include "osculum/osculation.hpp"
#include "osculum/random.hpp"
#include "osculum/rnc.hpp"
#include "osculum/variety.hpp"

using namespace osculum;

namespace {

bool same_point(const QVector& a, const QVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return !is_zero_vector(a) && !is_zero_vector(b);
}

Rational dot_product(const QVector& a, const QVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool passes_through(const RationalCurve& c, const QVector& p) { return !parameters_of(c, p).empty(); }

std::vector<QVector> conic_monomials(const std::vector<QVector>& pts) {
    std::vector<QVector> rows;
    for (const auto& p : pts)
        rows.push_back({p[0] * p[0], p[0] * p[1], p[0] * p[2], p[1] * p[1], p[1] * p[2], p[2] * p[2]});
    return rows;
}

RationalCurve twisted_cubic() {
    return RationalCurve({UPoly::monomial(0), UPoly::monomial(1), UPoly::monomial(2), UPoly::monomial(3)});
}

template <class T>
T horner(const UPoly& p, const T& t) {
    T acc(0);
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * t + T(p.coeffs()[k]);
    return acc;
}

}  // namespace

TEST_SUITE("rnc") {
    TEST_CASE("conic through five points") {
        std::vector<QVector> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}};
        auto fit = rnc_through_points(2, pts);
        CHECK(fit.curve.degree() == 2);
        // implicit oracle: the conic's coefficients form the kernel of the 5x6 monomial matrix
        auto ker = null_space(QMatrix::from_rows(conic_monomials(pts)));
        REQUIRE(ker.rows() == 1);
        CHECK(same_point(ker.row(0), {0, 3, -4, 0, 1, 0}));
        Rng rng(3);
        std::vector<QVector> samples;
        for (int i = 0; i < 8; ++i) samples.push_back(fit.curve.eval(rng.small_rational()));
        for (const auto& row : conic_monomials(samples)) CHECK(dot_product(row, ker.row(0)) == 0);
        for (std::size_t i = 0; i < pts.size(); ++i) CHECK(same_point(fit.curve.eval(fit.params[i]), pts[i]));
    }

    TEST_CASE("lines and twisted cubics through points") {
        auto line = rnc_through_points(1, {{1, 0}, {0, 1}, {1, 1}, {2, 5}});
        CHECK(line.curve.degree() == 1);
        CHECK_THROWS_AS(rnc_through_points(1, {{1, 0}, {0, 1}, {1, 1}, {2, 2}}), DegeneracyError);
        Rng rng(77);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<QVector> pts;
            for (int i = 0; i < 6; ++i) pts.push_back(rng.small_vector(4));
            CurveThroughPoints fit;
            try {
                fit = rnc_through_points(3, pts);
            } catch (const DegeneracyError&) {
                continue;
            }
            auto cert = certify_curve(fit.curve);
            CHECK(cert.is_rnc);
            CHECK(cert.degree == 3);
            for (std::size_t i = 0; i < 6; ++i) CHECK(same_point(fit.curve.eval(fit.params[i]), pts[i]));
            std::vector<std::size_t> order{5, 3, 1, 0, 2, 4};
            auto other = rnc_through_points(3, pts, {order, std::nullopt});
            CHECK(curves_projectively_equal(fit.curve, other.curve));
        }
    }

    TEST_CASE("degenerate configurations") {
        std::vector<QVector> pts{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}, {1, 2, 3}};
        try {
            rnc_through_points(2, pts);
            FAIL("expected a degeneracy");
        } catch (const DegeneracyError& e) {
            CHECK_FALSE(e.witness.empty());
        }
        CHECK_THROWS_AS(rnc_through_points(2, {{1, 0, 0}, {0, 1, 0}}), DimensionError);
    }

    TEST_CASE("certificates") {
        auto c = certify_curve(twisted_cubic());
        CHECK(c.is_rnc);
        CHECK(c.span_dim == 3);
        auto flat = certify_curve(RationalCurve({UPoly::monomial(0), UPoly::monomial(2), UPoly::monomial(2, 3)}));
        CHECK_FALSE(flat.is_rnc);
        CHECK(flat.span_dim == 1);
    }

    TEST_CASE("extension path") {
        // twisted cubic through four rational and two conjugate points over Q(sqrt 3)
        Rng rng(5);
        auto target = twisted_cubic().transformed(rng.invertible_matrix(4));
        std::vector<std::vector<QuadExt>> pts;
        for (Rational t : {Rational(0), Rational(1), Rational(-2), make_rational(1, 2)}) {
            std::vector<QuadExt> p;
            for (const auto& x : target.eval(t)) p.emplace_back(x);
            pts.push_back(p);
        }
        for (int sign : {1, -1}) {
            QuadExt t(Rational(1), Rational(sign), Rational(3));
            std::vector<QuadExt> p;
            for (const auto& comp : target.components()) p.push_back(horner(comp, t));
            pts.push_back(p);
        }
        auto fit = rnc_through_points_ext(3, pts, {0, 1, 2});
        CHECK(curves_projectively_equal(fit.curve, target));
        CHECK(fit.params[0].has_value());
        CHECK_FALSE(fit.params[4].has_value());
        CHECK(passes_through(fit.curve, target.eval(make_rational(1, 2))));
    }

    TEST_CASE("tangent variant") {
        Rng rng(13);
        auto target = twisted_cubic().transformed(rng.invertible_matrix(4));
        std::vector<QVector> frame;
        for (Rational t : {Rational(0), Rational(1), Rational(-1), Rational(3)}) frame.push_back(target.eval(t));
        Rational u = 2;
        QVector dir;
        for (const auto& comp : target.components()) dir.push_back(comp.derivative().eval(u));
        auto fit = rnc_through_points_tangent(3, frame, target.eval(u), dir);
        CHECK(curves_projectively_equal(fit.curve, target));
        CHECK(same_point(fit.curve.eval(P1Point::infinity()), target.eval(u)));
    }

    TEST_CASE("scroll sections") {
        auto fit = fit_scroll_section(ScrollSpec({1, 1}), {{0, {1}}, {1, {2}}, {2, {5}}});
        CHECK(fit.solution_dim == 1);
        REQUIRE(fit.P.size() == 2);
        QVector got{fit.P[0].coeff(0), fit.P[0].coeff(1), fit.P[1].coeff(0), fit.P[1].coeff(1)};
        CHECK(same_point(got, {-3, 1, -3, -1}));
        for (auto [t, s] : {std::pair<int, int>{0, 1}, {1, 2}, {2, 5}})
            CHECK(fit.P[1].eval(t) == s * fit.P[0].eval(t));
        // the unknown count rn+1 equals the sum of n - a_k
        for (const auto& a : scroll_specs(2, 4)) {
            int total = 0;
            for (int ak : a.degrees()) total += a.n() - ak;
            CHECK(total == a.r() * a.n() + 1);
        }
    }

    TEST_CASE("conics on quadrics") {
        auto q2 = QuadraticForm::hyperbolic(3, 3);
        auto fit = conic_on_quadric(q2, {1, 0, 0}, {0, 1, 0}, {1, -1, 1});
        for (int t = -3; t <= 3; ++t) CHECK(q2.value(fit.curve.eval(Rational(t))) == 0);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(same_point(fit.curve.eval(fit.params[i]), std::vector<QVector>{{1, 0, 0}, {0, 1, 0}, {1, -1, 1}}[i]));

        auto q3 = QuadraticForm::hyperbolic(4, 4);
        QVector a{1, 0, 0, 0}, b{0, 1, 1, 0}, c{1, -2, 1, 2};
        REQUIRE(q3.value(b) == 0);
        REQUIRE(q3.value(c) == 0);
        auto g = conic_on_quadric(q3, a, b, c);
        auto cert = certify_curve(g.curve);
        CHECK(cert.degree == 2);
        CHECK(cert.span_dim == 2);
        for (int t = -3; t <= 3; ++t) CHECK(q3.value(g.curve.eval(Rational(t))) == 0);
        CHECK_THROWS(conic_on_quadric(q3, a, {0, 0, 1, 0}, {1, 0, 1, 0}));
    }

    TEST_CASE("pushforward degrees") {
        auto v = make_variety(parse_variety_spec_text(R"({"family":"StandardScroll","params":{"a":[1,1],"rho":2,"chi":0}})"));
        auto sec = fit_scroll_section(ScrollSpec({1, 1}), {{0, {1}}, {1, {2}}, {2, {5}}});
        // the chart is (t, s), the section is [P0 : t P0 : P1]
        auto img = pushforward(v, {sec.P[0], sec.P[0] * UPoly::monomial(1), sec.P[1]});
        auto cert = certify_curve(img);
        CHECK(cert.is_rnc);
        CHECK(cert.degree == 4);

        auto ver = make_variety(parse_variety_spec_text(R"({"family":"Veronese","params":{"dim":2,"order":3}})"));
        auto line = pushforward(ver, {UPoly::constant(1), UPoly::linear(1, 2), UPoly::linear(-1, 3)});
        CHECK(certify_curve(line).degree == 3);
        CHECK(certify_curve(line).is_rnc);
    }

    TEST_CASE("fits through parameter points") {
        Rng rng(8);
        for (const char* t : {R"({"family":"Veronese","params":{"dim":2,"order":3}})",
                              R"({"family":"SegreSpecial","params":{"r":2,"mu":4}})",
                              R"({"family":"StandardScroll","params":{"a":[1,1],"rho":2,"chi":0}})"}) {
            auto spec = parse_variety_spec_text(t);
            auto v = make_variety(spec);
            auto cls = spec.intrinsic_class();
            std::vector<QVector> pts;
            for (int i = 0; i < cls.n; ++i) pts.push_back(rng.small_vector(v.param_dim()));
            auto fit = fit_rnc_through(spec, v, pts);
            auto cert = certify_curve(fit.curve);
            CHECK(cert.is_rnc);
            CHECK(cert.degree == cls.q);
            for (const auto& p : pts) CHECK(passes_through(fit.curve, v.point(p)));
            CHECK(curves_projectively_equal(fit_rnc_through(spec, v, pts).curve, fit.curve));
        }
    }

    TEST_CASE("osculators of a rational normal curve decompose its span") {
        Rng rng(19);
        auto c = twisted_cubic().transformed(rng.invertible_matrix(4));
        auto v = curve_as_parametrization(c);
        std::vector<std::vector<unsigned>> compositions{{1, 1}, {0, 2}, {0, 0, 1}, {0, 0, 0, 0}, {3}};
        for (const auto& ks : compositions) {
            std::vector<ProjSubspace> parts;
            for (std::size_t i = 0; i < ks.size(); ++i)
                parts.push_back(osculator(v, {Rational(static_cast<long>(i) * 2 - 1)}, ks[i]).subspace);
            auto ds = direct_sum(parts);
            CHECK(ds.ok());
            CHECK(ds.sum->is_whole());
        }
    }
}
