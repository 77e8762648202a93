#include <doctest.h>

#include "osculum/catalog.hpp"
#include "osculum/errors.hpp"
#include "osculum/osculation.hpp"
#include "osculum/random.hpp"
#include "osculum/variety.hpp"

using namespace osculum;

namespace {

Parametrization veronese(int dim, int order) {
    return make_variety(parse_variety_spec_text(R"({"family":"Veronese","params":{"dim":)" + std::to_string(dim) +
                                                R"(,"order":)" + std::to_string(order) + "}}"));
}

RationalCurve moment_curve(int k) {
    std::vector<UPoly> c;
    for (int i = 0; i <= k; ++i) c.push_back(UPoly::monomial(static_cast<unsigned>(i)));
    return RationalCurve(c);
}

}  // namespace

TEST_SUITE("osculation") {
    TEST_CASE("Veronese surface osculators at the origin") {
        auto v = veronese(2, 2);
        auto o1 = osculator(v, {0, 0}, 1);
        CHECK(o1.dim() == 2);
        CHECK(o1.is_regular);
        auto o2 = osculator(v, {0, 0}, 2);
        CHECK(o2.dim() == 5);
        CHECK(o2.is_regular);
        auto o3 = osculator(v, {0, 0}, 3);
        CHECK(o3.dim() == 5);
        CHECK_FALSE(o3.is_regular);
        CHECK(osculator(v, {0, 0}, 0).dim() == 0);
    }

    TEST_CASE("scroll chart is not 2-regular") {
        Polynomial t = Polynomial::variable(2, 0), s = Polynomial::variable(2, 1);
        auto v = Parametrization::affine(2, {t, t * t, s, s * t});
        auto o = osculator(v, {0, 0}, 2);
        CHECK(o.dim() == 4);
        CHECK(o.expected_dim_plus_1 == 6);
        CHECK_FALSE(o.is_regular);
    }

    TEST_CASE("regularity order") {
        auto cubic = curve_as_parametrization(moment_curve(3));
        CHECK(regularity_order(cubic, {make_rational(2, 3)}) == 3);
        auto line = Parametrization::affine(1, {Polynomial::variable(1, 0)});
        CHECK(regularity_order(line, {5}) == 1);
        Rng rng(2);
        CHECK(regularity_order(veronese(3, 3), rng.small_vector(3)) == 3);
    }

    TEST_CASE("osculator dimension bound") {
        Rng rng(6);
        auto v = make_variety(parse_variety_spec_text(R"({"family":"StandardScroll","params":{"a":[2,1],"rho":2,"chi":1}})"));
        for (unsigned k = 0; k <= 4; ++k) {
            auto o = osculator(v, rng.small_vector(2), k);
            CHECK(o.dim() + 1 <= o.expected_dim_plus_1);
        }
    }

    TEST_CASE("admissibility") {
        auto scroll = make_variety(parse_variety_spec_text(R"({"family":"Scroll","params":{"a":[1,1]}})"));
        Rng rng(12);
        std::vector<QVector> pts{rng.small_vector(2), rng.small_vector(2), rng.small_vector(2)};
        auto rep = admissibility_check(scroll, pts, {1, 0});
        CHECK(rep.admissible);
        CHECK(rep.span_dim == 3);
        auto v = veronese(2, 3);
        CHECK(admissibility_check(v, {{1, 2}, {3, -1}}, {3}).admissible);
        auto bad = admissibility_check(scroll, {pts[0], pts[0], pts[0]}, {1, 0});
        CHECK_FALSE(bad.admissible);
        CHECK_FALSE(bad.failure.empty());
    }

    TEST_CASE("osculating projections") {
        auto v = make_variety(parse_variety_spec_text(R"({"family":"StandardScroll","params":{"a":[1,1],"rho":2,"chi":0}})"));
        Rng rng(17);
        auto p = rng.small_vector(2);
        auto img = osculating_projection(v, {{p, 1}});
        CHECK(img.image.span().dim() == pi_formula(1, 2, 2));
        CHECK(regularity_order(img.image, {make_rational(5, 7), 3}) == 2);
        auto v33 = veronese(3, 3);
        auto proj = osculating_projection(v33, {{rng.small_vector(3), 1}});
        CHECK(proj.image.span().dim() == pi_formula(2, 5, 7));
        CHECK_THROWS_AS(osculating_projection(v, {{p, 1}, {p, 0}}), NotInGeneralPosition);
    }

    TEST_CASE("monomial osculator at the origin matches the derivative computation") {
        for (auto [a, rho, chi] : {std::tuple{std::vector<int>{1, 1}, 2, 0}, std::tuple{std::vector<int>{2, 1, 1}, 1, 1},
                                   std::tuple{std::vector<int>{2, 1}, 3, -1}}) {
            auto A = build_A(ScrollSpec(a), rho, chi);
            auto v = monomial_parametrization(A);
            QVector origin(A.nvars());
            for (unsigned k = 0; k <= 3; ++k) CHECK(monomial_osculator_at_origin(A, k) == osculator(v, origin, k).subspace);
            Rng rng(9);
            CHECK(regularity_order(v, origin) == regularity_order(v, rng.small_vector(A.nvars())));
        }
    }

    TEST_CASE("projective invariance") {
        Rng rng(31);
        auto v = veronese(2, 2);
        for (int i = 0; i < 5; ++i) {
            auto g = rng.invertible_matrix(6);
            auto p = rng.small_vector(2);
            CHECK(osculator(v.transformed(g), p, 1).subspace == osculator(v, p, 1).subspace.image(g));
        }
    }

    TEST_CASE("slices of a k-regular germ stay k-regular") {
        auto v = veronese(3, 2);
        auto slice = v.sliced({std::nullopt, Rational(2), std::nullopt});
        Rng rng(1);
        CHECK(osculator(slice, rng.small_vector(2), 2).is_regular);
    }

    TEST_CASE("projection compatibility along curves") {
        CHECK(curve_projection_check(moment_curve(3), 1, 1));
        CHECK(curve_projection_check(moment_curve(3), 0, 2));
        CHECK(curve_projection_check(moment_curve(4), make_rational(-1, 2), 3));
        CHECK(curve_projection_check(moment_curve(1), 3, 0));
        CHECK_THROWS_AS(curve_projection_check(moment_curve(2), 1, 2), InvalidParameters);
    }

    TEST_CASE("hitting sets and contact loci") {
        CHECK(min_hitting_set({{0, 1}}, 2) == 1);
        CHECK(min_hitting_set({{0, 1}, {0, 2}, {1}}, 3) == 2);
        // brute force over all subsets for a random family
        Rng rng(44);
        for (int i = 0; i < 10; ++i) {
            std::vector<std::vector<std::size_t>> sets;
            for (int k = 0; k < 6; ++k) {
                std::vector<std::size_t> s;
                for (std::size_t v = 0; v < 5; ++v)
                    if (rng.uniform_int(0, 2) == 0) s.push_back(v);
                if (s.empty()) s.push_back(static_cast<std::size_t>(k % 5));
                sets.push_back(s);
            }
            std::size_t best = 5;
            for (unsigned mask = 0; mask < 32; ++mask) {
                bool all = std::all_of(sets.begin(), sets.end(), [&](const auto& s) {
                    return std::any_of(s.begin(), s.end(), [&](std::size_t v) { return mask >> v & 1; });
                });
                if (all) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
            }
            CHECK(min_hitting_set(sets, 5) == best);
        }
        CHECK(contact_locus_dim_monomial(build_A(ScrollSpec({2, 1, 1}), 2, -1), 1) <= 1);
    }
}
