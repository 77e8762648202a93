#include <doctest.h>

#include <algorithm>
#include <set>

#include "osculum/catalog.hpp"
#include "osculum/errors.hpp"
#include "osculum/variety.hpp"

using namespace osculum;

namespace {

// Classical genus bound for a nondegenerate curve of degree d in P^N.
long classical_genus_bound(long d, long N) {
    long m = (d - 1) / (N - 1), eps = d - 1 - m * (N - 1);
    return m * (m - 1) / 2 * (N - 1) + m * eps;
}

long choose(long a, long b) {
    if (b < 0 || a < b) return 0;
    long r = 1;
    for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

}  // namespace

TEST_SUITE("catalog") {
    TEST_CASE("class parameters") {
        auto p = ClassParams::make(2, 4, 7);
        CHECK(p.rho == 2);
        CHECK(p.m == 2);
        CHECK(p.chi() == 1);
        CHECK(p.weights() == std::vector<unsigned>{1, 2, 2});
        auto top = ClassParams::make(1, 3, 5);
        CHECK(top.has_alternate_branch());
        CHECK(top.weights() == std::vector<unsigned>{2, 2});
        CHECK_THROWS_AS(ClassParams::make(1, 3, 1), InvalidParameters);
        CHECK_THROWS_AS(ClassParams::make(0, 3, 4), InvalidParameters);
        for (int n = 2; n <= 6; ++n)
            for (int q = n - 1; q < 30; ++q) {
                auto c = ClassParams::make(3, n, q);
                CHECK(c.rho * (n - 1) + c.m - 1 == q);
                CHECK(c.m >= 1);
                CHECK(c.m <= n - 1);
            }
    }

    TEST_CASE("pi values") {
        CHECK(pi_formula(2, 2, 3) == 19);
        CHECK(pi_formula(2, 6, 9) == 19);
        for (int r = 1; r <= 5; ++r)
            for (int n = 2; n <= 6; ++n) CHECK(pi_formula(r, n, n - 1) == r + n - 1);
        // Veronese: all monomials of degree <= q in r+1 variables
        for (int r = 1; r <= 4; ++r)
            for (int q = 1; q <= 6; ++q) CHECK(pi_formula(r, 2, q) == choose(r + 1 + q, q) - 1);
    }

    TEST_CASE("Castelnuovo bound for curves") {
        for (long n = 2; n <= 7; ++n)
            for (long d = n; d <= 30; ++d) CHECK(castelnuovo_bound(1, static_cast<int>(n), static_cast<int>(d)) ==
                                                classical_genus_bound(d, n));
        CHECK_THROWS_AS(castelnuovo_bound(1, 3, 0), InvalidParameters);
    }

    TEST_CASE("scroll specs") {
        CHECK_THROWS_AS(ScrollSpec({1, 2}), InvalidParameters);
        CHECK_THROWS_AS(ScrollSpec({2, -1}), InvalidParameters);
        CHECK_THROWS_AS(ScrollSpec({0, 0}), InvalidParameters);
        CHECK(ScrollSpec({2, 1, 0}).n() == 4);
        CHECK(ScrollSpec({2, 1, 0}).r() == 2);
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 7; ++s) {
                // partitions of s into at most r+1 parts
                std::set<std::vector<int>> brute;
                std::vector<int> a(static_cast<std::size_t>(r + 1), 0);
                std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int left, int cap) {
                    if (i == a.size()) {
                        if (left == 0) brute.insert(a);
                        return;
                    }
                    for (int v = std::min(left, cap); v >= 0; --v) {
                        a[i] = v;
                        rec(i + 1, left - v, v);
                    }
                };
                rec(0, s, s);
                auto got = scroll_specs(r, s);
                std::set<std::vector<int>> g;
                for (const auto& x : got) g.insert(x.degrees());
                CHECK(g == brute);
                CHECK(g.size() == got.size());
            }
    }

    TEST_CASE("index sets") {
        auto A = build_A(ScrollSpec({1, 1}), 1, 0);
        CHECK(A.nvars() == 2);
        std::set<std::vector<unsigned>> got;
        for (const auto& e : A.indices()) got.insert(e.exponents());
        CHECK(got == std::set<std::vector<unsigned>>{{1, 0}, {0, 1}, {1, 1}});
        CHECK(A.is_standard_shape());

        auto B = build_A(ScrollSpec({2, 1}), 2, -1);
        // alpha = 0: k <= 3; alpha = 1: k <= 2; alpha = 2: k <= 1
        CHECK(B.size() == 3 + 3 + 2);
        CHECK(B.contains(MultiIndex{1, 2}));
        CHECK_FALSE(B.contains(MultiIndex{2, 2}));
        CHECK_THROWS_AS(build_A(ScrollSpec({1, 1}), 0, 0), InvalidParameters);
        CHECK_THROWS_AS(build_A(ScrollSpec({1, 1}), 1, 2), InvalidParameters);

        auto C = build_A_cone(1, 4);
        CHECK(C.size() == 5);
        auto C2 = build_A_cone(2, 6);
        for (const auto& e : C2.indices()) CHECK(2 * (e[0] + e[1]) + 4 * e[2] <= 6);
        CHECK(C2.contains(MultiIndex{0, 1, 1}));
        CHECK(C2.contains(MultiIndex{1, 0, 1}));
        CHECK_FALSE(C2.contains(MultiIndex{0, 0, 2}));
        CHECK_THROWS_AS(build_A_cone(1, 5), InvalidParameters);
        CHECK(static_cast<std::int64_t>(build_A_cone(3, 8).size()) == pi_formula(3, 5, 8));
    }

    TEST_CASE("I counts") {
        CHECK(I_formula(ScrollSpec({1, 1}), 1, 0) == 4);
        CHECK(I_formula(ScrollSpec({2}), 3, -1) == 6);
        // strongly negative chi contributes nothing
        CHECK(I_formula(ScrollSpec({1, 1}), 1, -5) == 0);
    }

    TEST_CASE("quadratic forms") {
        auto h = QuadraticForm::hyperbolic(4, 5);
        CHECK(h.rank() == 4);
        CHECK(h.value({1, 2, 3, 4, 5}) == 14);
        auto odd = QuadraticForm::hyperbolic(3, 4);
        CHECK(odd.rank() == 3);
        CHECK(odd.value({1, 2, 3, 4}) == 11);
        QVector x{1, -2, 5, 0}, y{3, 1, 1, 7};
        CHECK(odd.bilinear(x, y) == odd.bilinear(y, x));
        CHECK(odd.bilinear(x, x) == odd.value(x));
        QVector xy{4, -1, 6, 7};
        CHECK(odd.value(xy) == odd.value(x) + odd.value(y) + 2 * odd.bilinear(x, y));
        CHECK(odd.as_polynomial().eval(x) == odd.value(x));
    }

    TEST_CASE("variety specs") {
        const char* texts[] = {
            R"({"family":"Veronese","params":{"dim":2,"order":3}})",
            R"({"family":"Scroll","params":{"a":[2,1]}})",
            R"({"family":"StandardScroll","params":{"a":[1,1,0],"rho":1,"chi":1}})",
            R"({"family":"ConeStandard","params":{"r":1,"q":4}})",
            R"({"family":"QuadricVeronese","params":{"r":2,"rho":1,"rank":5}})",
            R"({"family":"SegreSpecial","params":{"r":2,"mu":3}})",
            R"({"family":"CubicSpecial","params":{"r":2,"mu_prime":1}})",
            R"({"family":"Veronese33"})",
        };
        for (const char* t : texts) {
            auto s = parse_variety_spec_text(t);
            CHECK_NOTHROW(s.validate());
            auto again = parse_variety_spec(to_json(s));
            CHECK(to_json(again) == to_json(s));
            auto c = s.intrinsic_class();
            auto v = make_variety(s);
            CHECK(static_cast<int>(v.param_dim()) == c.r + 1);
            CHECK(static_cast<std::int64_t>(v.span().dim()) == pi_formula(c.r, c.n, c.q));
        }
        CHECK(parse_variety_spec_text(texts[1]).intrinsic_class() == ClassTriple{1, 4, 3});
        auto declared = parse_variety_spec_text(R"({"family":"Scroll","params":{"a":[1,1]},"class":{"r":1,"n":3,"q":3}})");
        CHECK(declared.declared_class() == ClassTriple{1, 3, 3});
        CHECK(declared.intrinsic_class() == ClassTriple{1, 3, 2});
        CHECK_THROWS_AS(parse_variety_spec_text(R"({"family":"Nope"})"), ParseError);
        CHECK_THROWS_AS(parse_variety_spec_text(R"({"family":"Veronese","params":{"dim":2}})"), ParseError);
        CHECK_THROWS_AS(parse_variety_spec_text("not json"), ParseError);
        CHECK_THROWS_AS(parse_variety_spec_text(R"({"family":"StandardScroll","params":{"a":[1,1],"rho":1,"chi":7}})")
                            .validate(),
                        InvalidParameters);
    }
}
