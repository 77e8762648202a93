#include <doctest.h>

#include "osculum/catalog.hpp"
#include "osculum/errors.hpp"
#include "osculum/report.hpp"
#include "osculum/verify.hpp"

using namespace osculum;

namespace {

VarietySpec spec(const char* text) { return parse_variety_spec_text(text); }

}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("membership passes on standard and special models") {
        for (const char* t : {R"({"family":"Scroll","params":{"a":[1,1]}})",
                              R"({"family":"StandardScroll","params":{"a":[2,1,1],"rho":1,"chi":1}})",
                              R"({"family":"CubicSpecial","params":{"r":2,"mu_prime":2}})",
                              R"({"family":"Veronese","params":{"dim":2,"order":4}})"}) {
            auto rep = verify_membership(spec(t), 4, 11);
            CHECK_MESSAGE(rep.verdict == Verdict::pass, t, " ", rep.reason);
            REQUIRE(rep.span_expected.has_value());
            CHECK(rep.span_found == *rep.span_expected);
            CHECK(rep.span_found == pi_formula(rep.declared.r, rep.declared.n, rep.declared.q));
            CHECK(rep.admissible.value_or(false));
            for (const auto& tr : rep.trials) {
                CHECK(tr.fit_ok);
                CHECK(tr.incidence);
                CHECK(tr.attempts >= 1);
                CHECK(tr.attempts <= kMaxRetries + 1);
                CHECK(tr.points.size() == static_cast<std::size_t>(rep.declared.n));
                REQUIRE(tr.certificate.has_value());
                CHECK(tr.certificate->degree == rep.declared.q);
                CHECK(tr.certificate->span_dim == rep.declared.q);
            }
        }
        auto s = spec(R"({"family":"StandardScroll","params":{"a":[2,1,1],"rho":1,"chi":1}})");
        CHECK(s.intrinsic_class() == ClassTriple{2, 5, 5});
        CHECK(spec(R"({"family":"CubicSpecial","params":{"r":2,"mu_prime":2}})").intrinsic_class() ==
              ClassTriple{2, 4, 5});
    }

    TEST_CASE("reports are reproducible under a fixed seed") {
        auto s = spec(R"({"family":"SegreSpecial","params":{"r":2,"mu":4}})");
        CHECK(to_json(verify_membership(s, 3, 99)).dump() == to_json(verify_membership(s, 3, 99)).dump());
        CHECK(to_json(verify_membership(s, 3, 99)).dump() != to_json(verify_membership(s, 3, 100)).dump());
    }

    TEST_CASE("a wrong declared class fails") {
        auto bad = spec(R"({"family":"Scroll","params":{"a":[1,1]},"class":{"r":1,"n":3,"q":3}})");
        auto rep = verify_membership(bad, 2, 1);
        CHECK(rep.verdict == Verdict::fail);
        CHECK_FALSE(rep.reason.empty());
        auto other_r = spec(R"({"family":"Scroll","params":{"a":[1,1]},"class":{"r":2,"n":3,"q":2}})");
        CHECK(verify_membership(other_r, 2, 1).verdict == Verdict::fail);
    }

    TEST_CASE("osculating projections onto Veronese varieties") {
        auto rep = verify_veronese_projection(spec(R"({"family":"StandardScroll","params":{"a":[1,1],"rho":2,"chi":0}})"), 3, 5);
        CHECK(rep.verdict == Verdict::pass);
        CHECK(rep.weights == std::vector<unsigned>{1, 2});
        CHECK(rep.image_span == 5);
        CHECK(rep.expected_span == pi_formula(1, 2, 2));
        CHECK(rep.curves.size() == 3);
        CHECK_FALSE(rep.single_point.empty());
        for (const auto& c : rep.curves) {
            REQUIRE(c.certificate.has_value());
            CHECK(c.certificate->degree == 2);
            CHECK(c.injective);
        }
        for (const auto& g : rep.single_point) CHECK(g.span_found == g.span_expected);

        auto big = verify_veronese_projection(spec(R"({"family":"StandardScroll","params":{"a":[2,1,1],"rho":1,"chi":1}})"), 2, 5);
        CHECK(big.verdict == Verdict::pass);
        CHECK(big.weights == ClassParams::make(2, 5, 5).weights());
        CHECK(big.expected_span == pi_formula(2, 2, 1));
        CHECK_THROWS(verify_veronese_projection(spec(R"({"family":"Veronese","params":{"dim":2,"order":3}})"), 1, 5));
    }

    TEST_CASE("specialness witnesses") {
        auto segre = specialness_witness(spec(R"({"family":"SegreSpecial","params":{"r":2,"mu":4}})"));
        CHECK(segre.kind == WitnessKind::contact_dimension);
        CHECK(segre.measured == 1);
        CHECK(segre.reference == 2);
        CHECK(segre.special);
        CHECK(segre.components.size() == 2);
        CHECK_FALSE(segre.controls.empty());

        auto segre3 = specialness_witness(spec(R"({"family":"SegreSpecial","params":{"r":3,"mu":4}})"));
        CHECK(segre3.measured == 2);
        CHECK(segre3.special);

        auto cubic = specialness_witness(spec(R"({"family":"CubicSpecial","params":{"r":2,"mu_prime":2}})"));
        CHECK(cubic.measured < cubic.reference);
        CHECK(cubic.special);

        auto v33 = specialness_witness(spec(R"({"family":"Veronese33"})"));
        CHECK(v33.kind == WitnessKind::regularity_order);
        CHECK(v33.measured == 3);
        CHECK(v33.special);
        CHECK(v33.controls.size() >= 2);
        for (const auto& c : v33.controls) CHECK(c.value < 3);

        auto control = specialness_witness(spec(R"({"family":"StandardScroll","params":{"a":[1,1,0],"rho":1,"chi":1}})"));
        CHECK_FALSE(control.special);
        CHECK(control.verdict() == "standard-compatible");
        CHECK(control.measured == 2);

        CHECK_THROWS_AS(specialness_witness(spec(R"({"family":"Veronese","params":{"dim":2,"order":3}})")),
                        InvalidParameters);
    }

    TEST_CASE("inequivalence of the two branches") {
        auto same = inequivalence_invariants(ScrollSpec({2, 0}), 3);
        CHECK(same.mode == "identical");
        CHECK(same.holds);
        CHECK(build_A(ScrollSpec({2, 0}), 3, -1) == build_A(ScrollSpec({2, 0}), 2, 1));

        auto swap = inequivalence_invariants(ScrollSpec({1, 1}), 3);
        CHECK(swap.mode == "swap");
        CHECK(swap.holds);

        auto contact = inequivalence_invariants(ScrollSpec({2, 1, 1}), 2);
        CHECK(contact.mode == "contact");
        CHECK(contact.holds);
        CHECK(contact.contact_minus <= 1);
        CHECK(contact.contact_alt == 2);
    }
}
