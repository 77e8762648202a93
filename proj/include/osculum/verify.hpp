#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osculum/fit.hpp"
#include "osculum/rnc.hpp"
#include "osculum/variety.hpp"

namespace osculum {

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

inline constexpr int kMaxRetries = 8;

struct TrialRecord {
    std::uint64_t seed = 0;
    int attempts = 0;
    bool fit_ok = false;
    std::vector<QVector> points;
    std::optional<RationalCurve> curve;
    std::optional<CurveCertificate> certificate;
    std::optional<Rational> radicand;
    bool incidence = false;
    std::string note;
};

struct MembershipReport {
    VarietySpec spec;
    ClassTriple declared;
    long span_found = -1;
    std::optional<std::int64_t> span_expected;
    std::optional<bool> admissible;  // canonical weights at the first trial's points
    std::vector<TrialRecord> trials;
    Verdict verdict = Verdict::fail;
    std::string reason;
};

MembershipReport verify_membership(const VarietySpec& spec, std::size_t trials, std::uint64_t seed);

struct ProjectedCurve {
    std::uint64_t seed = 0;
    std::optional<CurveCertificate> certificate;
    bool injective = false;
    std::string note;
};

struct ProjGeneCheck {
    unsigned weight = 0;
    long span_found = -1;
    std::int64_t span_expected = -1;
};

struct ProjectionReport {
    VarietySpec spec;
    std::vector<unsigned> weights;
    long image_span = -1;
    std::int64_t expected_span = -1;
    std::vector<ProjectedCurve> curves;
    std::vector<ProjGeneCheck> single_point;
    Verdict verdict = Verdict::fail;
    std::string reason;
};

// Projection from the osculators at n-2 of the points, weighted by the pondération.
ProjectionReport verify_veronese_projection(const VarietySpec& spec, std::size_t trials, std::uint64_t seed);

enum class WitnessKind { regularity_order, contact_dimension };

struct ControlValue {
    std::string label;
    long value = 0;
};

struct SpecialnessWitness {
    WitnessKind kind = WitnessKind::contact_dimension;
    long measured = 0;
    long reference = 0;
    std::vector<ControlValue> controls;
    std::vector<std::string> components;  // contact-locus components checked for containment
    bool special = false;
    std::string verdict() const { return special ? "special" : "standard-compatible"; }
};

SpecialnessWitness specialness_witness(const VarietySpec& spec, std::uint64_t seed = 0);

struct InequivalenceReport {
    ScrollSpec a;
    int rho = 2;
    std::string mode;  // "identical", "swap" or "contact"
    bool holds = false;
    long contact_minus = -1;  // A(rho, -1) at order rho - 1
    long contact_alt = -1;    // A(rho - 1, n - 2) at order rho - 1
};

InequivalenceReport inequivalence_invariants(const ScrollSpec& a, int rho);

}  // namespace osculum
