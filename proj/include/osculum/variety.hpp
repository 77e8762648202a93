#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "osculum/catalog.hpp"
#include "osculum/parametrization.hpp"

namespace osculum {

using Json = nlohmann::ordered_json;

struct VeroneseFamily {
    int dim = 2, order = 2;
};
struct ScrollFamily {
    ScrollSpec a;
};
struct StandardScrollFamily {
    ScrollSpec a;
    int rho = 1, chi = 0;
};
struct ConeStandardFamily {
    int r = 1, q = 4;
};
struct QuadricVeroneseFamily {
    int r = 3, rho = 1, rank = 5;
};
struct SegreSpecialFamily {
    int r = 2, mu = 3;
};
struct CubicSpecialFamily {
    int r = 2, mu_prime = 1;
};
struct Veronese33Family {};

using Family = std::variant<VeroneseFamily, ScrollFamily, StandardScrollFamily, ConeStandardFamily,
                            QuadricVeroneseFamily, SegreSpecialFamily, CubicSpecialFamily, Veronese33Family>;

struct ClassTriple {
    int r = 1, n = 2, q = 1;
    bool operator==(const ClassTriple&) const = default;
    std::string to_string() const;
};

struct VarietySpec {
    Family family;
    std::optional<ClassTriple> declared;

    // Class the family belongs to by construction.
    ClassTriple intrinsic_class() const;
    ClassTriple declared_class() const { return declared.value_or(intrinsic_class()); }
    std::string family_name() const;
    std::string to_string() const;
    // Throws InvalidParameters on out-of-range family parameters.
    void validate() const;
};

VarietySpec parse_variety_spec(const Json& doc);
VarietySpec parse_variety_spec_text(std::string_view text);
Json to_json(const VarietySpec& spec);

Parametrization make_variety(const VarietySpec& spec);

// The monomial index set behind a StandardScroll, Scroll or ConeStandard spec.
std::optional<IndexSet> monomial_index_set(const VarietySpec& spec);

}  // namespace osculum
