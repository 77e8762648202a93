#include "osculum/variety.hpp"

#include "osculum/errors.hpp"

namespace osculum {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string> names_with_prefix(std::vector<std::string> head, const std::string& prefix, int count) {
    for (int i = 1; i <= count; ++i) head.push_back(prefix + std::to_string(i));
    return head;
}

std::vector<std::string> veronese_names(int dim) {
    if (dim == 1) return {"t"};
    if (dim == 2) return {"s", "t"};
    return names_with_prefix({}, "t", dim);
}

Parametrization veronese(int dim, int order) {
    std::vector<Polynomial> comps;
    for (const auto& e : indices_in_degree_range(dim, 1, order)) comps.push_back(Polynomial::monomial(e));
    return Parametrization::affine(dim, std::move(comps), veronese_names(dim));
}

// q(s) embedded in the variables (t, s_1..s_r) with t first
Polynomial quadric_in_s(int r, int rank) {
    Polynomial qs = QuadraticForm::hyperbolic(rank, r).as_polynomial();
    std::vector<Polynomial> subs;
    for (int j = 0; j < r; ++j) subs.push_back(Polynomial::variable(r + 1, j + 1));
    return qs.compose(subs);
}

int get_int(const Json& params, const char* key) {
    if (!params.contains(key)) throw ParseError(std::string("missing parameter \"") + key + "\"");
    const auto& v = params.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("parameter \"") + key + "\" must be an integer");
    return v.get<int>();
}

ScrollSpec get_scroll(const Json& params) {
    if (!params.contains("a") || !params.at("a").is_array()) throw ParseError("missing integer array parameter \"a\"");
    std::vector<int> a;
    for (const auto& x : params.at("a")) {
        if (!x.is_number_integer()) throw ParseError("scroll degrees must be integers");
        a.push_back(x.get<int>());
    }
    return ScrollSpec(std::move(a));
}

Json scroll_json(const ScrollSpec& a) { return Json(a.degrees()); }

}  // namespace

std::string ClassTriple::to_string() const {
    return "(" + std::to_string(r) + "," + std::to_string(n) + "," + std::to_string(q) + ")";
}

ClassTriple VarietySpec::intrinsic_class() const {
    return std::visit(
        Overloaded{
            [](const VeroneseFamily& f) { return ClassTriple{f.dim - 1, 2, f.order}; },
            [](const ScrollFamily& f) { return ClassTriple{f.a.r(), f.a.n(), f.a.n() - 1}; },
            [](const StandardScrollFamily& f) {
                return ClassTriple{f.a.r(), f.a.n(), f.rho * (f.a.n() - 1) + f.chi};
            },
            [](const ConeStandardFamily& f) { return ClassTriple{f.r, 5, f.q}; },
            [](const QuadricVeroneseFamily& f) { return ClassTriple{f.r, 3, 2 * f.rho}; },
            [](const SegreSpecialFamily& f) { return ClassTriple{f.r, 3, 3}; },
            [](const CubicSpecialFamily& f) { return ClassTriple{f.r, 4, 5}; },
            [](const Veronese33Family&) { return ClassTriple{2, 6, 9}; },
        },
        family);
}

std::string VarietySpec::family_name() const {
    return std::visit(Overloaded{
                          [](const VeroneseFamily&) { return std::string("Veronese"); },
                          [](const ScrollFamily&) { return std::string("Scroll"); },
                          [](const StandardScrollFamily&) { return std::string("StandardScroll"); },
                          [](const ConeStandardFamily&) { return std::string("ConeStandard"); },
                          [](const QuadricVeroneseFamily&) { return std::string("QuadricVeronese"); },
                          [](const SegreSpecialFamily&) { return std::string("SegreSpecial"); },
                          [](const CubicSpecialFamily&) { return std::string("CubicSpecial"); },
                          [](const Veronese33Family&) { return std::string("Veronese33"); },
                      },
                      family);
}

std::string VarietySpec::to_string() const {
    auto args = std::visit(
        Overloaded{
            [](const VeroneseFamily& f) { return std::to_string(f.dim) + "," + std::to_string(f.order); },
            [](const ScrollFamily& f) { return f.a.to_string(); },
            [](const StandardScrollFamily& f) {
                return f.a.to_string() + "," + std::to_string(f.rho) + "," + std::to_string(f.chi);
            },
            [](const ConeStandardFamily& f) { return std::to_string(f.r) + "," + std::to_string(f.q); },
            [](const QuadricVeroneseFamily& f) {
                return std::to_string(f.r) + "," + std::to_string(f.rho) + "," + std::to_string(f.rank);
            },
            [](const SegreSpecialFamily& f) { return std::to_string(f.r) + "," + std::to_string(f.mu); },
            [](const CubicSpecialFamily& f) { return std::to_string(f.r) + "," + std::to_string(f.mu_prime); },
            [](const Veronese33Family&) { return std::string(); },
        },
        family);
    std::string s = family_name() + (args.empty() ? "" : "(" + args + ")");
    if (declared) s += " declared " + declared->to_string();
    return s;
}

void VarietySpec::validate() const {
    std::visit(
        Overloaded{
            [](const VeroneseFamily& f) {
                if (f.dim < 1 || f.order < 1) throw InvalidParameters("Veronese needs dim >= 1 and order >= 1");
            },
            [](const ScrollFamily& f) {
                if (f.a.r() < 1) throw InvalidParameters("Scroll needs at least two degrees");
            },
            [](const StandardScrollFamily& f) {
                if (f.a.r() < 1) throw InvalidParameters("StandardScroll needs at least two degrees");
                build_A(f.a, f.rho, f.chi);
            },
            [](const ConeStandardFamily& f) { build_A_cone(f.r, f.q); },
            [](const QuadricVeroneseFamily& f) {
                if (f.r < 1 || f.rho < 1) throw InvalidParameters("QuadricVeronese needs r >= 1 and rho >= 1");
                if (f.rank < 5 || f.rank > f.r + 3)
                    throw InvalidParameters("QuadricVeronese needs 5 <= rank <= r+3");
            },
            [](const SegreSpecialFamily& f) {
                if (f.r < 1 || f.mu < 3 || f.mu > f.r + 2)
                    throw InvalidParameters("SegreSpecial needs r >= 1 and 3 <= mu <= r+2");
            },
            [](const CubicSpecialFamily& f) {
                if (f.r < 1 || f.mu_prime < 1 || f.mu_prime > f.r)
                    throw InvalidParameters("CubicSpecial needs r >= 1 and 1 <= mu' <= r");
            },
            [](const Veronese33Family&) {},
        },
        family);
}

VarietySpec parse_variety_spec(const Json& doc) {
    if (!doc.is_object() || !doc.contains("family") || !doc.at("family").is_string())
        throw ParseError("spec must be an object with a string \"family\"");
    std::string fam = doc.at("family").get<std::string>();
    Json params = doc.contains("params") ? doc.at("params") : Json::object();
    if (!params.is_object()) throw ParseError("\"params\" must be an object");
    VarietySpec spec;
    if (fam == "Veronese") {
        spec.family = VeroneseFamily{get_int(params, "dim"), get_int(params, "order")};
    } else if (fam == "Scroll") {
        spec.family = ScrollFamily{get_scroll(params)};
    } else if (fam == "StandardScroll") {
        spec.family = StandardScrollFamily{get_scroll(params), get_int(params, "rho"), get_int(params, "chi")};
    } else if (fam == "ConeStandard") {
        spec.family = ConeStandardFamily{get_int(params, "r"), get_int(params, "q")};
    } else if (fam == "QuadricVeronese") {
        spec.family = QuadricVeroneseFamily{get_int(params, "r"), get_int(params, "rho"), get_int(params, "rank")};
    } else if (fam == "SegreSpecial") {
        spec.family = SegreSpecialFamily{get_int(params, "r"), get_int(params, "mu")};
    } else if (fam == "CubicSpecial") {
        spec.family = CubicSpecialFamily{get_int(params, "r"), get_int(params, "mu_prime")};
    } else if (fam == "Veronese33") {
        spec.family = Veronese33Family{};
    } else {
        throw ParseError("unknown family \"" + fam + "\"");
    }
    if (doc.contains("class")) {
        const auto& c = doc.at("class");
        if (!c.is_object()) throw ParseError("\"class\" must be an object");
        spec.declared = ClassTriple{get_int(c, "r"), get_int(c, "n"), get_int(c, "q")};
    }
    spec.validate();
    return spec;
}

VarietySpec parse_variety_spec_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_variety_spec(doc);
}

Json to_json(const VarietySpec& spec) {
    Json j;
    j["family"] = spec.family_name();
    j["params"] = std::visit(
        Overloaded{
            [](const VeroneseFamily& f) { return Json{{"dim", f.dim}, {"order", f.order}}; },
            [](const ScrollFamily& f) { return Json{{"a", scroll_json(f.a)}}; },
            [](const StandardScrollFamily& f) {
                return Json{{"a", scroll_json(f.a)}, {"rho", f.rho}, {"chi", f.chi}};
            },
            [](const ConeStandardFamily& f) { return Json{{"r", f.r}, {"q", f.q}}; },
            [](const QuadricVeroneseFamily& f) { return Json{{"r", f.r}, {"rho", f.rho}, {"rank", f.rank}}; },
            [](const SegreSpecialFamily& f) { return Json{{"r", f.r}, {"mu", f.mu}}; },
            [](const CubicSpecialFamily& f) { return Json{{"r", f.r}, {"mu_prime", f.mu_prime}}; },
            [](const Veronese33Family&) { return Json::object(); },
        },
        spec.family);
    if (spec.declared) j["class"] = Json{{"r", spec.declared->r}, {"n", spec.declared->n}, {"q", spec.declared->q}};
    return j;
}

std::optional<IndexSet> monomial_index_set(const VarietySpec& spec) {
    if (auto f = std::get_if<ScrollFamily>(&spec.family)) return build_A(f->a, 1, 0);
    if (auto f = std::get_if<StandardScrollFamily>(&spec.family)) return build_A(f->a, f->rho, f->chi);
    if (auto f = std::get_if<ConeStandardFamily>(&spec.family)) return build_A_cone(f->r, f->q);
    return std::nullopt;
}

Parametrization make_variety(const VarietySpec& spec) {
    spec.validate();
    return std::visit(
        Overloaded{
            [](const VeroneseFamily& f) { return veronese(f.dim, f.order); },
            [](const ScrollFamily& f) {
                return monomial_parametrization(build_A(f.a, 1, 0), names_with_prefix({"t"}, "s", f.a.r()));
            },
            [](const StandardScrollFamily& f) {
                return monomial_parametrization(build_A(f.a, f.rho, f.chi), names_with_prefix({"t"}, "s", f.a.r()));
            },
            [](const ConeStandardFamily& f) {
                return monomial_parametrization(build_A_cone(f.r, f.q), names_with_prefix({"t1", "t2"}, "s", f.r - 1));
            },
            [](const QuadricVeroneseFamily& f) {
                std::size_t d = static_cast<std::size_t>(f.r + 1);
                Polynomial u0 = -QuadraticForm::hyperbolic(f.rank - 2, d).as_polynomial();
                std::vector<Polynomial> comps;
                std::vector<Polynomial> u0_pow{Polynomial::constant(d, 1)};
                for (int a = 1; a <= f.rho; ++a) u0_pow.push_back(u0_pow.back() * u0);
                for (int a = f.rho; a >= 0; --a)
                    for (const auto& g : indices_of_degree(d, static_cast<unsigned>(f.rho - a)))
                        comps.push_back(u0_pow[a] * Polynomial::monomial(g));
                for (const auto& g : indices_in_degree_range(d, 1, static_cast<unsigned>(f.rho - 1)))
                    comps.push_back(Polynomial::monomial(g));
                return Parametrization::affine(d, std::move(comps), names_with_prefix({}, "u", f.r + 1));
            },
            [](const SegreSpecialFamily& f) {
                std::size_t d = static_cast<std::size_t>(f.r + 1);
                Polynomial t = Polynomial::variable(d, 0);
                Polynomial q = quadric_in_s(f.r, f.mu - 2);
                std::vector<Polynomial> comps{t};
                for (int j = 1; j <= f.r; ++j) comps.push_back(Polynomial::variable(d, j));
                for (int j = 1; j <= f.r; ++j) comps.push_back(t * Polynomial::variable(d, j));
                comps.push_back(q);
                comps.push_back(t * q);
                return Parametrization::affine(d, std::move(comps), names_with_prefix({"t"}, "s", f.r));
            },
            [](const CubicSpecialFamily& f) {
                std::size_t d = static_cast<std::size_t>(f.r + 1);
                Polynomial t = Polynomial::variable(d, 0);
                Polynomial q = quadric_in_s(f.r, f.mu_prime);
                std::vector<Polynomial> comps{t, t.pow(2), t.pow(3)};
                for (int j = 1; j <= f.r; ++j) comps.push_back(Polynomial::variable(d, j));
                for (int j = 1; j <= f.r; ++j) comps.push_back(t * Polynomial::variable(d, j));
                for (int j = 1; j <= f.r; ++j) comps.push_back(t.pow(2) * Polynomial::variable(d, j));
                comps.push_back(q);
                comps.push_back(t * q);
                return Parametrization::affine(d, std::move(comps), names_with_prefix({"t"}, "s", f.r));
            },
            [](const Veronese33Family&) { return veronese(3, 3); },
        },
        spec.family);
}

}  // namespace osculum
