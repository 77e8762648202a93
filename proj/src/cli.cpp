#include "osculum/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "osculum/errors.hpp"
#include "osculum/osculation.hpp"
#include "osculum/report.hpp"

namespace osculum::cli {

namespace {

struct Config {
    std::uint64_t seed = 1;
    std::size_t trials = 20;
    std::string format = "table";
    std::string spec_file;
    std::string spec_json;
    std::string r_range = "1:4", n_range = "2:6", q_range = "1:12";
    std::string point;
    unsigned order = 1;
};

VarietySpec load_spec(const Config& c) {
    if (!c.spec_json.empty()) return parse_variety_spec_text(c.spec_json);
    if (c.spec_file.empty()) throw ParseError("a variety spec is required (--spec FILE or --spec-json TEXT)");
    std::ifstream in(c.spec_file);
    if (!in) throw ParseError("cannot read spec file " + c.spec_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_variety_spec_text(buf.str());
}

std::pair<int, int> parse_range(const std::string& s) {
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ParseError("bad range \"" + s + "\" (expected LO:HI)");
    }
}

QVector parse_point(const std::string& s) {
    QVector p;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(parse_rational(item));
    return p;
}

bool json_out(const Config& c) { return c.format == "json"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_pi_table(const Config& c, std::ostream& out) {
    auto [r0, r1] = parse_range(c.r_range);
    auto [n0, n1] = parse_range(c.n_range);
    auto [q0, q1] = parse_range(c.q_range);
    if (r0 < 1 || n0 < 2 || r0 > r1 || n0 > n1 || q0 > q1) throw InvalidParameters("invalid ranges");
    Json rows = Json::array();
    std::vector<std::vector<std::string>> table{{"r", "n", "q", "rho", "m", "pi", "g(q+r(n-1)+2)-1"}};
    for (int r = r0; r <= r1; ++r)
        for (int n = n0; n <= n1; ++n)
            for (int q = std::max(q0, n - 1); q <= q1; ++q) {
                auto p = ClassParams::make(r, n, q);
                auto pi = pi_formula(p);
                auto g = castelnuovo_bound(r, n, q + r * (n - 1) + 2) - 1;
                rows.push_back(Json{{"r", r}, {"n", n}, {"q", q}, {"rho", p.rho}, {"m", p.m}, {"pi", pi}, {"castelnuovo", g}});
                table.push_back({std::to_string(r), std::to_string(n), std::to_string(q), std::to_string(p.rho),
                                 std::to_string(p.m), std::to_string(pi), std::to_string(g)});
            }
    if (json_out(c))
        emit(out, Json{{"schema", 1}, {"rows", rows}});
    else
        out << aligned(table);
    return kExitPass;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
    auto spec = load_spec(c);
    spec.validate();
    auto a = monomial_index_set(spec);
    if (!a) throw InvalidParameters("family " + spec.family_name() + " has no monomial index set");
    auto cls = spec.intrinsic_class();
    auto pi = pi_formula(cls.r, cls.n, cls.q);
    bool matches = static_cast<std::int64_t>(a->size()) == pi;
    std::optional<bool> identity;
    if (auto f = std::get_if<StandardScrollFamily>(&spec.family); f && f->a[0] == cls.n - 1) {
        // A(rho, -1) and A(rho - 1, n - 2) coincide when a_0 = n - 1
        if (f->chi == -1 && f->rho >= 2) identity = build_A(f->a, f->rho - 1, cls.n - 2) == *a;
        if (f->chi == cls.n - 2) identity = build_A(f->a, f->rho + 1, -1) == *a;
    }
    if (json_out(c)) {
        Json idx = Json::array();
        for (const auto& e : a->indices()) idx.push_back(e.exponents());
        Json j{{"schema", 1}, {"spec", to_json(spec)}, {"class", to_json(cls)}, {"indices", idx},
               {"cardinality", a->size()}, {"pi", pi}, {"matches_pi", matches}};
        if (identity) j["a0_identity"] = *identity;
        emit(out, j);
    } else {
        for (const auto& e : a->indices()) out << e.to_string() << '\n';
        out << "cardinality " << a->size() << "  pi " << pi << "  " << (matches ? "match" : "MISMATCH") << '\n';
        if (identity) out << "a0 = n-1 identity A(rho,-1) = A(rho-1,n-2): " << (*identity ? "holds" : "fails") << '\n';
    }
    return matches ? kExitPass : kExitFail;
}

int cmd_build(const Config& c, std::ostream& out) {
    auto spec = load_spec(c);
    auto v = make_variety(spec);
    auto comps = v.component_strings();
    long span = v.span().dim();
    auto cls = spec.declared_class();
    if (json_out(c)) {
        emit(out, Json{{"schema", 1}, {"spec", to_json(spec)}, {"class", to_json(cls)}, {"variables", v.names()},
                       {"components", comps}, {"ambient_dim", v.ambient_dim()}, {"span_dim", span}});
    } else {
        out << "spec      " << spec.to_string() << '\n' << "class     " << cls.to_string() << '\n';
        out << "ambient   P^" << v.ambient_dim() << "  span dim " << span << '\n';
        for (std::size_t i = 0; i < comps.size(); ++i) out << "x" << i << " = " << comps[i] << '\n';
    }
    return kExitPass;
}

int cmd_osculate(const Config& c, std::ostream& out) {
    auto spec = load_spec(c);
    auto v = make_variety(spec);
    QVector p = c.point.empty() ? QVector(v.param_dim()) : parse_point(c.point);
    if (p.size() != v.param_dim()) throw DimensionError("point must have " + std::to_string(v.param_dim()) + " coordinates");
    auto osc = osculator(v, p, c.order);
    unsigned reg = regularity_order(v, p);
    if (json_out(c)) {
        Json basis = Json::array();
        for (const auto& b : osc.subspace.vectors()) {
            Json row = Json::array();
            for (const auto& x : b) row.push_back(to_string(x));
            basis.push_back(row);
        }
        emit(out, Json{{"schema", 1}, {"spec", to_json(spec)}, {"order", c.order}, {"dim", osc.dim()},
                       {"expected_dim", osc.expected_dim_plus_1 - 1}, {"regular", osc.is_regular},
                       {"regularity_order", reg}, {"basis", basis}});
    } else {
        out << "osculator order " << c.order << " at " << to_string(p) << ": dim " << osc.dim() << " (regular "
            << (osc.is_regular ? "yes" : "no") << ", expected " << osc.expected_dim_plus_1 - 1 << ")\n";
        out << "regularity order " << reg << '\n';
    }
    return kExitPass;
}

int cmd_fit(const Config& c, std::ostream& out) {
    auto spec = load_spec(c);
    auto rep = verify_membership(spec, 1, c.seed);
    const auto& t = rep.trials.front();
    if (json_out(c)) {
        emit(out, Json{{"schema", 1}, {"spec", to_json(spec)}, {"class", to_json(rep.declared)}, {"trial", to_json(t)}});
    } else {
        out << "spec      " << spec.to_string() << '\n';
        if (!t.fit_ok) {
            out << "no fit: " << t.note << '\n';
        } else {
            for (const auto& p : t.points) out << "point     " << to_string(p) << '\n';
            out << "curve     " << t.curve->to_string() << '\n';
            out << "degree " << t.certificate->degree << "  span " << t.certificate->span_dim << "  rnc "
                << (t.certificate->is_rnc ? "yes" : "no") << "  incidence " << (t.incidence ? "yes" : "no") << '\n';
        }
    }
    if (!t.fit_ok) return kExitInconclusive;
    return t.incidence && t.certificate->is_rnc && t.certificate->degree == rep.declared.q ? kExitPass : kExitFail;
}

std::optional<SpecialnessWitness> optional_witness(const VarietySpec& spec, std::uint64_t seed) {
    if (std::holds_alternative<SegreSpecialFamily>(spec.family) || std::holds_alternative<CubicSpecialFamily>(spec.family) ||
        std::holds_alternative<Veronese33Family>(spec.family) || std::holds_alternative<StandardScrollFamily>(spec.family))
        return specialness_witness(spec, seed);
    return std::nullopt;
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::pass: return kExitPass;
        case Verdict::fail: return kExitFail;
        case Verdict::inconclusive: return kExitInconclusive;
    }
    return kExitFail;
}

int cmd_verify(const Config& c, std::ostream& out) {
    auto spec = load_spec(c);
    auto rep = verify_membership(spec, c.trials, c.seed);
    auto witness = rep.verdict == Verdict::pass ? optional_witness(spec, c.seed) : std::nullopt;
    if (json_out(c)) {
        Json j = to_json(rep);
        if (witness) j["witness"] = to_json(*witness);
        emit(out, j);
    } else {
        out << render_table(rep);
        if (witness) out << render_table(*witness);
    }
    return exit_for(rep.verdict);
}

int cmd_witness(const Config& c, std::ostream& out) {
    auto spec = load_spec(c);
    auto w = specialness_witness(spec, c.seed);
    if (json_out(c)) {
        Json j{{"schema", 1}, {"spec", to_json(spec)}};
        j["witness"] = to_json(w);
        emit(out, j);
    } else {
        out << "spec      " << spec.to_string() << '\n' << render_table(w);
    }
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact constructions and checks for varieties carrying rational normal curves", "osculum"};
    app.require_subcommand(1);
    Config c;
    auto add_spec = [&](CLI::App* s) {
        s->add_option("--spec", c.spec_file, "variety spec JSON file");
        s->add_option("--spec-json", c.spec_json, "variety spec as inline JSON");
    };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"table", "json"}));
    };
    auto add_seed = [&](CLI::App* s) { s->add_option("--seed", c.seed, "master seed"); };

    auto* pi = app.add_subcommand("pi-table", "pi values with the Castelnuovo identity column");
    pi->add_option("--r", c.r_range, "range LO:HI");
    pi->add_option("--n", c.n_range, "range LO:HI");
    pi->add_option("--q", c.q_range, "range LO:HI");
    add_format(pi);
    auto* en = app.add_subcommand("enumerate", "list the monomial index set of a spec");
    add_spec(en);
    add_format(en);
    auto* bu = app.add_subcommand("build", "print the parametrization of a spec");
    add_spec(bu);
    add_format(bu);
    auto* os = app.add_subcommand("osculate", "osculating space at a parameter point");
    add_spec(os);
    add_format(os);
    os->add_option("--point", c.point, "comma-separated rationals (default: origin)");
    os->add_option("--order", c.order, "osculation order");
    auto* fi = app.add_subcommand("fit", "fit one curve through random points");
    add_spec(fi);
    add_format(fi);
    add_seed(fi);
    auto* ve = app.add_subcommand("verify", "class-membership campaign");
    add_spec(ve);
    add_format(ve);
    add_seed(ve);
    ve->add_option("--trials", c.trials, "number of trials");
    auto* wi = app.add_subcommand("witness", "specialness witness");
    add_spec(wi);
    add_format(wi);
    add_seed(wi);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "osculum: " << e.what() << '\n';
        return kExitUsage;
    }
    try {
        if (pi->parsed()) return cmd_pi_table(c, out);
        if (en->parsed()) return cmd_enumerate(c, out);
        if (bu->parsed()) return cmd_build(c, out);
        if (os->parsed()) return cmd_osculate(c, out);
        if (fi->parsed()) return cmd_fit(c, out);
        if (ve->parsed()) return cmd_verify(c, out);
        if (wi->parsed()) return cmd_witness(c, out);
    } catch (const ParseError& e) {
        err << "osculum: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidParameters& e) {
        err << "osculum: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionError& e) {
        err << "osculum: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "osculum: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace osculum::cli
