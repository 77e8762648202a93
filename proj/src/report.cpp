#include "osculum/report.hpp"

#include <algorithm>
#include <sstream>

namespace osculum {

namespace {

Json rational_list(const QVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json to_json(const ClassTriple& c) { return Json{{"r", c.r}, {"n", c.n}, {"q", c.q}}; }

Json to_json(const RationalCurve& c) {
    Json a = Json::array();
    for (const auto& p : c.components()) a.push_back(rational_list(p.coeffs()));
    return a;
}

Json to_json(const CurveCertificate& c) {
    return Json{{"degree", c.degree}, {"span_dim", c.span_dim}, {"is_rnc", c.is_rnc}};
}

Json to_json(const TrialRecord& t) {
    Json j{{"seed", t.seed}, {"attempts", t.attempts}, {"fit", t.fit_ok}};
    if (t.fit_ok) {
        Json pts = Json::array();
        for (const auto& p : t.points) pts.push_back(rational_list(p));
        j["points"] = pts;
        j["certificate"] = to_json(*t.certificate);
        j["incidence"] = t.incidence;
        if (t.radicand) j["radicand"] = to_string(*t.radicand);
        j["curve"] = to_json(*t.curve);
    }
    if (!t.note.empty()) j["note"] = t.note;
    return j;
}

Json to_json(const MembershipReport& r) {
    Json j{{"schema", 1}, {"spec", to_json(r.spec)}, {"class", to_json(r.declared)}};
    Json span{{"found", r.span_found}};
    span["expected"] = r.span_expected ? Json(*r.span_expected) : Json(nullptr);
    j["span"] = span;
    Json trials = Json::array();
    for (const auto& t : r.trials) trials.push_back(to_json(t));
    j["trials"] = trials;
    j["admissible"] = r.admissible ? Json(*r.admissible) : Json(nullptr);
    j["verdict"] = to_string(r.verdict);
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

Json to_json(const ProjectionReport& r) {
    Json j{{"schema", 1}, {"spec", to_json(r.spec)}, {"weights", r.weights}};
    j["span"] = Json{{"found", r.image_span}, {"expected", r.expected_span}};
    Json curves = Json::array();
    for (const auto& c : r.curves) {
        Json e{{"seed", c.seed}, {"injective", c.injective}};
        if (c.certificate) e["certificate"] = to_json(*c.certificate);
        if (!c.note.empty()) e["note"] = c.note;
        curves.push_back(e);
    }
    j["curves"] = curves;
    Json single = Json::array();
    for (const auto& g : r.single_point)
        single.push_back(Json{{"weight", g.weight}, {"found", g.span_found}, {"expected", g.span_expected}});
    j["single_point"] = single;
    j["verdict"] = to_string(r.verdict);
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

Json to_json(const SpecialnessWitness& w) {
    Json j{{"kind", w.kind == WitnessKind::regularity_order ? "regularity-order" : "contact-dimension"},
           {"measured", w.measured},
           {"reference", w.reference}};
    Json controls = Json::array();
    for (const auto& c : w.controls) controls.push_back(Json{{"model", c.label}, {"value", c.value}});
    j["controls"] = controls;
    if (!w.components.empty()) j["components"] = w.components;
    j["verdict"] = w.verdict();
    return j;
}

Json to_json(const InequivalenceReport& r) {
    return Json{{"a", r.a.degrees()},          {"rho", r.rho},
                {"mode", r.mode},              {"holds", r.holds},
                {"contact_minus", r.contact_minus}, {"contact_alt", r.contact_alt}};
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

std::string render_table(const MembershipReport& r) {
    std::ostringstream os;
    os << "spec      " << r.spec.to_string() << '\n';
    os << "class     " << r.declared.to_string() << '\n';
    os << "span      " << r.span_found << " (pi = "
       << (r.span_expected ? std::to_string(*r.span_expected) : std::string("n/a")) << ")\n";
    if (r.admissible) os << "admissible " << yes_no(*r.admissible) << '\n';
    std::vector<std::vector<std::string>> rows{{"trial", "seed", "tries", "degree", "span", "rnc", "incidence", "note"}};
    for (std::size_t i = 0; i < r.trials.size(); ++i) {
        const auto& t = r.trials[i];
        std::vector<std::string> row{std::to_string(i), std::to_string(t.seed), std::to_string(t.attempts)};
        if (t.fit_ok) {
            row.push_back(std::to_string(t.certificate->degree));
            row.push_back(std::to_string(t.certificate->span_dim));
            row.push_back(yes_no(t.certificate->is_rnc));
            row.push_back(yes_no(t.incidence));
        } else {
            row.insert(row.end(), {"-", "-", "-", "-"});
        }
        std::string note = t.note;
        if (t.radicand) note += (note.empty() ? "" : "; ") + std::string("via sqrt(") + to_string(*t.radicand) + ")";
        row.push_back(note);
        rows.push_back(row);
    }
    if (!r.trials.empty()) os << aligned(rows);
    os << "verdict   " << to_string(r.verdict);
    if (!r.reason.empty()) os << " (" << r.reason << ")";
    os << '\n';
    return os.str();
}

std::string render_table(const ProjectionReport& r) {
    std::ostringstream os;
    os << "spec      " << r.spec.to_string() << '\n';
    os << "weights  ";
    for (auto w : r.weights) os << ' ' << w;
    os << '\n' << "image span " << r.image_span << " (expected " << r.expected_span << ")\n";
    std::vector<std::vector<std::string>> rows{{"seed", "degree", "span", "rnc", "injective", "note"}};
    for (const auto& c : r.curves) {
        std::vector<std::string> row{std::to_string(c.seed)};
        if (c.certificate)
            row.insert(row.end(), {std::to_string(c.certificate->degree), std::to_string(c.certificate->span_dim),
                                   yes_no(c.certificate->is_rnc)});
        else
            row.insert(row.end(), {"-", "-", "-"});
        row.push_back(yes_no(c.injective));
        row.push_back(c.note);
        rows.push_back(row);
    }
    os << aligned(rows);
    for (const auto& g : r.single_point)
        os << "single point weight " << g.weight << ": span " << g.span_found << " (expected " << g.span_expected << ")\n";
    os << "verdict   " << to_string(r.verdict) << '\n';
    return os.str();
}

std::string render_table(const SpecialnessWitness& w) {
    std::ostringstream os;
    os << "witness   " << (w.kind == WitnessKind::regularity_order ? "regularity-order" : "contact-dimension") << '\n';
    os << "measured  " << w.measured << '\n' << "reference " << w.reference << '\n';
    for (const auto& c : w.components) os << "component " << c << '\n';
    std::vector<std::vector<std::string>> rows{{"control", "value"}};
    for (const auto& c : w.controls) rows.push_back({c.label, std::to_string(c.value)});
    os << aligned(rows);
    os << "verdict   " << w.verdict() << '\n';
    return os.str();
}

}  // namespace osculum
