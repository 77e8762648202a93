#include "osculum/verify.hpp"

#include <algorithm>

#include "osculum/errors.hpp"
#include "osculum/osculation.hpp"
#include "osculum/random.hpp"

namespace osculum {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::vector<QVector> sample_points(Rng& rng, std::size_t count, std::size_t dim) {
    std::vector<QVector> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back(rng.small_vector(dim));
    return pts;
}

bool incidence_holds(const Parametrization& v, const CurveFit& fit, const std::vector<QVector>& pts) {
    if (fit.params.size() != pts.size()) return false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        QVector x = v.point(pts[i]);
        if (!proportional(x, fit.curve.eval(fit.params[i]))) return false;
        auto found = parameters_of(fit.curve, x);
        if (std::find(found.begin(), found.end(), fit.params[i]) == found.end()) return false;
    }
    return true;
}

// One fitted curve through n freshly sampled points, resampling on genericity failures.
// Returns false when every attempt was rejected as non-generic.
struct Attempt {
    std::vector<QVector> points;
    std::optional<CurveFit> fit;
    int attempts = 0;
    std::string note;
};

Attempt fit_with_retries(const VarietySpec& spec, const Parametrization& v, std::size_t n, std::uint64_t seed) {
    Attempt a;
    for (int k = 0; k <= kMaxRetries; ++k) {
        ++a.attempts;
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
        auto pts = sample_points(rng, n, v.param_dim());
        try {
            a.fit = fit_rnc_through(spec, v, pts);
            a.points = std::move(pts);
            return a;
        } catch (const GenericityFailure& e) {
            a.note = e.what();
        } catch (const DegenerateCurveError& e) {
            a.note = e.what();
        }
    }
    return a;
}

}  // namespace

MembershipReport verify_membership(const VarietySpec& spec, std::size_t trials, std::uint64_t seed) {
    spec.validate();
    MembershipReport rep;
    rep.spec = spec;
    rep.declared = spec.declared_class();
    auto intrinsic = spec.intrinsic_class();
    auto v = make_variety(spec);
    rep.span_found = v.span().dim();
    std::optional<ClassParams> cls;
    try {
        cls = ClassParams::make(rep.declared.r, rep.declared.n, rep.declared.q);
        rep.span_expected = pi_formula(*cls);
    } catch (const InvalidParameters& e) {
        rep.reason = std::string("declared class is not valid: ") + e.what();
        return rep;
    }
    if (rep.declared.r != intrinsic.r || rep.declared.n != intrinsic.n) {
        rep.reason = "declared (r, n) does not match the construction " + intrinsic.to_string();
        return rep;
    }
    bool failed = false, inconclusive = false;
    if (rep.span_found != *rep.span_expected) {
        failed = true;
        rep.reason = "span dimension " + std::to_string(rep.span_found) + " differs from pi = " +
                     std::to_string(*rep.span_expected);
    }
    std::size_t n = static_cast<std::size_t>(rep.declared.n);
    for (std::size_t i = 0; i < trials; ++i) {
        TrialRecord rec;
        rec.seed = derive_seed(seed, i);
        for (int k = 0; k <= kMaxRetries && !rec.fit_ok; ++k) {
            ++rec.attempts;
            Rng rng(derive_seed(rec.seed, static_cast<std::uint64_t>(k)));
            auto pts = sample_points(rng, n, v.param_dim());
            std::optional<CurveFit> fit;
            try {
                fit = fit_rnc_through(spec, v, pts);
            } catch (const GenericityFailure& e) {
                rec.note = e.what();
                continue;
            } catch (const DegenerateCurveError& e) {
                rec.note = e.what();
                continue;
            }
            auto cert = certify_curve(fit->curve);
            bool inc = incidence_holds(v, *fit, pts);
            bool ok = inc && cert.is_rnc && cert.degree == rep.declared.q;
            if (!ok && !admissibility_check(v, pts, cls->weights()).admissible) {
                rec.note = "sample points not admissible";
                continue;
            }
            rec.fit_ok = true;
            rec.points = std::move(pts);
            rec.curve = fit->curve;
            rec.certificate = cert;
            rec.radicand = fit->radicand;
            rec.incidence = inc;
            rec.note = ok ? "" : "curve is not a degree-" + std::to_string(rep.declared.q) + " rational normal curve";
            if (!ok) failed = true;
        }
        if (!rec.fit_ok) {
            inconclusive = true;
            rec.note = "no generic sample after " + std::to_string(kMaxRetries) + " retries: " + rec.note;
        }
        rep.trials.push_back(std::move(rec));
    }
    for (const auto& t : rep.trials)
        if (t.fit_ok) {
            rep.admissible = admissibility_check(v, t.points, cls->weights()).admissible;
            if (!*rep.admissible) {
                failed = true;
                if (rep.reason.empty()) rep.reason = "osculators at the sample points are not in direct sum";
            }
            break;
        }
    if (failed) {
        if (rep.reason.empty()) rep.reason = "a trial did not produce a certified curve through its points";
        rep.verdict = Verdict::fail;
    } else if (inconclusive) {
        rep.reason = "genericity failures persisted after retries";
        rep.verdict = Verdict::inconclusive;
    } else {
        rep.verdict = Verdict::pass;
    }
    return rep;
}

ProjectionReport verify_veronese_projection(const VarietySpec& spec, std::size_t trials, std::uint64_t seed) {
    spec.validate();
    ProjectionReport rep;
    rep.spec = spec;
    auto cl = spec.declared_class();
    auto cls = ClassParams::make(cl.r, cl.n, cl.q);
    if (cls.n < 3) throw InvalidParameters("osculating projection needs n >= 3");
    rep.weights = cls.weights();
    rep.expected_span = pi_formula(cls.r, 2, cls.rho);
    auto v = make_variety(spec);
    std::size_t n = static_cast<std::size_t>(cls.n);
    bool failed = false, inconclusive = false;
    std::optional<std::vector<QVector>> first_points;
    for (std::size_t i = 0; i < trials; ++i) {
        ProjectedCurve pc;
        pc.seed = derive_seed(seed, i);
        bool done = false;
        for (int k = 0; k <= kMaxRetries && !done; ++k) {
            auto a = fit_with_retries(spec, v, n, derive_seed(pc.seed, static_cast<std::uint64_t>(k)));
            if (!a.fit) {
                pc.note = a.note;
                continue;
            }
            std::vector<Center> centers;
            for (std::size_t j = 0; j + 2 < n; ++j) centers.push_back({a.points[j], rep.weights[j]});
            std::optional<OsculatingProjection> op;
            try {
                op = osculating_projection(v, centers);
            } catch (const GenericityFailure& e) {
                pc.note = e.what();
                continue;
            }
            done = true;
            if (!first_points) first_points = a.points;
            long span = op->image.span().dim();
            if (rep.image_span < 0) rep.image_span = span;
            if (span != rep.expected_span) {
                failed = true;
                pc.note = "image span " + std::to_string(span);
            }
            const auto& m = op->projection.matrix;
            const auto& c = a.fit->curve.components();
            std::vector<UPoly> comps(m.rows());
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (!is_zero(m(r, j))) comps[r] += c[j] * m(r, j);
            if (std::all_of(comps.begin(), comps.end(), [](const UPoly& p) { return p.is_zero(); })) {
                failed = true;
                pc.note = "curve lies in the center";
                break;
            }
            RationalCurve image = curve_normalize(RationalCurve(std::move(comps)));
            pc.certificate = certify_curve(image);
            // injectivity at sampled parameters away from the centers
            Rng rng(derive_seed(pc.seed, 1000));
            std::vector<QVector> seen;
            pc.injective = true;
            for (int s = 0; s < 4; ++s) {
                Rational u = rng.small_rational() + s * 20;
                QVector x = image.eval(u);
                if (is_zero_vector(x)) {
                    pc.injective = false;
                    break;
                }
                for (const auto& y : seen)
                    if (proportional(x, y)) pc.injective = false;
                seen.push_back(std::move(x));
            }
            if (!pc.certificate->is_rnc || pc.certificate->degree != cls.rho || !pc.injective) {
                failed = true;
                if (pc.note.empty()) pc.note = "projected curve is not a degree-" + std::to_string(cls.rho) + " RNC";
            }
        }
        if (!done) inconclusive = true;
        rep.curves.push_back(std::move(pc));
    }
    if (first_points) {
        std::vector<unsigned> distinct = rep.weights;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (unsigned w : distinct) {
            auto rest = rep.weights;
            rest.erase(std::find(rest.begin(), rest.end(), w));
            if (rest.empty() || *std::max_element(rest.begin(), rest.end()) < 1) continue;
            auto osc = osculator(v, (*first_points)[0], w);
            auto proj = projection_from(osc.subspace);
            ProjGeneCheck g{w, v.span().image(proj.matrix).dim(), pi_formula(cls.r, cls.n - 1, cls.q - static_cast<int>(w) - 1)};
            if (g.span_found != g.span_expected) failed = true;
            rep.single_point.push_back(g);
        }
    }
    if (failed) {
        rep.verdict = Verdict::fail;
        rep.reason = "projection checks failed";
    } else if (inconclusive) {
        rep.verdict = Verdict::inconclusive;
        rep.reason = "genericity failures persisted after retries";
    } else {
        rep.verdict = Verdict::pass;
    }
    return rep;
}

namespace {

// Affine parametrization s(lambda, w) of the cone q(s) = 0 where q = hyperbolic(rank, r);
// the returned polynomials are in 1 + (r - 2) variables, or r - 1 variables for rank 1.
std::vector<Polynomial> quadric_cone_chart(std::size_t r, std::size_t rank) {
    std::vector<Polynomial> s;
    if (rank == 1) {
        std::size_t k = r - 1;
        s.push_back(Polynomial(k));
        for (std::size_t j = 0; j < k; ++j) s.push_back(Polynomial::variable(k, j));
        return s;
    }
    std::size_t k = r - 1;
    Polynomial lam = Polynomial::variable(k, 0);
    std::vector<Polynomial> w;
    for (std::size_t j = 1; j < k; ++j) w.push_back(Polynomial::variable(k, j));
    Polynomial inner(k);
    if (r > 2) inner = QuadraticForm::hyperbolic(rank - 2, r - 2).as_polynomial().compose(w);
    s.push_back(-(lam * inner));
    s.push_back(lam);
    for (const auto& x : w) s.push_back(lam * x);
    return s;
}

// Checks that v o phi lies in the order-1 osculator at the origin; returns the dimension of phi.
long contained_component(const Parametrization& v, const QMatrix& forms, const std::vector<Polynomial>& phi,
                         std::size_t k) {
    if (k > 0) Parametrization::affine(k, phi);  // throws unless phi has generic rank k
    for (std::size_t f = 0; f < forms.rows(); ++f) {
        Polynomial acc(k);
        for (std::size_t x = 0; x < v.lift().size(); ++x)
            if (!is_zero(forms(f, x))) acc = acc + v.lift()[x].compose(phi) * forms(f, x);
        if (!acc.is_zero()) throw Error("contact-locus component is not contained in the osculator");
    }
    return static_cast<long>(k);
}

ScrollSpec padded(std::vector<int> head, int r) {
    head.resize(static_cast<std::size_t>(r + 1), 0);
    return ScrollSpec(head);
}

QVector generic_point(Rng& rng, std::size_t d) {
    QVector p;
    for (std::size_t i = 0; i < d; ++i) p.push_back(rng.nonzero_small_rational());
    return p;
}

SpecialnessWitness contact_witness(const VarietySpec& spec, int r, std::size_t rank, const ScrollSpec& control,
                                   int control_chi, bool with_line) {
    SpecialnessWitness w;
    w.kind = WitnessKind::contact_dimension;
    auto v = make_variety(spec);
    std::size_t d = v.param_dim();
    QMatrix forms = osculator(v, QVector(d), 1).subspace.annihilator();
    long dim = 0;
    if (with_line) {
        std::vector<Polynomial> phi{Polynomial::variable(1, 0)};
        for (std::size_t j = 1; j < d; ++j) phi.push_back(Polynomial(1));
        dim = std::max(dim, contained_component(v, forms, phi, 1));
        w.components.push_back("{s = 0}");
    }
    std::size_t k = static_cast<std::size_t>(r - 1);
    auto s = quadric_cone_chart(static_cast<std::size_t>(r), rank);
    std::vector<Polynomial> phi{Polynomial(k)};
    phi.insert(phi.end(), s.begin(), s.end());
    dim = std::max(dim, contained_component(v, forms, phi, k));
    w.components.push_back("{t = 0, q(s) = 0}");
    w.measured = dim;
    auto a_st = build_A(control, 1, control_chi);
    w.controls.push_back({"A(1," + std::to_string(control_chi) + ") a=" + control.to_string(),
                          contact_locus_dim_monomial(a_st, 1)});
    auto a_alt = build_A(control, 2, -1);
    w.controls.push_back({"A(2,-1) a=" + control.to_string(), contact_locus_dim_monomial(a_alt, 1)});
    w.reference = w.controls.front().value;
    w.special = w.measured < w.reference;
    return w;
}

}  // namespace

SpecialnessWitness specialness_witness(const VarietySpec& spec, std::uint64_t seed) {
    spec.validate();
    if (auto f = std::get_if<SegreSpecialFamily>(&spec.family))
        return contact_witness(spec, f->r, static_cast<std::size_t>(f->mu - 2), padded({1, 1}, f->r), 1, true);
    if (auto f = std::get_if<CubicSpecialFamily>(&spec.family))
        return contact_witness(spec, f->r, static_cast<std::size_t>(f->mu_prime), padded({1, 1, 1}, f->r), 2, false);
    if (std::holds_alternative<Veronese33Family>(spec.family)) {
        SpecialnessWitness w;
        w.kind = WitnessKind::regularity_order;
        Rng rng(seed);
        w.measured = regularity_order(make_variety(spec), generic_point(rng, 3));
        for (const auto& a : scroll_specs(2, 5)) {
            for (auto [rho, chi] : {std::pair{1, 4}, std::pair{2, -1}}) {
                auto v = monomial_parametrization(build_A(a, rho, chi));
                long ord = regularity_order(v, generic_point(rng, 3));
                w.controls.push_back({"A(" + std::to_string(rho) + "," + std::to_string(chi) + ") a=" + a.to_string(), ord});
                w.reference = std::max(w.reference, ord);
            }
        }
        w.special = w.measured > w.reference;
        return w;
    }
    if (auto f = std::get_if<StandardScrollFamily>(&spec.family)) {
        SpecialnessWitness w;
        w.kind = WitnessKind::contact_dimension;
        w.measured = contact_locus_dim_monomial(build_A(f->a, f->rho, f->chi), static_cast<unsigned>(f->rho));
        w.reference = f->a.r();
        w.controls.push_back({"self", w.measured});
        w.special = false;
        return w;
    }
    throw InvalidParameters("no specialness witness for family " + spec.family_name());
}

InequivalenceReport inequivalence_invariants(const ScrollSpec& a, int rho) {
    if (rho < 2) throw InvalidParameters("inequivalence needs rho >= 2");
    InequivalenceReport rep;
    rep.a = a;
    rep.rho = rho;
    int n = a.n(), r = a.r();
    if (n < 3) throw InvalidParameters("inequivalence needs n >= 3");
    auto minus = build_A(a, rho, -1);
    auto alt = build_A(a, rho - 1, n - 2);
    rep.contact_minus = contact_locus_dim_monomial(minus, static_cast<unsigned>(rho - 1));
    rep.contact_alt = contact_locus_dim_monomial(alt, static_cast<unsigned>(rho - 1));
    if (a[0] == n - 1) {
        rep.mode = "identical";
        rep.holds = minus == alt;
    } else if (n == 3 && a.degrees() == std::vector<int>{1, 1}) {
        rep.mode = "swap";
        std::vector<MultiIndex> swapped;
        for (const auto& e : minus.indices()) swapped.push_back(MultiIndex(std::vector<unsigned>{e[1], e[0]}));
        rep.holds = IndexSet(2, swapped) == alt;
    } else {
        rep.mode = "contact";
        rep.holds = rep.contact_minus <= r - 1 && rep.contact_alt == r;
    }
    return rep;
}

}  // namespace osculum
