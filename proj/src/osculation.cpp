#include "osculum/osculation.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace osculum {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

OsculatorReport osculator(const Parametrization& v, const QVector& p, unsigned k) {
    std::size_t d = v.param_dim();
    if (p.size() != d) throw DimensionError("osculator: point length mismatch");
    std::map<MultiIndex, std::vector<Polynomial>> derivs;
    derivs.emplace(MultiIndex(d), v.lift());
    std::vector<QVector> rows{v.point(p)};
    for (unsigned deg = 1; deg <= k; ++deg) {
        for (const auto& alpha : indices_of_degree(d, deg)) {
            // differentiate a stored lower-order derivative once
            std::size_t i = 0;
            while (alpha[i] == 0) ++i;
            MultiIndex parent = alpha;
            parent[i] -= 1;
            std::vector<Polynomial> der;
            for (const auto& f : derivs.at(parent)) der.push_back(f.partial(i));
            QVector row;
            for (const auto& f : der) row.push_back(f.eval(p));
            rows.push_back(std::move(row));
            derivs.emplace(alpha, std::move(der));
        }
    }
    OsculatorReport rep;
    rep.order = k;
    rep.subspace = span_of(v.ambient_dim(), rows);
    rep.expected_dim_plus_1 = binomial(static_cast<std::int64_t>(d + k), static_cast<std::int64_t>(d));
    rep.is_regular = static_cast<std::int64_t>(rep.subspace.rank()) == rep.expected_dim_plus_1;
    return rep;
}

unsigned regularity_order(const Parametrization& v, const QVector& p) {
    unsigned k = 0;
    for (;;) {
        auto next = binomial(static_cast<std::int64_t>(v.param_dim() + k + 1), static_cast<std::int64_t>(v.param_dim()));
        if (next > static_cast<std::int64_t>(v.ambient_dim() + 1)) return k;
        if (!osculator(v, p, k + 1).is_regular) return k;
        ++k;
    }
}

AdmissibilityReport admissibility_check(const Parametrization& v, const std::vector<QVector>& points,
                                        const std::vector<unsigned>& weights) {
    AdmissibilityReport rep;
    if (points.size() != weights.size() + 1) throw DimensionError("admissibility: need one more point than weights");
    ProjSubspace span = v.span();
    rep.span_dim = span.dim();
    std::vector<unsigned> sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t left = 0; left < points.size(); ++left) {
        std::vector<std::size_t> used;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (i != left) used.push_back(i);
        std::vector<unsigned> w = sorted;
        do {
            ++rep.assignments_tested;
            std::vector<ProjSubspace> parts;
            for (std::size_t j = 0; j < used.size(); ++j) {
                auto osc = osculator(v, points[used[j]], w[j]);
                if (!osc.is_regular) {
                    rep.failure = "not " + std::to_string(w[j]) + "-regular at point " + std::to_string(used[j]);
                    return rep;
                }
                parts.push_back(osc.subspace);
            }
            auto ds = direct_sum(parts);
            if (!ds.ok() || !(ds.join == span)) {
                rep.failure = "osculators leaving out point " + std::to_string(left) + " span dimension " +
                              std::to_string(ds.actual_dim) + ", expected " + std::to_string(span.dim());
                return rep;
            }
        } while (std::next_permutation(w.begin(), w.end()));
    }
    rep.admissible = true;
    return rep;
}

OsculatingProjection osculating_projection(const Parametrization& v, const std::vector<Center>& centers) {
    std::vector<ProjSubspace> parts;
    for (const auto& c : centers) parts.push_back(osculator(v, c.point, c.order).subspace);
    ProjSubspace center(v.ambient_dim());
    if (!parts.empty()) {
        auto ds = direct_sum(parts);
        if (!ds.ok())
            throw NotInGeneralPosition("osculators at the centers are not in direct sum (dimension " +
                                       std::to_string(ds.actual_dim) + ", expected " +
                                       std::to_string(ds.expected_dim) + ")");
        center = *ds.sum;
    }
    auto proj = projection_from(center);
    return {v.transformed(proj.matrix), std::move(proj)};
}

Parametrization curve_as_parametrization(const RationalCurve& c) {
    std::vector<Polynomial> lift;
    for (const auto& u : c.components()) {
        Polynomial p(1);
        for (std::size_t k = 0; k < u.coeffs().size(); ++k) p.add_term(MultiIndex{static_cast<unsigned>(k)}, u.coeffs()[k]);
        lift.push_back(std::move(p));
    }
    return Parametrization::homogeneous(1, std::move(lift), {"t"});
}

bool curve_projection_check(const RationalCurve& c, const Rational& a, unsigned k) {
    auto v = curve_as_parametrization(c);
    auto big = osculator(v, {a}, k + 1);
    if (!big.is_regular) throw InvalidParameters("curve is not (k+1)-regular at the projection point");
    auto proj = projection_from(span_of(c.ambient_dim(), {c.eval(a)}));
    std::vector<UPoly> comps(proj.matrix.rows());
    for (std::size_t i = 0; i < proj.matrix.rows(); ++i)
        for (std::size_t j = 0; j < c.components().size(); ++j)
            if (!is_zero(proj.matrix(i, j))) comps[i] += c.components()[j] * proj.matrix(i, j);
    // remove the vanishing at a (and any other common factor) to extend the image through a'
    UPoly g;
    for (const auto& p : comps) g = gcd(g, p);
    for (auto& p : comps)
        if (!p.is_zero()) p = exact_div(p, g);
    RationalCurve image(std::move(comps));
    QVector a_prime = image.eval(a);
    QVector tangent;
    for (const auto& f : v.lift()) tangent.push_back(f.partial(0).eval({a}));
    if (!proportional(a_prime, proj.apply(tangent))) return false;
    ProjSubspace projected_osc = big.subspace.image(proj.matrix);
    if (image.degree() == 0) return projected_osc == span_of(image.ambient_dim(), {a_prime});
    return osculator(curve_as_parametrization(image), {a}, k).subspace == projected_osc;
}

std::size_t min_hitting_set(const std::vector<std::vector<std::size_t>>& supports_in, std::size_t nvars) {
    auto supports = supports_in;
    std::sort(supports.begin(), supports.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    for (const auto& s : supports)
        if (s.empty()) throw InvalidParameters("empty support cannot be hit");
    std::size_t best = nvars + 1;
    std::vector<bool> chosen(nvars, false);
    std::function<void(std::size_t)> search = [&](std::size_t count) {
        if (count >= best) return;
        const std::vector<std::size_t>* open = nullptr;
        for (const auto& s : supports) {
            bool hit = std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v]; });
            if (!hit) {
                open = &s;
                break;
            }
        }
        if (!open) {
            best = count;
            return;
        }
        if (count + 1 >= best) return;
        for (auto v : *open) {
            chosen[v] = true;
            search(count + 1);
            chosen[v] = false;
        }
    };
    search(0);
    return best;
}

long contact_locus_dim_monomial(const IndexSet& a, unsigned k) {
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& e : a.indices())
        if (e.degree() >= k + 1) supports.push_back(e.support());
    return static_cast<long>(a.nvars()) - static_cast<long>(min_hitting_set(supports, a.nvars()));
}

ProjSubspace monomial_osculator_at_origin(const IndexSet& a, unsigned k) {
    std::vector<std::size_t> coords{0};
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.indices()[i].degree() <= k) coords.push_back(i + 1);
    return ProjSubspace::coordinate(a.size(), coords);
}

}  // namespace osculum
