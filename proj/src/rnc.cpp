#include "osculum/rnc.hpp"

#include <algorithm>
#include <numeric>

#include "osculum/errors.hpp"

namespace osculum {

namespace {

template <class K>
using KPoly = std::vector<K>;  // low to high

template <class K>
KPoly<K> kmul(const KPoly<K>& a, const KPoly<K>& b) {
    KPoly<K> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Projective parameter [num : den] over K.
template <class K>
struct KParam {
    K num, den;
};

template <class K>
struct KCurve {
    std::vector<KPoly<K>> comps;  // d+1 components with d+1 coefficients each
    std::vector<KParam<K>> params;
};

template <class K>
std::vector<K> lagrange_nodes_curve(const Matrix<K>& b, const std::vector<K>& lam, const std::vector<K>& nodes,
                                    std::vector<KPoly<K>>& comps) {
    std::size_t n = nodes.size();
    comps.assign(n, KPoly<K>(n));
    for (std::size_t i = 0; i < n; ++i) {
        KPoly<K> z{K(1)};
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) z = kmul(z, KPoly<K>{-nodes[j], K(1)});
        for (std::size_t r = 0; r < n; ++r) {
            K f = b(r, i) * lam[i];
            if (is_zero(f)) continue;
            for (std::size_t k = 0; k < n; ++k) comps[r][k] += f * z[k];
        }
    }
    return nodes;
}

std::vector<std::size_t> all_but(std::size_t n, std::initializer_list<std::size_t> skip,
                                 std::initializer_list<std::size_t> extra) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(skip.begin(), skip.end(), i) == skip.end()) w.push_back(i);
    w.insert(w.end(), extra.begin(), extra.end());
    return w;
}

template <class K>
KCurve<K> rnc_core(std::size_t d, const std::vector<std::vector<K>>& pts) {
    if (pts.size() != d + 3) throw DimensionError("rnc_through_points needs d+3 points");
    for (const auto& p : pts)
        if (p.size() != d + 1) throw DimensionError("rnc_through_points: point length must be d+1");
    std::size_t n = d + 1;
    Matrix<K> b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r) b(r, i) = pts[i][r];
    auto binv = inverse(b);
    if (!binv) throw DegeneracyError("first d+1 points are linearly dependent", all_but(n, {}, {}));
    std::vector<K> lam = binv->apply(pts[d + 1]);
    std::vector<K> w = binv->apply(pts[d + 2]);
    std::vector<K> nodes(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(lam[i])) throw DegeneracyError("points in special position", all_but(n, {i}, {d + 1}));
        if (is_zero(w[i])) throw DegeneracyError("points in special position", all_but(n, {i}, {d + 2}));
        nodes[i] = lam[i] / w[i];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nodes[i] == nodes[j])
                throw DegeneracyError("points in special position", all_but(n, {i, j}, {d + 1, d + 2}));
    KCurve<K> out;
    lagrange_nodes_curve(b, lam, nodes, out.comps);
    for (std::size_t i = 0; i < n; ++i) out.params.push_back({nodes[i], K(1)});
    out.params.push_back({K(1), K(0)});
    out.params.push_back({K(0), K(1)});
    return out;
}

UPoly to_upoly(const QVector& c) { return UPoly(c); }

P1Point to_p1(const KParam<Rational>& p) { return {p.num, p.den}; }

std::vector<std::size_t> checked_order(std::size_t count, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> o(count);
    std::iota(o.begin(), o.end(), 0);
    if (order.empty()) return o;
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != o) throw InvalidParameters("rnc order must be a permutation of the points");
    return order;
}

}  // namespace

CurveCertificate certify_curve(const RationalCurve& c) {
    auto n = curve_normalize(c);
    CurveCertificate cert;
    cert.degree = n.degree();
    if (cert.degree == 0) throw DegenerateCurveError("constant curve");
    cert.span_dim = static_cast<long>(rank(n.coefficient_matrix())) - 1;
    cert.is_rnc = cert.degree == cert.span_dim;
    return cert;
}

CurveThroughPoints rnc_through_points(std::size_t d, const std::vector<QVector>& points, const RncOptions& opt) {
    if (d < 1) throw InvalidParameters("rnc_through_points needs d >= 1");
    auto order = checked_order(points.size(), opt.order);
    std::vector<QVector> pts;
    for (auto i : order) pts.push_back(points.at(i));
    KCurve<Rational> core;
    try {
        core = rnc_core<Rational>(d, pts);
    } catch (DegeneracyError& e) {
        for (auto& w : e.witness) w = order[w];
        throw;
    }
    std::vector<UPoly> comps;
    for (const auto& c : core.comps) comps.push_back(to_upoly(c));
    RationalCurve curve(std::move(comps));
    std::vector<P1Point> params(points.size());
    for (std::size_t k = 0; k < order.size(); ++k) params[order[k]] = to_p1(core.params[k]);
    if (opt.reparam) {
        curve = apply_mobius(curve, *opt.reparam);
        Mobius inv = opt.reparam->inverse();
        for (auto& p : params) p = inv.apply(p);
    }
    return {curve_normalize(curve), std::move(params)};
}

CurveThroughExtPoints rnc_through_points_ext(std::size_t d, const std::vector<std::vector<QuadExt>>& points,
                                             std::array<std::size_t, 3> anchors) {
    auto core = rnc_core<QuadExt>(d, points);
    const auto& pa = core.params.at(anchors[0]);
    const auto& pb = core.params.at(anchors[1]);
    const auto& pc = core.params.at(anchors[2]);
    // u -> t with u = 0, infinity, 1 going to the three anchors
    Matrix<QuadExt> m(2, 2);
    m(0, 0) = pa.num;
    m(1, 0) = pa.den;
    m(0, 1) = pb.num;
    m(1, 1) = pb.den;
    auto l = solve(m, std::vector<QuadExt>{pc.num, pc.den});
    if (!l || is_zero((*l)[0]) || is_zero((*l)[1])) throw DegeneracyError("anchor parameters collide", {anchors.begin(), anchors.end()});
    QuadExt al = (*l)[1] * pb.num, be = (*l)[0] * pa.num, ga = (*l)[1] * pb.den, de = (*l)[0] * pa.den;
    KPoly<QuadExt> num{be, al}, den{de, ga};
    std::vector<KPoly<QuadExt>> num_pow{{QuadExt(1)}}, den_pow{{QuadExt(1)}};
    for (std::size_t k = 1; k <= d; ++k) {
        num_pow.push_back(kmul(num_pow.back(), num));
        den_pow.push_back(kmul(den_pow.back(), den));
    }
    std::vector<KPoly<QuadExt>> comps;
    for (const auto& c : core.comps) {
        KPoly<QuadExt> acc(d + 1);
        for (std::size_t k = 0; k <= d; ++k) {
            if (is_zero(c[k])) continue;
            auto term = kmul(num_pow[k], den_pow[d - k]);
            for (std::size_t j = 0; j <= d; ++j) acc[j] += c[k] * term[j];
        }
        comps.push_back(std::move(acc));
    }
    QuadExt scale;
    for (const auto& c : comps) {
        for (const auto& x : c)
            if (!is_zero(x)) {
                scale = x;
                break;
            }
        if (!is_zero(scale)) break;
    }
    std::vector<UPoly> rational;
    for (const auto& c : comps) {
        QVector coeffs;
        for (const auto& x : c) {
            QuadExt y = x / scale;
            if (!y.is_rational()) throw Error("interpolating curve is not defined over Q");
            coeffs.push_back(y.a());
        }
        rational.push_back(UPoly(std::move(coeffs)));
    }
    CurveThroughExtPoints out{curve_normalize(RationalCurve(std::move(rational))), {}};
    for (const auto& p : core.params) {
        QuadExt un = de * p.num - be * p.den, ud = -ga * p.num + al * p.den;
        if (is_zero(ud)) {
            out.params.push_back(P1Point::infinity());
            continue;
        }
        QuadExt u = un / ud;
        out.params.push_back(u.is_rational() ? std::optional<P1Point>(P1Point::finite(u.a())) : std::nullopt);
    }
    return out;
}

CurveThroughPoints rnc_through_points_tangent(std::size_t d, const std::vector<QVector>& frame, const QVector& touch,
                                              const QVector& direction) {
    std::size_t n = d + 1;
    if (frame.size() != n) throw DimensionError("tangent interpolation needs d+1 frame points");
    QMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (frame[i].size() != n) throw DimensionError("point length must be d+1");
        for (std::size_t r = 0; r < n; ++r) b(r, i) = frame[i][r];
    }
    auto binv = inverse(b);
    if (!binv) throw DegeneracyError("frame points are linearly dependent", all_but(n, {}, {}));
    QVector lam = binv->apply(touch);
    QVector dir = binv->apply(direction);
    QVector nodes(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(lam[i])) throw DegeneracyError("tangency point in special position", all_but(n, {i}, {n}));
        nodes[i] = dir[i] / lam[i];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nodes[i] == nodes[j])
                throw DegeneracyError("tangent direction in special position", all_but(n, {i, j}, {n}));
    std::vector<QVector> comps;
    lagrange_nodes_curve(b, lam, nodes, comps);
    std::vector<UPoly> polys;
    for (const auto& c : comps) polys.push_back(to_upoly(c));
    CurveThroughPoints out{curve_normalize(RationalCurve(std::move(polys))), {}};
    for (const auto& t : nodes) out.params.push_back(P1Point::finite(t));
    out.params.push_back(P1Point::infinity());
    return out;
}

SectionFit fit_scroll_section(const ScrollSpec& a, const std::vector<std::pair<Rational, QVector>>& samples) {
    int n = a.n(), r = a.r();
    if (samples.size() != static_cast<std::size_t>(n)) throw DimensionError("fit_scroll_section needs n samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].second.size() != static_cast<std::size_t>(r)) throw DimensionError("sample length must be r");
        for (std::size_t j = 0; j < i; ++j)
            if (samples[i].first == samples[j].first) throw DegeneracyError("repeated t among samples", {j, i});
    }
    // unknown blocks: P_k has n - a_k coefficients
    std::vector<std::size_t> offset{0};
    for (int k = 0; k <= r; ++k) offset.push_back(offset.back() + static_cast<std::size_t>(n - a[k]));
    std::size_t unknowns = offset.back();
    QMatrix sys(static_cast<std::size_t>(r) * samples.size(), unknowns);
    std::size_t row = 0;
    for (const auto& [t, s] : samples) {
        QVector tp{1};
        for (int e = 1; e < n; ++e) tp.push_back(tp.back() * t);
        for (int k = 1; k <= r; ++k, ++row) {
            for (std::size_t e = 0; e < offset[1]; ++e) sys(row, e) = s[k - 1] * tp[e];
            for (std::size_t e = 0; e < offset[k + 1] - offset[k]; ++e) sys(row, offset[k] + e) = -tp[e];
        }
    }
    QMatrix ker = null_space(sys);
    SectionFit fit{a, {}, ker.rows()};
    if (ker.rows() != 1) throw GenericityFailure("scroll section system has solution dimension " + std::to_string(ker.rows()));
    QVector sol = normalize_projective(ker.row(0));
    for (int k = 0; k <= r; ++k)
        fit.P.push_back(UPoly(QVector(sol.begin() + static_cast<long>(offset[k]), sol.begin() + static_cast<long>(offset[k + 1]))));
    return fit;
}

ConicFit conic_on_quadric(const QuadraticForm& q, const QVector& p1, const QVector& p2, const QVector& p3) {
    for (const auto* p : {&p1, &p2, &p3})
        if (!is_zero(q.value(*p))) throw InvalidParameters("conic_on_quadric: point not on the quadric");
    if (span_of(q.nvars() - 1, {p1, p2, p3}).rank() != 3) throw DegenerateConicError("points do not span a plane");
    Rational b01 = q.bilinear(p1, p2), b02 = q.bilinear(p1, p3), b12 = q.bilinear(p2, p3);
    if (is_zero(b01) || is_zero(b02) || is_zero(b12)) throw DegenerateConicError("plane section is a singular conic");
    // coordinates on the plane in the basis p1, p2, p3, with [U0 : U1] = [1 : t]
    UPoly y0 = UPoly::linear(0, -b12);
    UPoly y1 = UPoly::linear(b01, b02);
    UPoly y2 = UPoly::linear(0, 1) * y1;
    std::vector<UPoly> comps(q.nvars());
    for (std::size_t i = 0; i < q.nvars(); ++i) comps[i] = y0 * p1[i] + y1 * p2[i] + y2 * p3[i];
    return {RationalCurve(std::move(comps)), {P1Point::finite(-b01 / b02), P1Point::finite(0), P1Point::infinity()}};
}

RationalCurve pushforward(const Parametrization& v, const std::vector<UPoly>& param_curve,
                          const std::vector<unsigned>& weights) {
    std::size_t d = v.param_dim();
    if (param_curve.size() != d + 1) throw DimensionError("parameter curve must have d+1 components");
    std::vector<unsigned> w = weights.empty() ? std::vector<unsigned>(d, 1) : weights;
    if (w.size() != d) throw DimensionError("one weight per parameter expected");
    auto wdeg = [&](const MultiIndex& beta) {
        unsigned s = 0;
        for (std::size_t i = 0; i < d; ++i) s += w[i] * beta[i];
        return s;
    };
    unsigned e = 0;
    for (const auto& f : v.lift())
        for (const auto& term : f.terms()) e = std::max(e, wdeg(term.first));
    std::vector<std::vector<UPoly>> pw(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        pw[i].push_back(UPoly::constant(1));
        for (unsigned k = 1; k <= e; ++k) pw[i].push_back(pw[i].back() * param_curve[i]);
    }
    std::vector<UPoly> comps;
    for (const auto& f : v.lift()) {
        UPoly acc;
        for (const auto& [beta, c] : f.terms()) {
            UPoly term = pw[0][e - wdeg(beta)] * c;
            for (std::size_t i = 0; i < d; ++i)
                if (beta[i]) term = term * pw[i + 1][beta[i]];
            acc += term;
        }
        comps.push_back(std::move(acc));
    }
    return curve_normalize(RationalCurve(std::move(comps)));
}

namespace {

// Rows are the quadrics (coefficients on x_i x_j, i <= j) vanishing on c.
QMatrix quadrics_through(const RationalCurve& c) {
    const auto& x = c.components();
    std::size_t n = x.size();
    std::size_t rows = 2 * static_cast<std::size_t>(c.degree()) + 1;
    std::size_t cols = n * (n + 1) / 2;
    QMatrix sys(rows, cols);
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++col) {
            UPoly prod = x[i] * x[j];
            for (std::size_t k = 0; k < prod.coeffs().size(); ++k) sys(k, col) = prod.coeffs()[k];
        }
    return null_space(sys);
}

bool vanishes_on(const QMatrix& quadrics, const RationalCurve& c) {
    const auto& x = c.components();
    std::size_t n = x.size();
    std::vector<UPoly> prods;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) prods.push_back(x[i] * x[j]);
    for (std::size_t r = 0; r < quadrics.rows(); ++r) {
        UPoly acc;
        for (std::size_t k = 0; k < prods.size(); ++k)
            if (!is_zero(quadrics(r, k))) acc += prods[k] * quadrics(r, k);
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace

bool curves_projectively_equal(const RationalCurve& a, const RationalCurve& b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    auto na = curve_normalize(a), nb = curve_normalize(b);
    if (na.degree() != nb.degree()) return false;
    return vanishes_on(quadrics_through(na), nb) && vanishes_on(quadrics_through(nb), na);
}

}  // namespace osculum
