#pragma once

#include <array>
#include <optional>
#include <vector>

#include "osculum/catalog.hpp"
#include "osculum/curve.hpp"
#include "osculum/parametrization.hpp"

namespace osculum {

struct CurveCertificate {
    int degree = 0;
    long span_dim = -1;
    bool is_rnc = false;
};

CurveCertificate certify_curve(const RationalCurve& c);

struct CurveThroughPoints {
    RationalCurve curve;
    std::vector<P1Point> params;  // parameter of each input point, in input order
};

struct RncOptions {
    // Processing order of the points (a permutation); empty means input order.
    std::vector<std::size_t> order;
    // Final reparametrization t = (a u + b)/(c u + d).
    std::optional<Mobius> reparam;
};

// Unique rational normal curve of degree d through d+3 points in general position in P^d.
CurveThroughPoints rnc_through_points(std::size_t d, const std::vector<QVector>& points, const RncOptions& opt = {});

// Variant for points with coordinates in Q(sqrt D): points[anchors[*]] must be rational, the
// point set Galois-stable; the curve is returned over Q with rational anchor parameters.
// Parameters of non-rational points are left empty.
struct CurveThroughExtPoints {
    RationalCurve curve;
    std::vector<std::optional<P1Point>> params;
};
CurveThroughExtPoints rnc_through_points_ext(std::size_t d, const std::vector<std::vector<QuadExt>>& points,
                                             std::array<std::size_t, 3> anchors);

// Degree-d RNC through d+1 frame points and a further point `touch`, tangent there to the
// line towards `direction`. The tangency point sits at t = infinity.
CurveThroughPoints rnc_through_points_tangent(std::size_t d, const std::vector<QVector>& frame,
                                              const QVector& touch, const QVector& direction);

struct SectionFit {
    ScrollSpec scroll;
    std::vector<UPoly> P;  // P_0, ..., P_r
    std::size_t solution_dim = 0;
};

// samples: (t_i, (s_i1, ..., s_ir)); the section is s_k = P_k(t)/P_0(t).
SectionFit fit_scroll_section(const ScrollSpec& a, const std::vector<std::pair<Rational, QVector>>& samples);

struct ConicFit {
    RationalCurve curve;
    std::array<P1Point, 3> params;
};

ConicFit conic_on_quadric(const QuadraticForm& q, const QVector& p1, const QVector& p2, const QVector& p3);

// Image of the parameter-space curve [D : N_1 : ... : N_d] under v, normalized. With weights,
// parameter i is N_i / D^{w_i}.
RationalCurve pushforward(const Parametrization& v, const std::vector<UPoly>& param_curve,
                          const std::vector<unsigned>& weights = {});

// Equality of the image curves, tested through the quadrics containing each curve.
bool curves_projectively_equal(const RationalCurve& a, const RationalCurve& b);

}  // namespace osculum
