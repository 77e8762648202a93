#pragma once

#include <optional>
#include <vector>

#include "osculum/curve.hpp"
#include "osculum/variety.hpp"

namespace osculum {

struct CurveFit {
    RationalCurve curve;          // image curve in the ambient space of the variety
    std::vector<P1Point> params;  // parameter of each input point on `curve`
    // Set when the construction passed through Q(sqrt D) with D not a square.
    std::optional<Rational> radicand;
};

// Curve of the class degree through the images of n parameter points. Genericity failures
// surface as GenericityFailure so that callers can resample.
CurveFit fit_rnc_through(const VarietySpec& spec, const Parametrization& v, const std::vector<QVector>& points);
CurveFit fit_rnc_through(const VarietySpec& spec, const std::vector<QVector>& points);

}  // namespace osculum
