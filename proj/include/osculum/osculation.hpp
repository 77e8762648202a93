#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osculum/curve.hpp"
#include "osculum/index_set.hpp"
#include "osculum/parametrization.hpp"

namespace osculum {

struct OsculatorReport {
    unsigned order = 0;
    ProjSubspace subspace;
    bool is_regular = false;
    std::int64_t expected_dim_plus_1 = 0;
    long dim() const { return subspace.dim(); }
};

OsculatorReport osculator(const Parametrization& v, const QVector& p, unsigned k);
// Largest k for which v is k-regular at p.
unsigned regularity_order(const Parametrization& v, const QVector& p);

struct AdmissibilityReport {
    bool admissible = false;
    std::size_t assignments_tested = 0;
    long span_dim = -1;
    std::string failure;
};

// Tests every choice of the point left out and every distinct assignment of the weights
// to the remaining points.
AdmissibilityReport admissibility_check(const Parametrization& v, const std::vector<QVector>& points,
                                        const std::vector<unsigned>& weights);

struct Center {
    QVector point;
    unsigned order = 0;
};

struct OsculatingProjection {
    Parametrization image;
    LinearProjection projection;
};

OsculatingProjection osculating_projection(const Parametrization& v, const std::vector<Center>& centers);

Parametrization curve_as_parametrization(const RationalCurve& c);
// Projects c from its point at parameter a and compares the order-k osculator of the
// extended image at a with the image of the order-(k+1) osculator of c at a.
bool curve_projection_check(const RationalCurve& c, const Rational& a, unsigned k);

std::size_t min_hitting_set(const std::vector<std::vector<std::size_t>>& supports, std::size_t nvars);
long contact_locus_dim_monomial(const IndexSet& a, unsigned k);
ProjSubspace monomial_osculator_at_origin(const IndexSet& a, unsigned k);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace osculum
