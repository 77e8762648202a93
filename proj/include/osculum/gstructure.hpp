#pragma once

#include <optional>
#include <vector>

#include "osculum/random.hpp"
#include "osculum/subspace.hpp"

namespace osculum {

// Dual basis m_{j alpha} of V = Q^{rn}; row j*n + alpha holds the functional m_{j alpha}.
struct TensorStructure {
    std::size_t r = 1, n = 2;
    QMatrix m;
};

// F holds n+1 subspaces of codimension r in Q^{rn}. basis_change (r x r, invertible) replaces
// the basis phi of F_0^perp by basis_change * phi.
TensorStructure construct_structure(std::size_t r, std::size_t n, const std::vector<ProjSubspace>& F,
                                    const std::optional<QMatrix>& basis_change = std::nullopt);

// [t_1 : ... : t_n] with W = { xi : sum_alpha t_alpha m_{j alpha}(xi) = 0 for all j }, if any.
std::optional<QVector> is_type_subspace(const TensorStructure& s, const ProjSubspace& W);

// C^r (x) F for the hyperplane F = ker t of C^n, and E (x) C^n for E = ker e of C^r.
ProjSubspace type_subspace(const TensorStructure& s, const QVector& t);
ProjSubspace dual_type_subspace(const TensorStructure& s, const QVector& e);

struct GrnFactor {
    QMatrix C;  // r x r
    QMatrix A;  // n x n
};

// Factor mB * mA^{-1} as kron(C, A) when possible.
std::optional<GrnFactor> grn_relation(std::size_t r, std::size_t n, const QMatrix& mA, const QMatrix& mB);

// n+1 random subspaces of codimension r in Q^{rn}.
std::vector<ProjSubspace> random_codim_subspaces(Rng& rng, std::size_t r, std::size_t n, std::size_t count);

}  // namespace osculum
