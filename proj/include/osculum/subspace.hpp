#pragma once

#include <optional>
#include <vector>

#include "osculum/matrix.hpp"

namespace osculum {

// Linear subspace of Q^{N+1}, read projectively as a subspace of P^N.
class ProjSubspace {
public:
    explicit ProjSubspace(std::size_t ambient_dim = 0);

    static ProjSubspace span_of(std::size_t ambient_dim, const std::vector<QVector>& vectors);
    static ProjSubspace whole(std::size_t ambient_dim);
    static ProjSubspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& coords);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return pivots_.size(); }
    long dim() const { return static_cast<long>(rank()) - 1; }
    bool is_empty() const { return pivots_.empty(); }
    bool is_whole() const { return rank() == ambient_ + 1; }
    const QMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<QVector> vectors() const { return basis_.row_list(); }

    bool contains(const QVector& v) const;
    bool contains(const ProjSubspace& o) const;
    bool operator==(const ProjSubspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    // Image under g : Q^{N+1} -> Q^{M+1}.
    ProjSubspace image(const QMatrix& g) const;
    // Rows are a basis of the linear forms vanishing on the subspace.
    QMatrix annihilator() const;

    std::string to_string() const;

private:
    std::size_t ambient_;
    QMatrix basis_;
    std::vector<std::size_t> pivots_;
};

ProjSubspace span_of(std::size_t ambient_dim, const std::vector<QVector>& vectors);
ProjSubspace join(const ProjSubspace& a, const ProjSubspace& b);
ProjSubspace intersect(const ProjSubspace& a, const ProjSubspace& b);

struct DirectSumResult {
    std::optional<ProjSubspace> sum;
    ProjSubspace join;
    long expected_dim = -1;
    long actual_dim = -1;
    bool ok() const { return sum.has_value(); }
};

DirectSumResult direct_sum(const std::vector<ProjSubspace>& parts);

struct LinearProjection {
    ProjSubspace center;
    ProjSubspace target_complement;
    QMatrix matrix;                     // (M+1) x (N+1), kills the center
    std::vector<std::size_t> kept;      // coordinates of the complement
    QVector apply(const QVector& v) const { return matrix.apply(v); }
    // Embeds target coordinates back into Q^{N+1} along the complement.
    QVector include(const QVector& w) const;
};

LinearProjection projection_from(const ProjSubspace& center);

}  // namespace osculum
