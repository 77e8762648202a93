#include "osculum/subspace.hpp"

namespace osculum {

std::string to_string(const QMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += ", ";
        out += to_string(m.row(i));
    }
    return out + "]";
}

QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
    QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

ProjSubspace::ProjSubspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim + 1) {}

ProjSubspace ProjSubspace::span_of(std::size_t ambient_dim, const std::vector<QVector>& vectors) {
    ProjSubspace s(ambient_dim);
    if (vectors.empty()) return s;
    auto e = rref(QMatrix::from_rows(vectors, ambient_dim + 1));
    if (e.reduced.cols() != ambient_dim + 1) throw DimensionError("span_of: vector length does not match ambient");
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
}

ProjSubspace ProjSubspace::whole(std::size_t ambient_dim) {
    return span_of(ambient_dim, QMatrix::identity(ambient_dim + 1).row_list());
}

ProjSubspace ProjSubspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& coords) {
    std::vector<QVector> v;
    for (auto c : coords) {
        QVector e(ambient_dim + 1);
        e.at(c) = 1;
        v.push_back(e);
    }
    return span_of(ambient_dim, v);
}

bool ProjSubspace::contains(const QVector& v) const {
    if (v.size() != ambient_ + 1) throw DimensionError("contains: vector length mismatch");
    // reduce v against the echelon basis
    QVector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Rational f = r[pivots_[i]];
        if (is_zero(f)) continue;
        for (std::size_t j = 0; j <= ambient_; ++j)
            if (!is_zero(basis_(i, j))) r[j] -= f * basis_(i, j);
    }
    return is_zero_vector(r);
}

bool ProjSubspace::contains(const ProjSubspace& o) const {
    if (o.ambient_ != ambient_) throw DimensionError("contains: ambient mismatch");
    for (std::size_t i = 0; i < o.rank(); ++i)
        if (!contains(o.basis_.row(i))) return false;
    return true;
}

ProjSubspace ProjSubspace::image(const QMatrix& g) const {
    if (g.cols() != ambient_ + 1) throw DimensionError("image: matrix does not act on this ambient");
    std::vector<QVector> imgs;
    for (std::size_t i = 0; i < rank(); ++i) imgs.push_back(g.apply(basis_.row(i)));
    return span_of(g.rows() - 1, imgs);
}

QMatrix ProjSubspace::annihilator() const {
    if (is_empty()) return QMatrix::identity(ambient_ + 1);
    return null_space(basis_);
}

std::string ProjSubspace::to_string() const { return osculum::to_string(basis_); }

ProjSubspace span_of(std::size_t ambient_dim, const std::vector<QVector>& vectors) {
    return ProjSubspace::span_of(ambient_dim, vectors);
}

ProjSubspace join(const ProjSubspace& a, const ProjSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("join: ambient mismatch");
    auto v = a.vectors();
    auto w = b.vectors();
    v.insert(v.end(), w.begin(), w.end());
    return span_of(a.ambient_dim(), v);
}

ProjSubspace intersect(const ProjSubspace& a, const ProjSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersect: ambient mismatch");
    std::size_t N = a.ambient_dim();
    if (a.is_empty() || b.is_empty()) return ProjSubspace(N);
    // x = sum u_i a_i = sum w_j b_j  <=>  [A^T | -B^T] (u, w) = 0
    std::size_t ra = a.rank(), rb = b.rank();
    QMatrix m(N + 1, ra + rb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t k = 0; k <= N; ++k) m(k, i) = a.basis()(i, k);
    for (std::size_t j = 0; j < rb; ++j)
        for (std::size_t k = 0; k <= N; ++k) m(k, ra + j) = -b.basis()(j, k);
    QMatrix ker = null_space(m);
    std::vector<QVector> vecs;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        QVector x(N + 1);
        for (std::size_t i = 0; i < ra; ++i) {
            if (is_zero(ker(r, i))) continue;
            for (std::size_t k = 0; k <= N; ++k) x[k] += ker(r, i) * a.basis()(i, k);
        }
        vecs.push_back(x);
    }
    return span_of(N, vecs);
}

DirectSumResult direct_sum(const std::vector<ProjSubspace>& parts) {
    if (parts.empty()) throw DimensionError("direct_sum of nothing");
    std::size_t N = parts[0].ambient_dim();
    std::vector<QVector> all;
    long expected = -1;
    for (const auto& p : parts) {
        if (p.ambient_dim() != N) throw DimensionError("direct_sum: ambient mismatch");
        auto v = p.vectors();
        all.insert(all.end(), v.begin(), v.end());
        expected += static_cast<long>(p.rank());
    }
    DirectSumResult res{std::nullopt, span_of(N, all), expected, -1};
    res.actual_dim = res.join.dim();
    if (res.actual_dim == expected) res.sum = res.join;
    return res;
}

LinearProjection projection_from(const ProjSubspace& center) {
    std::size_t N = center.ambient_dim();
    if (center.is_whole()) throw DimensionError("projection from the whole space");
    std::vector<bool> pivot(N + 1, false);
    for (auto p : center.pivots()) pivot[p] = true;
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j <= N; ++j)
        if (!pivot[j]) kept.push_back(j);
    // x -> x - sum_i x[p_i] b_i, read on the non-pivot coordinates
    QMatrix m(kept.size(), N + 1);
    for (std::size_t r = 0; r < kept.size(); ++r) {
        std::size_t j = kept[r];
        m(r, j) = 1;
        for (std::size_t i = 0; i < center.rank(); ++i) m(r, center.pivots()[i]) -= center.basis()(i, j);
    }
    return {center, ProjSubspace::coordinate(N, kept), std::move(m), std::move(kept)};
}

QVector LinearProjection::include(const QVector& w) const {
    if (w.size() != kept.size()) throw DimensionError("include: target length mismatch");
    QVector v(center.ambient_dim() + 1);
    for (std::size_t r = 0; r < kept.size(); ++r) v[kept[r]] = w[r];
    return v;
}

}  // namespace osculum
