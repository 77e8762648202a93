#include "osculum/gstructure.hpp"

#include "osculum/errors.hpp"

namespace osculum {

namespace {

std::vector<std::size_t> all_but(std::size_t count, std::size_t skip) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < count; ++i)
        if (i != skip) w.push_back(i);
    return w;
}

}  // namespace

TensorStructure construct_structure(std::size_t r, std::size_t n, const std::vector<ProjSubspace>& F,
                                    const std::optional<QMatrix>& basis_change) {
    if (r < 1 || n < 2) throw InvalidParameters("tensor structure needs r >= 1, n >= 2");
    std::size_t dim = r * n;
    if (F.size() != n + 1) throw DimensionError("construct_structure needs n+1 subspaces");
    std::vector<QMatrix> perp;
    for (const auto& f : F) {
        if (f.ambient_dim() + 1 != dim || f.rank() != dim - r)
            throw DimensionError("construct_structure: subspaces must have codimension r in Q^{rn}");
        perp.push_back(f.annihilator());
    }
    for (std::size_t skip = 0; skip <= n; ++skip) {
        std::vector<QVector> rows;
        for (std::size_t a = 0; a <= n; ++a)
            if (a != skip)
                for (const auto& v : perp[a].row_list()) rows.push_back(v);
        if (rank(QMatrix::from_rows(rows, dim)) != dim)
            throw DegeneracyError("annihilators not in general position", all_but(n + 1, skip));
    }
    QMatrix phi = perp[0];
    if (basis_change) {
        if (basis_change->rows() != r || basis_change->cols() != r || rank(*basis_change) != r)
            throw InvalidParameters("basis change must be an invertible r x r matrix");
        phi = *basis_change * phi;
    }
    // columns of `cols` run over the bases of F_1^perp, ..., F_n^perp
    QMatrix cols(dim, dim);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t x = 0; x < dim; ++x) cols(x, a * r + b) = perp[a + 1](b, x);
    auto inv = inverse(cols);
    if (!inv) throw DegeneracyError("annihilators of F_1..F_n do not span", all_but(n + 1, 0));
    TensorStructure s{r, n, QMatrix(dim, dim)};
    for (std::size_t j = 0; j < r; ++j) {
        QVector c = inv->apply(phi.row(j));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t x = 0; x < dim; ++x) s.m(j * n + a, x) += c[a * r + b] * perp[a + 1](b, x);
    }
    if (rank(s.m) != dim) throw GenericityFailure("decomposition does not give a basis");
    return s;
}

std::optional<QVector> is_type_subspace(const TensorStructure& s, const ProjSubspace& W) {
    std::size_t dim = s.r * s.n;
    if (W.ambient_dim() + 1 != dim || W.rank() != dim - s.r)
        throw DimensionError("is_type_subspace: W must have codimension r");
    auto xi = W.vectors();
    QMatrix sys(s.r * xi.size(), s.n);
    for (std::size_t j = 0; j < s.r; ++j)
        for (std::size_t b = 0; b < xi.size(); ++b)
            for (std::size_t a = 0; a < s.n; ++a) {
                Rational v = 0;
                for (std::size_t x = 0; x < dim; ++x) v += s.m(j * s.n + a, x) * xi[b][x];
                sys(j * xi.size() + b, a) = v;
            }
    QMatrix ker = null_space(sys);
    if (ker.rows() != 1) return std::nullopt;
    QVector t = normalize_projective(ker.row(0));
    if (!(type_subspace(s, t) == W)) return std::nullopt;
    return t;
}

ProjSubspace type_subspace(const TensorStructure& s, const QVector& t) {
    if (t.size() != s.n) throw DimensionError("type_subspace: t must have n entries");
    std::size_t dim = s.r * s.n;
    QMatrix forms(s.r, dim);
    for (std::size_t j = 0; j < s.r; ++j)
        for (std::size_t a = 0; a < s.n; ++a)
            for (std::size_t x = 0; x < dim; ++x) forms(j, x) += t[a] * s.m(j * s.n + a, x);
    return span_of(dim - 1, null_space(forms).row_list());
}

ProjSubspace dual_type_subspace(const TensorStructure& s, const QVector& e) {
    if (e.size() != s.r) throw DimensionError("dual_type_subspace: e must have r entries");
    std::size_t dim = s.r * s.n;
    QMatrix forms(s.n, dim);
    for (std::size_t a = 0; a < s.n; ++a)
        for (std::size_t j = 0; j < s.r; ++j)
            for (std::size_t x = 0; x < dim; ++x) forms(a, x) += e[j] * s.m(j * s.n + a, x);
    return span_of(dim - 1, null_space(forms).row_list());
}

std::optional<GrnFactor> grn_relation(std::size_t r, std::size_t n, const QMatrix& mA, const QMatrix& mB) {
    std::size_t dim = r * n;
    if (mA.rows() != dim || mA.cols() != dim || mB.rows() != dim || mB.cols() != dim)
        throw DimensionError("grn_relation: bases must be rn x rn");
    auto inv = inverse(mA);
    if (!inv || rank(mB) != dim) throw InvalidParameters("grn_relation: bases must be invertible");
    QMatrix T = mB * *inv;
    // block (j, k) of T is C_jk * A
    std::optional<std::pair<std::size_t, std::size_t>> ref;
    for (std::size_t j = 0; j < r && !ref; ++j)
        for (std::size_t k = 0; k < r && !ref; ++k)
            for (std::size_t a = 0; a < n * n; ++a)
                if (!is_zero(T(j * n + a / n, k * n + a % n))) {
                    ref = std::make_pair(j, k);
                    break;
                }
    GrnFactor f{QMatrix(r, r), QMatrix(n, n)};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) f.A(a, b) = T(ref->first * n + a, ref->second * n + b);
    std::size_t pa = 0, pb = 0;
    while (is_zero(f.A(pa, pb))) {
        if (++pb == n) {
            pb = 0;
            ++pa;
        }
    }
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) f.C(j, k) = T(j * n + pa, k * n + pb) / f.A(pa, pb);
    if (!(kronecker(f.C, f.A) == T)) return std::nullopt;
    return f;
}

std::vector<ProjSubspace> random_codim_subspaces(Rng& rng, std::size_t r, std::size_t n, std::size_t count) {
    std::size_t dim = r * n;
    std::vector<ProjSubspace> out;
    while (out.size() < count) {
        auto s = span_of(dim - 1, rng.small_matrix(dim - r, dim).row_list());
        if (s.rank() == dim - r) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace osculum
