#include "osculum/parametrization.hpp"

#include <algorithm>
#include <set>

#include "osculum/random.hpp"

namespace osculum {

namespace {
constexpr std::uint64_t kGenericCheckSeed = 0x5eedULL;
constexpr int kGenericCheckAttempts = 9;
}  // namespace

Parametrization::Parametrization(std::size_t d, std::vector<Polynomial> lift, std::vector<std::string> names)
    : d_(d), lift_(std::move(lift)), names_(std::move(names)) {
    if (lift_.empty()) throw DimensionError("parametrization without components");
    for (const auto& p : lift_)
        if (p.nvars() != d_) throw DimensionError("component variable count differs from parameter dimension");
    if (names_.empty()) names_ = default_variable_names(d_);
    if (names_.size() != d_) throw DimensionError("wrong number of variable names");
    check_generic_rank();
}

Parametrization Parametrization::affine(std::size_t d, std::vector<Polynomial> components,
                                        std::vector<std::string> names) {
    std::vector<Polynomial> lift{Polynomial::constant(d, 1)};
    lift.insert(lift.end(), components.begin(), components.end());
    return Parametrization(d, std::move(lift), std::move(names));
}

Parametrization Parametrization::homogeneous(std::size_t d, std::vector<Polynomial> lift,
                                             std::vector<std::string> names) {
    return Parametrization(d, std::move(lift), std::move(names));
}

void Parametrization::check_generic_rank() const {
    Rng rng(kGenericCheckSeed);
    for (int attempt = 0; attempt < kGenericCheckAttempts; ++attempt)
        if (jacobian_rank_at(rng.small_vector(d_)) == d_) return;
    throw InvalidParameters("parametrization has generic Jacobian rank below its parameter dimension");
}

unsigned Parametrization::max_degree() const {
    int m = 0;
    for (const auto& p : lift_) m = std::max(m, p.total_degree());
    return static_cast<unsigned>(m);
}

QVector Parametrization::point(const QVector& p) const {
    QVector out;
    out.reserve(lift_.size());
    for (const auto& f : lift_) out.push_back(f.eval(p));
    return out;
}

ProjSubspace Parametrization::span() const {
    std::set<MultiIndex, GrlexLess> monos;
    for (const auto& f : lift_)
        for (const auto& [e, c] : f.terms()) monos.insert(e);
    std::vector<QVector> rows;
    for (const auto& e : monos) {
        QVector r(lift_.size());
        for (std::size_t i = 0; i < lift_.size(); ++i) r[i] = lift_[i].coefficient(e);
        rows.push_back(std::move(r));
    }
    return span_of(ambient_dim(), rows);
}

std::size_t Parametrization::jacobian_rank_at(const QVector& p) const {
    std::vector<QVector> rows{point(p)};
    for (std::size_t i = 0; i < d_; ++i) {
        QVector r;
        for (const auto& f : lift_) r.push_back(f.partial(i).eval(p));
        rows.push_back(std::move(r));
    }
    auto s = span_of(ambient_dim(), rows);
    return s.rank() == 0 ? 0 : s.rank() - 1;
}

Parametrization Parametrization::transformed(const QMatrix& g) const {
    if (g.cols() != lift_.size()) throw DimensionError("transform does not act on this ambient space");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        Polynomial acc(d_);
        for (std::size_t j = 0; j < lift_.size(); ++j)
            if (!is_zero(g(i, j))) acc += lift_[j] * g(i, j);
        out.push_back(std::move(acc));
    }
    return Parametrization(d_, std::move(out), names_);
}

Parametrization Parametrization::sliced(const std::vector<std::optional<Rational>>& fixed) const {
    if (fixed.size() != d_) throw DimensionError("slice specification length mismatch");
    std::vector<Polynomial> subs;
    std::vector<std::string> names;
    std::size_t m = 0;
    for (const auto& f : fixed)
        if (!f) ++m;
    std::size_t next = 0;
    for (std::size_t i = 0; i < d_; ++i) {
        if (fixed[i]) {
            subs.push_back(Polynomial::constant(m, *fixed[i]));
        } else {
            subs.push_back(Polynomial::variable(m, next++));
            names.push_back(names_[i]);
        }
    }
    std::vector<Polynomial> out;
    for (const auto& f : lift_) out.push_back(f.compose(subs));
    return Parametrization(m, std::move(out), std::move(names));
}

std::vector<std::string> Parametrization::component_strings() const {
    std::vector<std::string> out;
    for (const auto& f : lift_) out.push_back(f.to_string(names_));
    return out;
}

Parametrization monomial_parametrization(const IndexSet& a, std::vector<std::string> names) {
    std::vector<Polynomial> comps;
    for (const auto& e : a.indices()) comps.push_back(Polynomial::monomial(e));
    return Parametrization::affine(a.nvars(), std::move(comps), std::move(names));
}

}  // namespace osculum
