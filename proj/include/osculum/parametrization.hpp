#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osculum/index_set.hpp"
#include "osculum/polynomial.hpp"
#include "osculum/subspace.hpp"

namespace osculum {

// Germ v : Q^d -> P^N given by its homogeneous lift F_0, ..., F_N. Affine charts x = v(t)
// are stored with F_0 = 1.
class Parametrization {
public:
    static Parametrization affine(std::size_t d, std::vector<Polynomial> components,
                                  std::vector<std::string> names = {});
    static Parametrization homogeneous(std::size_t d, std::vector<Polynomial> lift,
                                       std::vector<std::string> names = {});

    std::size_t param_dim() const { return d_; }
    std::size_t ambient_dim() const { return lift_.size() - 1; }
    const std::vector<Polynomial>& lift() const { return lift_; }
    const std::vector<std::string>& names() const { return names_; }
    // Maximal total degree of the lift components.
    unsigned max_degree() const;

    QVector point(const QVector& p) const;
    ProjSubspace span() const;
    std::size_t jacobian_rank_at(const QVector& p) const;

    // g o v for a (M+1) x (N+1) matrix g.
    Parametrization transformed(const QMatrix& g) const;
    // Fixes the variables with a value, keeps the others as parameters (in order).
    Parametrization sliced(const std::vector<std::optional<Rational>>& fixed) const;

    std::vector<std::string> component_strings() const;

private:
    Parametrization(std::size_t d, std::vector<Polynomial> lift, std::vector<std::string> names);
    void check_generic_rank() const;

    std::size_t d_;
    std::vector<Polynomial> lift_;
    std::vector<std::string> names_;
};

// Monomial map t -> (t^e)_{e in A} in listing order.
Parametrization monomial_parametrization(const IndexSet& a, std::vector<std::string> names = {});

}  // namespace osculum
