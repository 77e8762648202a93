#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osculum/index_set.hpp"
#include "osculum/matrix.hpp"
#include "osculum/polynomial.hpp"

namespace osculum {

// Class parameters (r, n, q) together with q = rho (n-1) + m - 1, 1 <= m <= n-1.
struct ClassParams {
    int r = 1, n = 2, q = 1;
    int rho = 1, m = 1;

    static ClassParams make(int r, int n, int q);
    int chi() const { return m - 1; }
    // q = (rho+1)(n-1) - 1 also reads as the branch (rho + 1, -1).
    bool has_alternate_branch() const { return m == n - 1; }
    // The pondération: n-1-m weights rho-1 followed by m weights rho.
    std::vector<unsigned> weights() const;
};

std::int64_t pi_formula(const ClassParams& p);
std::int64_t pi_formula(int r, int n, int q);
std::int64_t castelnuovo_bound(int r, int n, int d);

class ScrollSpec {
public:
    ScrollSpec() = default;
    explicit ScrollSpec(std::vector<int> degrees);

    const std::vector<int>& degrees() const { return a_; }
    int r() const { return static_cast<int>(a_.size()) - 1; }
    int n() const;
    int operator[](std::size_t i) const { return a_[i]; }
    bool operator==(const ScrollSpec& o) const { return a_ == o.a_; }
    std::string to_string() const;

private:
    std::vector<int> a_{1};
};

// All non-increasing degree vectors of length r+1 with the given sum.
std::vector<ScrollSpec> scroll_specs(int r, int sum);

std::int64_t I_formula(const ScrollSpec& a, int rho, int chi);
// Index set of the monomial model, variables ordered (k, alpha_1, ..., alpha_r).
IndexSet build_A(const ScrollSpec& a, int rho, int chi);
// Variables ordered (i, j, alpha_1, ..., alpha_{r-1}).
IndexSet build_A_cone(int r, int q);

// Quadratic form x^T G x with a symmetric Gram matrix G.
class QuadraticForm {
public:
    explicit QuadraticForm(QMatrix gram);
    // x1 x2 + x3 x4 + ... (+ x_rank^2 if rank is odd) on nvars variables
    static QuadraticForm hyperbolic(std::size_t rank, std::size_t nvars);

    std::size_t nvars() const { return gram_.rows(); }
    std::size_t rank() const;
    const QMatrix& gram() const { return gram_; }
    Rational value(const QVector& x) const;
    Rational bilinear(const QVector& x, const QVector& y) const;
    Polynomial as_polynomial() const;

private:
    QMatrix gram_;
};

}  // namespace osculum
