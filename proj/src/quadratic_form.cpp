#include "osculum/catalog.hpp"
#include "osculum/errors.hpp"

namespace osculum {

QuadraticForm::QuadraticForm(QMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw DimensionError("Gram matrix must be square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram_(i, j) != gram_(j, i)) throw InvalidParameters("Gram matrix must be symmetric");
}

QuadraticForm QuadraticForm::hyperbolic(std::size_t rank, std::size_t nvars) {
    if (rank > nvars) throw InvalidParameters("quadratic form rank exceeds the number of variables");
    QMatrix g(nvars, nvars);
    std::size_t i = 0;
    for (; i + 1 < rank; i += 2) g(i, i + 1) = g(i + 1, i) = make_rational(1, 2);
    if (i < rank) g(i, i) = 1;
    return QuadraticForm(std::move(g));
}

std::size_t QuadraticForm::rank() const { return osculum::rank(gram_); }

Rational QuadraticForm::bilinear(const QVector& x, const QVector& y) const {
    if (x.size() != nvars() || y.size() != nvars()) throw DimensionError("quadratic form argument length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < nvars(); ++j)
            if (!is_zero(gram_(i, j))) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
}

Rational QuadraticForm::value(const QVector& x) const { return bilinear(x, x); }

Polynomial QuadraticForm::as_polynomial() const {
    std::size_t n = nvars();
    Polynomial p(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(gram_(i, j))) p += Polynomial::variable(n, i) * Polynomial::variable(n, j) * gram_(i, j);
    return p;
}

}  // namespace osculum
