#include "osculum/random.hpp"

namespace osculum {

long Rng::uniform_int(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

Rational Rng::small_rational() { return make_rational(uniform_int(-9, 9), uniform_int(1, 3)); }

Rational Rng::nonzero_small_rational() {
    Rational q;
    do q = small_rational();
    while (is_zero(q));
    return q;
}

QVector Rng::small_vector(std::size_t n) {
    QVector v(n);
    for (auto& x : v) x = small_rational();
    return v;
}

QMatrix Rng::small_matrix(std::size_t rows, std::size_t cols) {
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational();
    return m;
}

QMatrix Rng::invertible_matrix(std::size_t n) {
    for (;;) {
        QMatrix m = small_matrix(n, n);
        if (rank(m) == n) return m;
    }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace osculum
