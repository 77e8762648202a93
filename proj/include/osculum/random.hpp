#pragma once

#include <cstdint>
#include <random>

#include "osculum/matrix.hpp"

namespace osculum {

// Seeded source of small random rationals. Draws are reduced from raw 64-bit outputs so the
// sequence does not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    long uniform_int(long lo, long hi);
    // numerator in [-9, 9], denominator in {1, 2, 3}
    Rational small_rational();
    Rational nonzero_small_rational();
    QVector small_vector(std::size_t n);
    QMatrix small_matrix(std::size_t rows, std::size_t cols);
    QMatrix invertible_matrix(std::size_t n);

private:
    std::mt19937_64 eng_;
};

// Stream-splitting for per-trial seeds (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace osculum
