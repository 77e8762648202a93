#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace osculum {

using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

bool is_zero_vector(const QVector& v);
// True when a and b are nonzero and span the same line.
bool proportional(const QVector& a, const QVector& b);
// Scales so that the first nonzero entry is 1.
QVector normalize_projective(QVector v);

std::string to_string(const QVector& v);

}  // namespace osculum
