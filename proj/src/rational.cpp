#include "osculum/rational.hpp"

#include "osculum/errors.hpp"

namespace osculum {

Rational make_rational(long num, long den) {
    if (den == 0) throw InvalidParameters("zero denominator");
    Rational q{Integer(num), Integer(den)};
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) throw ParseError("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_zero_vector(const QVector& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

bool proportional(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw DimensionError("proportional: length mismatch");
    if (is_zero_vector(a) || is_zero_vector(b)) return false;
    // a_i b_j == a_j b_i for a pivot j with a_j != 0
    std::size_t j = 0;
    while (is_zero(a[j])) ++j;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

QVector normalize_projective(QVector v) {
    for (const auto& x : v) {
        if (!is_zero(x)) {
            Rational inv = 1 / x;
            for (auto& y : v) y *= inv;
            return v;
        }
    }
    return v;
}

std::string to_string(const QVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

}  // namespace osculum

#include "osculum/field.hpp"

namespace osculum {

bool rational_sqrt(const Rational& x, Rational& root) {
    if (sgn(x) < 0) return false;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

}  // namespace osculum
