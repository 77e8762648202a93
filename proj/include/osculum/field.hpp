#pragma once

#include <string>

#include "osculum/errors.hpp"
#include "osculum/rational.hpp"

namespace osculum {

// Element a + b*sqrt(D) of Q(sqrt D). The radicand only matters when b != 0, so
// rational constants (b = 0) mix freely with elements of any extension.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rational& a) : a_(a) {}
    QuadExt(long a) : a_(a) {}
    QuadExt(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& radicand() const { return d_; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadExt conjugate() const { return {a_, -b_, d_}; }
    Rational norm() const { return a_ * a_ - d_ * b_ * b_; }

    QuadExt operator-() const { return {-a_, -b_, d_}; }
    QuadExt& operator+=(const QuadExt& o) {
        d_ = pick(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        d_ = pick(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        Rational d = pick(o);
        Rational na = a_ * o.a_ + d * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = na;
        b_ = nb;
        d_ = d;
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) {
        if (o.is_zero()) throw DimensionError("division by zero in Q(sqrt D)");
        Rational n = o.norm();
        QuadExt inv(o.a_ / n, -o.b_ / n, o.d_);
        return *this *= inv;
    }
    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    bool operator==(const QuadExt& o) const { return a_ == o.a_ && b_ == o.b_; }

    std::string to_string() const {
        if (is_rational()) return a_.get_str();
        return a_.get_str() + " + " + b_.get_str() + "*sqrt(" + d_.get_str() + ")";
    }

private:
    Rational pick(const QuadExt& o) const {
        if (sgn(b_) != 0 && sgn(o.b_) != 0 && d_ != o.d_) throw DimensionError("mixing different quadratic extensions");
        return sgn(b_) != 0 ? d_ : (sgn(o.b_) != 0 ? o.d_ : (sgn(d_) != 0 ? d_ : o.d_));
    }
    Rational a_, b_, d_;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

// Exact square root of a rational if it is a perfect square.
bool rational_sqrt(const Rational& x, Rational& root);

}  // namespace osculum
