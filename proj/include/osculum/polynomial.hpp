#pragma once

#include <map>
#include <string>
#include <vector>

#include "osculum/multi_index.hpp"
#include "osculum/rational.hpp"

namespace osculum {

class Polynomial {
public:
    using Terms = std::map<MultiIndex, Rational, GrlexLess>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial monomial(const MultiIndex& e, const Rational& c = 1);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    Rational coefficient(const MultiIndex& e) const;

    void add_term(const MultiIndex& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Polynomial pow(unsigned e) const;
    Polynomial partial(std::size_t var) const;
    Rational eval(const QVector& point) const;

    // Replaces variable var by the given value, keeping the variable count.
    Polynomial specialize(std::size_t var, const Rational& value) const;
    // Composition p(q_1, ..., q_d), all q_i sharing one variable count.
    Polynomial compose(const std::vector<Polynomial>& subs) const;

    // Canonical text form, terms in descending graded-lex order.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t nvars_;
    Terms terms_;
};

Polynomial poly_partial_derivative(const Polynomial& p, const MultiIndex& index);
Rational poly_eval(const Polynomial& p, const QVector& point);

std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace osculum
