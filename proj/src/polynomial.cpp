#include "osculum/polynomial.hpp"

#include "osculum/errors.hpp"

namespace osculum {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(MultiIndex(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    p.add_term(MultiIndex::unit(nvars, i), 1);
    return p;
}

Polynomial Polynomial::monomial(const MultiIndex& e, const Rational& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.degree());
}

Rational Polynomial::coefficient(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& e, const Rational& c) {
    if (e.size() != nvars_) throw DimensionError("monomial length does not match variable count");
    if (osculum::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (osculum::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw DimensionError("polynomial variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw DimensionError("polynomial variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (osculum::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw DimensionError("polynomial variable count mismatch");
    Polynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(nvars_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::partial(std::size_t var) const {
    if (var >= nvars_) throw DimensionError("partial: variable out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        MultiIndex f = e;
        f[var] -= 1;
        r.add_term(f, c * e[var]);
    }
    return r;
}

Rational Polynomial::eval(const QVector& point) const {
    if (point.size() != nvars_) throw DimensionError("eval: point length mismatch");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
            term *= p;
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::specialize(std::size_t var, const Rational& value) const {
    if (var >= nvars_) throw DimensionError("specialize: variable out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        MultiIndex f = e;
        f[var] = 0;
        Rational v;
        mpz_pow_ui(v.get_num_mpz_t(), value.get_num_mpz_t(), e[var]);
        mpz_pow_ui(v.get_den_mpz_t(), value.get_den_mpz_t(), e[var]);
        r.add_term(f, c * v);
    }
    return r;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs) const {
    if (subs.size() != nvars_) throw DimensionError("compose: wrong number of substitutions");
    std::size_t m = subs.empty() ? 0 : subs[0].nvars();
    for (const auto& s : subs)
        if (s.nvars() != m) throw DimensionError("compose: substitution variable counts differ");
    std::vector<std::vector<Polynomial>> powers(nvars_);
    Polynomial r(m);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(m, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(m, 1));
            while (pw.size() <= e[i]) pw.push_back(pw.back() * subs[i]);
            if (e[i]) term = term * pw[e[i]];
        }
        r += term;
    }
    return r;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

std::string Polynomial::to_string(const std::vector<std::string>& names_in) const {
    if (terms_.empty()) return "0";
    auto names = names_in.empty() ? default_variable_names(nvars_) : names_in;
    if (names.size() != nvars_) throw DimensionError("to_string: wrong number of names");
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

Polynomial poly_partial_derivative(const Polynomial& p, const MultiIndex& index) {
    if (index.size() != p.nvars()) throw DimensionError("derivative index length mismatch");
    Polynomial r = p;
    for (std::size_t i = 0; i < index.size(); ++i)
        for (unsigned k = 0; k < index[i]; ++k) r = r.partial(i);
    return r;
}

Rational poly_eval(const Polynomial& p, const QVector& point) { return p.eval(point); }

}  // namespace osculum
