#include "osculum/catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "osculum/errors.hpp"
#include "osculum/osculation.hpp"

namespace osculum {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

ClassParams ClassParams::make(int r, int n, int q) {
    if (r < 1 || n < 2 || q < n - 1)
        throw InvalidParameters("class parameters need r >= 1, n >= 2, q >= n-1 (got " + std::to_string(r) + "," +
                                std::to_string(n) + "," + std::to_string(q) + ")");
    ClassParams p;
    p.r = r;
    p.n = n;
    p.q = q;
    p.rho = q / (n - 1);
    p.m = q + 1 - p.rho * (n - 1);
    return p;
}

std::vector<unsigned> ClassParams::weights() const {
    std::vector<unsigned> w(n - 1 - m, static_cast<unsigned>(rho - 1));
    w.insert(w.end(), m, static_cast<unsigned>(rho));
    return w;
}

std::int64_t pi_formula(const ClassParams& p) {
    return p.m * binomial(p.r + p.rho + 1, p.r + 1) + (p.n - 1 - p.m) * binomial(p.r + p.rho, p.r + 1) - 1;
}

std::int64_t pi_formula(int r, int n, int q) { return pi_formula(ClassParams::make(r, n, q)); }

std::int64_t castelnuovo_bound(int r, int n, int d) {
    if (d < 1 || n < 2) throw InvalidParameters("castelnuovo_bound needs d >= 1, n >= 2");
    long sigma = floor_div(d - 2, n - 1);
    long m = d - 1 - sigma * (n - 1);
    return m * binomial(sigma + 1, r + 1) + (n - 1 - m) * binomial(sigma, r + 1);
}

ScrollSpec::ScrollSpec(std::vector<int> degrees) : a_(std::move(degrees)) {
    if (a_.empty()) throw InvalidParameters("scroll needs at least one degree");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] < 0) throw InvalidParameters("scroll degrees must be non-negative");
        if (i && a_[i] > a_[i - 1]) throw InvalidParameters("scroll degrees must be non-increasing");
    }
    if (n() < 2) throw InvalidParameters("scroll degrees must sum to at least 1");
}

int ScrollSpec::n() const { return std::accumulate(a_.begin(), a_.end(), 0) + 1; }

std::string ScrollSpec::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a_[i]);
    }
    return s + ")";
}

std::vector<ScrollSpec> scroll_specs(int r, int sum) {
    std::vector<ScrollSpec> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (static_cast<int>(cur.size()) == r + 1) {
            if (left == 0) out.emplace_back(cur);
            return;
        }
        for (int v = std::min(left, cap); v >= 0; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(sum, sum);
    return out;
}

std::int64_t I_formula(const ScrollSpec& a, int rho, int chi) {
    if (rho < 1) throw InvalidParameters("I_formula needs rho >= 1");
    std::int64_t total = 0;
    for (const auto& alpha : indices_of_degree(a.degrees().size(), static_cast<unsigned>(rho))) {
        std::int64_t v = chi + 1;
        for (std::size_t i = 0; i < alpha.size(); ++i) v += static_cast<std::int64_t>(alpha[i]) * a[i];
        total += std::max<std::int64_t>(v, 0);
    }
    return total;
}

IndexSet build_A(const ScrollSpec& a, int rho, int chi) {
    int n = a.n(), r = a.r();
    if (rho < 1 || chi < -1 || chi > n - 2 || rho * (n - 1) + chi < n - 1)
        throw InvalidParameters("build_A needs rho >= 1, -1 <= chi <= n-2, rho(n-1)+chi >= n-1");
    std::vector<MultiIndex> out;
    for (const auto& alpha : indices_in_degree_range(r, 0, static_cast<unsigned>(rho))) {
        long bound = static_cast<long>(rho - static_cast<int>(alpha.degree())) * a[0] + chi;
        for (int j = 0; j < r; ++j) bound += static_cast<long>(alpha[j]) * a[j + 1];
        for (long k = 0; k <= bound; ++k) {
            std::vector<unsigned> e{static_cast<unsigned>(k)};
            e.insert(e.end(), alpha.exponents().begin(), alpha.exponents().end());
            MultiIndex mi(std::move(e));
            if (!mi.is_zero()) out.push_back(std::move(mi));
        }
    }
    return IndexSet(static_cast<std::size_t>(r + 1), std::move(out));
}

IndexSet build_A_cone(int r, int q) {
    if (r < 1 || q < 4 || q % 2 != 0) throw InvalidParameters("build_A_cone needs r >= 1 and even q >= 4");
    std::vector<MultiIndex> out;
    for (const auto& e : indices_in_degree_range(static_cast<std::size_t>(r + 1), 1, static_cast<unsigned>(q))) {
        unsigned alpha = e.degree() - e[0] - e[1];
        unsigned w = 2 * (e[0] + e[1]) + 4 * alpha;
        if (w >= 1 && w <= static_cast<unsigned>(q)) out.push_back(e);
    }
    return IndexSet(static_cast<std::size_t>(r + 1), std::move(out));
}

}  // namespace osculum
