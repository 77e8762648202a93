#include "osculum/multi_index.hpp"

#include <numeric>

#include "osculum/errors.hpp"

namespace osculum {

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t i) {
    MultiIndex m(nvars);
    m.e_.at(i) = 1;
    return m;
}

unsigned MultiIndex::degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (o.size() != size()) throw DimensionError("multi-index length mismatch");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

bool MultiIndex::divides(const MultiIndex& o) const {
    if (o.size() != size()) throw DimensionError("multi-index length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

std::vector<std::size_t> MultiIndex::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i]) s.push_back(i);
    return s;
}

std::string MultiIndex::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e_[i]);
    }
    return out + ")";
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a < b;
}

bool ListingLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return b < a;
}

namespace {

void compositions(std::size_t pos, unsigned left, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
        cur[pos] = v;
        compositions(pos + 1, left - v, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> indices_of_degree(std::size_t nvars, unsigned deg) {
    std::vector<MultiIndex> out;
    if (nvars == 0) {
        if (deg == 0) out.emplace_back(0);
        return out;
    }
    MultiIndex cur(nvars);
    compositions(0, deg, cur, out);
    return out;
}

std::vector<MultiIndex> indices_in_degree_range(std::size_t nvars, unsigned lo, unsigned hi) {
    std::vector<MultiIndex> out;
    for (unsigned d = lo; d <= hi; ++d) {
        auto part = indices_of_degree(nvars, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace osculum
