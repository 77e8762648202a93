#include "osculum/index_set.hpp"

#include <algorithm>

#include "osculum/errors.hpp"

namespace osculum {

IndexSet::IndexSet(std::size_t nvars, std::vector<MultiIndex> indices) : nvars_(nvars), idx_(std::move(indices)) {
    for (const auto& e : idx_) {
        if (e.size() != nvars_) throw DimensionError("index length does not match variable count");
        if (e.is_zero()) throw InvalidParameters("index sets exclude the zero index");
    }
    std::sort(idx_.begin(), idx_.end(), ListingLess{});
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

bool IndexSet::contains(const MultiIndex& e) const {
    return std::binary_search(idx_.begin(), idx_.end(), e, ListingLess{});
}

bool IndexSet::is_downward_closed() const {
    for (const auto& e : idx_)
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            MultiIndex f = e;
            f[i] -= 1;
            if (!f.is_zero() && !contains(f)) return false;
        }
    return true;
}

bool IndexSet::contains_all_units() const {
    for (std::size_t i = 0; i < nvars_; ++i)
        if (!contains(MultiIndex::unit(nvars_, i))) return false;
    return true;
}

std::string IndexSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (i) out += ",";
        out += idx_[i].to_string();
    }
    return out + "}";
}

}  // namespace osculum
