#pragma once

#include <string>
#include <vector>

#include "osculum/multi_index.hpp"

namespace osculum {

// Finite set of nonzero multi-indices, kept sorted in listing order.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::size_t nvars, std::vector<MultiIndex> indices);

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return idx_.size(); }
    const std::vector<MultiIndex>& indices() const { return idx_; }
    bool contains(const MultiIndex& e) const;

    bool is_downward_closed() const;
    bool contains_all_units() const;
    bool is_standard_shape() const { return is_downward_closed() && contains_all_units(); }

    bool operator==(const IndexSet& o) const { return nvars_ == o.nvars_ && idx_ == o.idx_; }
    std::string to_string() const;

private:
    std::size_t nvars_ = 0;
    std::vector<MultiIndex> idx_;
};

}  // namespace osculum
