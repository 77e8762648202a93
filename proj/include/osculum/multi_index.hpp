#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace osculum {

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t nvars) : e_(nvars, 0) {}
    MultiIndex(std::initializer_list<unsigned> il) : e_(il) {}
    explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}

    static MultiIndex unit(std::size_t nvars, std::size_t i);

    std::size_t size() const { return e_.size(); }
    unsigned degree() const;
    bool is_zero() const { return degree() == 0; }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    MultiIndex operator+(const MultiIndex& o) const;
    // componentwise <=
    bool divides(const MultiIndex& o) const;

    std::vector<std::size_t> support() const;
    std::string to_string() const;

    // plain lexicographic comparison
    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<unsigned> e_;
};

// Graded lexicographic monomial order: total degree first, then lex with x1 > x2 > ...
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Listing order used for coordinates: degree ascending, then grlex-descending within a degree,
// e.g. s, t, s^2, st, t^2.
struct ListingLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// All indices in nvars variables of total degree exactly deg, in listing order.
std::vector<MultiIndex> indices_of_degree(std::size_t nvars, unsigned deg);
// All indices with lo <= degree <= hi, in listing order.
std::vector<MultiIndex> indices_in_degree_range(std::size_t nvars, unsigned lo, unsigned hi);

}  // namespace osculum
