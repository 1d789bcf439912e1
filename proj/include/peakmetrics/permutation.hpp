#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "peakmetrics/errors.hpp"

namespace peakmetrics {

// Sizes above this would overflow 64-bit pair counts; also far above any
// enumerable scale this library targets.
inline constexpr int kMaxPermutationSize = 1'000'000;

// A permutation of {1,...,n} in one-line notation. Positions and values are
// 1-based on every public surface. Immutable value type; all operations
// return fresh values.
class Permutation {
  public:
    // Validates that `values` is a bijection on {1,...,values.size()}.
    static Permutation from_one_line(std::vector<int> values);

    static Permutation identity(int n);

    // n n-1 ... 2 1
    static Permutation reverse_identity(int n);

    int size() const { return static_cast<int>(values_.size()); }

    // Value at 1-based position.
    int operator()(int position) const { return values_[position - 1]; }

    const std::vector<int>& values() const { return values_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

  private:
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}

    std::vector<int> values_;
};

// The transposition (i,i+1) acting by left multiplication: it exchanges the
// positions holding values i and i+1.
struct AdjacentValueSwap {
    explicit AdjacentValueSwap(int value_index);
    int value; // 1 <= value; value <= n-1 is checked at application time
};

// result(k) = outer(inner(k)); throws SizeMismatch on unequal sizes.
Permutation compose(const Permutation& outer, const Permutation& inner);

Permutation inverse(const Permutation& p);

// Exchanges the contents of the positions holding values s.value and
// s.value+1. Involution. Throws SwapOutOfRange when s.value >= n.
Permutation apply_value_swap(const Permutation& p, AdjacentValueSwap s);

// One-line notation text: decimal values separated by spaces or commas,
// e.g. "5 8 3 2 7 1 6 4" or "5,8,3,2,7,1,6,4".
Permutation parse_one_line(std::string_view text);

// Emits single-space separation.
std::string to_one_line(const Permutation& p);

} // namespace peakmetrics
