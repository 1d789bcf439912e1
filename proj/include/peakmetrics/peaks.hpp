#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peakmetrics/permutation.hpp"

namespace peakmetrics {

// A set of candidate peak positions, stored sorted and deduplicated.
// Indices are positive; indices produced by peak extraction additionally
// satisfy 2 <= i <= n-1 and contain no two consecutive integers. Arbitrary
// positive sets are constructible so that admissibility stays a query
// rather than a constructor error.
class PeakSet {
  public:
    static PeakSet of(std::vector<int> indices);

    static PeakSet empty_set() { return PeakSet({}); }

    const std::vector<int>& indices() const { return indices_; }
    bool contains(int index) const;
    int count() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }

    bool operator==(const PeakSet&) const = default;
    auto operator<=>(const PeakSet&) const = default;

  private:
    explicit PeakSet(std::vector<int> indices) : indices_(std::move(indices)) {}

    std::vector<int> indices_;
};

// All indices i with 2 <= i <= n-1 and p(i-1) < p(i) > p(i+1), ascending.
PeakSet peak_set(const Permutation& p);

// True iff some permutation in S_n has peak set exactly `s`. Closed form:
// s is a subset of {2,...,n-1} with no two consecutive integers.
bool is_admissible(const PeakSet& s, int n);

// All admissible peak sets for S_n, ordered by (count, indices).
std::vector<PeakSet> all_admissible_sets(int n);

// Peak-preserving swap of values i and i+1. Always applies for i = 1; for
// i >= 2 applies only when the two values do not occupy adjacent positions
// (otherwise the swap may change the peak set and nullopt is returned).
// Throws SwapOutOfRange when i is outside 1..n-1.
std::optional<Permutation> checked_value_swap(const Permutation& p, int i);

// "{2,5,7}" or "2,5,7"; "{}" or "" for the empty set.
PeakSet parse_peak_set(std::string_view text);

// "{2,5,7}"; "{}" for the empty set.
std::string to_string(const PeakSet& s);

} // namespace peakmetrics
