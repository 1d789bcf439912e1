#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "peakmetrics/permutation.hpp"

namespace peakmetrics {

enum class MetricKind { Hamming = 0, Linf = 1, KendallTau = 2 };

inline constexpr MetricKind kAllMetrics[] = {MetricKind::Hamming, MetricKind::Linf,
                                             MetricKind::KendallTau};

// CLI spellings: "hamming" | "linf" | "kendall".
MetricKind parse_metric(std::string_view name);
std::string metric_name(MetricKind m);

// Number of positions where a and b differ. Never 1 on distinct inputs.
std::uint64_t hamming(const Permutation& a, const Permutation& b);

// max_i |a(i) - b(i)|.
std::uint64_t linf(const Permutation& a, const Permutation& b);

// Number of deranged pairs: (i,j), i<j, with (a(i)-a(j))(b(i)-b(j)) < 0.
// O(n^2); kept as the permanent in-repo oracle for the fast path.
std::uint64_t kendall_tau(const Permutation& a, const Permutation& b);

// Same value as kendall_tau, via merge-sort inversion counting of the
// quotient compose(b, inverse(a)). O(n log n).
std::uint64_t kendall_tau_fast(const Permutation& a, const Permutation& b);

std::uint64_t distance(MetricKind m, const Permutation& a, const Permutation& b);

// A witness for the swap characterization of Kendall-Tau: applying `steps`
// in order to `source` (via apply_value_swap) yields `target`, and the
// number of steps equals kendall_tau(source, target).
struct SwapPath {
    Permutation source;
    Permutation target;
    std::vector<AdjacentValueSwap> steps;
};

// Minimal adjacent-value swap sequence from a to b. Deterministic: the
// quotient compose(b, inverse(a)) is bubble-sorted toward the identity,
// always at its smallest descent position; each removal of one inversion
// emits one value swap, applied to the source in emission order.
SwapPath minimal_swap_path(const Permutation& a, const Permutation& b);

// "1,4"; empty string for the empty path.
std::string to_string(const SwapPath& path);

} // namespace peakmetrics
