#pragma once

#include <cstdint>

#include "peakmetrics/metrics.hpp"
#include "peakmetrics/peaks.hpp"
#include "peakmetrics/permutation.hpp"

namespace peakmetrics {

// The identity permutation with the values k, k+1 exchanged for each k in s.
// Piecewise: position i holds i+1 if i in s, i-1 if i-1 in s, else i.
// Its peak set is exactly s. Throws InadmissibleSet.
Permutation identity_with_peaks(const PeakSet& s, int n);

// The reversed identity with positions k-1, k exchanged for each k in s.
// Piecewise: position i holds (n+1-i)+1 if i in s, (n+1-i)-1 if i+1 in s,
// else n+1-i. Its peak set is exactly s. Throws InadmissibleSet.
Permutation reversal_with_peaks(const PeakSet& s, int n);

// A pair of same-peak-set permutations attaining `claimed_distance` under
// `metric`; a is lexicographically smaller than b.
struct ExtremalPair {
    Permutation a;
    Permutation b;
    MetricKind metric;
    std::uint64_t claimed_distance = 0;
};

// Closed forms for the per-class extremes.
std::uint64_t min_distance_bound(MetricKind m);                // 2 / 1 / 1
std::uint64_t max_kendall_bound(int n, int peak_count);        // C(n,2) - 2|S|
std::uint64_t max_linf_bound(const PeakSet& s, int n);         // n-2 or n-1
std::uint64_t max_hamming_bound(const PeakSet& s, int n);      // n, except ({2},3) -> 2

// (sigma, sigma') with sigma' obtained by swapping values 1 and 2 in
// sigma = identity_with_peaks(s,n). Attains distance 2 / 1 / 1 under
// Hamming / Linf / KendallTau. Requires n >= 2 (ClassTooSmall).
ExtremalPair min_pair(const PeakSet& s, int n, MetricKind metric);

// (identity_with_peaks, reversal_with_peaks) at distance C(n,2) - 2|s|.
ExtremalPair max_kendall_pair(const PeakSet& s, int n);

// (identity_with_peaks, reversal_with_peaks) at distance n-2 when
// {2, n-1} is contained in s, n-1 otherwise.
ExtremalPair max_linf_pair(const PeakSet& s, int n);

// A pair in P(s;n) at Hamming distance n (special cases at n = 2, 3):
// stored base pairs for n <= 5, recursive construction above. Valid for
// any admissible s and any n >= 2; goes beyond enumeration scale.
ExtremalPair max_hamming_pair(const PeakSet& s, int n);

enum class ExtremalKind { Min, Max };

ExtremalPair extremal_pair(ExtremalKind kind, MetricKind metric, const PeakSet& s, int n);

} // namespace peakmetrics
