#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "peakmetrics/metrics.hpp"
#include "peakmetrics/peaks.hpp"
#include "peakmetrics/permutation.hpp"

namespace peakmetrics {

// Work limits. Enumeration is linear in n!, pairwise summaries quadratic in
// class size; n = 8 pairwise completes in minutes on one core, so it is the
// default ceiling. Raise explicitly to go beyond.
struct Caps {
    int enumeration = 9;
    int pairwise = 8;
};

inline Caps default_caps() { return Caps{}; }

void check_enumeration_cap(int n, const Caps& caps);

// Calls fn with every permutation of S_n exactly once, in lexicographic
// order. Throws CapExceeded when n > caps.enumeration.
template <typename Fn>
void enumerate_sn(int n, Fn&& fn, const Caps& caps = {}) {
    check_enumeration_cap(n, caps);
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
    do {
        fn(Permutation::from_one_line(values));
    } while (std::next_permutation(values.begin(), values.end()));
}

std::vector<Permutation> all_of_sn(int n, const Caps& caps = {});

// P(S;n): the members of S_n with peak set exactly s, in lexicographic
// order. Empty iff s is inadmissible for n.
struct PeakClass {
    PeakSet s;
    int n;
    std::vector<Permutation> members;
};

PeakClass peak_class(const PeakSet& s, int n, const Caps& caps = {});

// |P(S;n)| together with the quotient |P(S;n)| / 2^(n-|S|-1). The
// divisibility always holds for nonempty classes; a violation is reported
// as DivisibilityViolation since it would indicate a broken kernel.
struct ClassSize {
    std::uint64_t size = 0;
    std::uint64_t quotient = 0;
};

ClassSize class_size(const PeakSet& s, int n, const Caps& caps = {});

// True iff the classes over all admissible peak sets are pairwise disjoint,
// cover S_n, and their sizes sum to n!.
bool partition_check(int n, const Caps& caps = {});

// Min/max of one metric over all unordered pairs of distinct members, with
// deterministic witnesses: among attaining pairs, the lexicographically
// smallest (first, second).
struct DistanceSummary {
    PeakSet s;
    int n;
    MetricKind metric;
    std::uint64_t class_size = 0;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    std::pair<Permutation, Permutation> min_witness;
    std::pair<Permutation, Permutation> max_witness;
};

struct MetricExtremes {
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    std::pair<Permutation, Permutation> min_witness;
    std::pair<Permutation, Permutation> max_witness;
};

// One sweep over all unordered pairs of `members`, all three metrics at
// once, indexed by MetricKind. Requires members.size() >= 2 (ClassTooSmall
// otherwise) and sorted, distinct members for witness determinism. May run
// data-parallel internally; witnesses are schedule-independent.
std::array<MetricExtremes, 3> pairwise_extremes(const std::vector<Permutation>& members);

// Throws ClassTooSmall when |P(s;n)| < 2 and CapExceeded when
// n > caps.pairwise.
DistanceSummary distance_summary(const PeakSet& s, int n, MetricKind metric,
                                 const Caps& caps = {});

// All three summaries from a single pairwise sweep.
std::array<DistanceSummary, 3> summarize_class(const PeakSet& s, int n,
                                               const Caps& caps = {});

std::uint64_t factorial(int n);
std::uint64_t binom2(std::uint64_t n); // n choose 2

} // namespace peakmetrics
