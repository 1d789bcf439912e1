#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "peakmetrics/constructions.hpp"
#include "peakmetrics/enumerate.hpp"

using namespace peakmetrics;

namespace {

Permutation P(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }

PeakSet S(std::vector<int> v) { return PeakSet::of(std::move(v)); }

// Swap-description oracle for identity_with_peaks: literally swap the
// values k and k+1 in the identity, one k at a time.
Permutation identity_by_swaps(const PeakSet& s, int n) {
    Permutation current = Permutation::identity(n);
    for (int k : s.indices()) current = apply_value_swap(current, AdjacentValueSwap{k});
    return current;
}

// Swap-description oracle for reversal_with_peaks: swap the entries at
// positions k-1 and k of the reversed identity, one k at a time.
Permutation reversal_by_swaps(const PeakSet& s, int n) {
    std::vector<int> values = Permutation::reverse_identity(n).values();
    for (int k : s.indices())
        std::swap(values[static_cast<std::size_t>(k - 2)],
                  values[static_cast<std::size_t>(k - 1)]);
    return P(std::move(values));
}

using GoldenTable = std::map<std::vector<int>, std::pair<std::vector<int>, std::vector<int>>>;

// Frozen distance-n pairs for n = 4, 5, 6 (independent copies; the n = 6
// column doubles as the golden output of the recursive construction).
const GoldenTable kGolden4 = {
    {{}, {{1, 2, 3, 4}, {4, 3, 2, 1}}},
    {{2}, {{1, 3, 2, 4}, {2, 4, 3, 1}}},
    {{3}, {{1, 3, 4, 2}, {4, 2, 3, 1}}},
};

const GoldenTable kGolden5 = {
    {{}, {{1, 2, 3, 4, 5}, {5, 3, 2, 1, 4}}},
    {{2}, {{1, 3, 2, 4, 5}, {2, 5, 3, 1, 4}}},
    {{3}, {{1, 3, 4, 2, 5}, {5, 2, 3, 1, 4}}},
    {{4}, {{4, 3, 2, 5, 1}, {5, 4, 1, 3, 2}}},
    {{2, 4}, {{1, 3, 2, 5, 4}, {4, 5, 1, 3, 2}}},
};

const GoldenTable kGolden6 = {
    {{}, {{1, 2, 3, 4, 5, 6}, {6, 3, 2, 1, 4, 5}}},
    {{2}, {{1, 3, 2, 4, 5, 6}, {2, 6, 3, 1, 4, 5}}},
    {{3}, {{1, 3, 4, 2, 5, 6}, {6, 2, 3, 1, 4, 5}}},
    {{4}, {{4, 3, 2, 5, 1, 6}, {6, 4, 1, 3, 2, 5}}},
    {{5}, {{1, 2, 3, 4, 6, 5}, {6, 3, 2, 1, 5, 4}}},
    {{2, 4}, {{1, 3, 2, 5, 4, 6}, {4, 6, 1, 3, 2, 5}}},
    {{2, 5}, {{1, 3, 2, 4, 6, 5}, {2, 6, 3, 1, 5, 4}}},
    {{3, 5}, {{1, 3, 4, 2, 6, 5}, {6, 2, 3, 1, 5, 4}}},
};

} // namespace

TEST_CASE("identity_with_peaks piecewise formula") {
    CHECK(identity_with_peaks(S({2, 5, 7}), 9) == P({1, 3, 2, 4, 6, 5, 8, 7, 9}));
    CHECK(identity_with_peaks(S({2}), 4) == P({1, 3, 2, 4}));
    for (int n : {1, 2, 5, 9})
        CHECK(identity_with_peaks(S({}), n) == Permutation::identity(n));
    CHECK_THROWS_AS(identity_with_peaks(S({2, 3}), 5), InadmissibleSet);
    CHECK_THROWS_AS(identity_with_peaks(S({2}), 2), InadmissibleSet);
}

TEST_CASE("reversal_with_peaks piecewise formula") {
    CHECK(reversal_with_peaks(S({2, 5, 7}), 9) == P({8, 9, 7, 5, 6, 3, 4, 2, 1}));
    CHECK(reversal_with_peaks(S({2}), 5) == P({4, 5, 3, 2, 1}));
    for (int n : {1, 2, 5, 9})
        CHECK(reversal_with_peaks(S({}), n) == Permutation::reverse_identity(n));
    CHECK_THROWS_AS(reversal_with_peaks(S({1}), 5), InadmissibleSet);
}

TEST_CASE("piecewise formulas agree with the swap descriptions, n <= 9") {
    for (int n = 1; n <= 9; ++n) {
        for (const PeakSet& s : all_admissible_sets(n)) {
            CHECK(identity_with_peaks(s, n) == identity_by_swaps(s, n));
            CHECK(reversal_with_peaks(s, n) == reversal_by_swaps(s, n));
        }
    }
}

TEST_CASE("both constructions land in the requested class, n <= 9") {
    for (int n = 1; n <= 9; ++n) {
        for (const PeakSet& s : all_admissible_sets(n)) {
            CHECK(peak_set(identity_with_peaks(s, n)) == s);
            CHECK(peak_set(reversal_with_peaks(s, n)) == s);
        }
    }
}

TEST_CASE("min_pair attains (2,1,1) across all admissible classes, n <= 8") {
    CHECK(min_pair(S({2}), 4, MetricKind::Hamming).a == P({1, 3, 2, 4}));
    CHECK(min_pair(S({2}), 4, MetricKind::Hamming).b == P({2, 3, 1, 4}));
    for (int n = 2; n <= 8; ++n) {
        for (const PeakSet& s : all_admissible_sets(n)) {
            const ExtremalPair pair = min_pair(s, n, MetricKind::Hamming);
            CHECK(hamming(pair.a, pair.b) == 2);
            CHECK(linf(pair.a, pair.b) == 1);
            CHECK(kendall_tau(pair.a, pair.b) == 1);
            CHECK(peak_set(pair.a) == s);
            CHECK(peak_set(pair.b) == s);
            CHECK(pair.a < pair.b);
        }
    }
    CHECK(min_pair(S({}), 2, MetricKind::KendallTau).claimed_distance == 1);
    CHECK_THROWS_AS(min_pair(S({}), 1, MetricKind::Hamming), ClassTooSmall);
}

TEST_CASE("max Kendall-Tau pairs") {
    const ExtremalPair big = max_kendall_pair(S({2, 5, 7}), 9);
    CHECK(big.claimed_distance == 30);
    CHECK(kendall_tau(big.a, big.b) == 30);

    const ExtremalPair s4 = max_kendall_pair(S({2}), 4);
    CHECK(s4.a == P({1, 3, 2, 4}));
    CHECK(s4.b == P({3, 4, 2, 1}));
    CHECK(s4.claimed_distance == 4);
    CHECK(kendall_tau(s4.a, s4.b) == 4);

    for (int n = 2; n <= 8; ++n) {
        CHECK(max_kendall_pair(S({}), n).claimed_distance ==
              binom2(static_cast<std::uint64_t>(n)));
        for (const PeakSet& s : all_admissible_sets(n)) {
            const ExtremalPair pair = max_kendall_pair(s, n);
            CHECK(kendall_tau(pair.a, pair.b) == pair.claimed_distance);
            CHECK(pair.claimed_distance ==
                  binom2(static_cast<std::uint64_t>(n)) -
                      2 * static_cast<std::uint64_t>(s.count()));
        }
    }
}

TEST_CASE("exactly the two flanking index pairs per peak are concordant, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        for (const PeakSet& s : all_admissible_sets(n)) {
            const Permutation a = identity_with_peaks(s, n);
            const Permutation b = reversal_with_peaks(s, n);
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    const bool deranged =
                        static_cast<std::int64_t>(a(i) - a(j)) * (b(i) - b(j)) < 0;
                    const bool flanks_a_peak =
                        (j == i + 1) && (s.contains(j) || s.contains(i));
                    CHECK(deranged == !flanks_a_peak);
                }
            }
        }
    }
}

TEST_CASE("max l-infinity pairs") {
    const ExtremalPair pinned = max_linf_pair(S({2, 4}), 5);
    CHECK(pinned.a == P({1, 3, 2, 5, 4}));
    CHECK(pinned.b == P({4, 5, 2, 3, 1}));
    CHECK(pinned.claimed_distance == 3);
    CHECK(linf(pinned.a, pinned.b) == 3);

    const ExtremalPair loose = max_linf_pair(S({3}), 5);
    CHECK(loose.a == P({1, 2, 4, 3, 5}));
    CHECK(loose.b == P({5, 3, 4, 2, 1}));
    CHECK(loose.claimed_distance == 4);
    CHECK(linf(loose.a, loose.b) == 4);

    for (int n = 2; n <= 8; ++n) {
        CHECK(max_linf_pair(S({}), n).claimed_distance == static_cast<std::uint64_t>(n - 1));
        for (const PeakSet& s : all_admissible_sets(n)) {
            const ExtremalPair pair = max_linf_pair(s, n);
            const std::uint64_t expected =
                s.contains(2) && s.contains(n - 1) ? static_cast<std::uint64_t>(n - 2)
                                                   : static_cast<std::uint64_t>(n - 1);
            CHECK(pair.claimed_distance == expected);
            CHECK(linf(pair.a, pair.b) == expected);
        }
    }
}

TEST_CASE("max Hamming base cases reproduce the stored tables byte for byte") {
    const std::map<int, const GoldenTable*> tables = {{4, &kGolden4}, {5, &kGolden5}};
    for (const auto& [n, table] : tables) {
        for (const auto& [indices, rows] : *table) {
            const ExtremalPair pair = max_hamming_pair(S(indices), n);
            CHECK(pair.a == P(rows.first));
            CHECK(pair.b == P(rows.second));
            CHECK(pair.claimed_distance == static_cast<std::uint64_t>(n));
        }
    }
}

TEST_CASE("max Hamming small-n special values") {
    const ExtremalPair two = max_hamming_pair(S({}), 2);
    CHECK(two.a == P({1, 2}));
    CHECK(two.b == P({2, 1}));
    CHECK(two.claimed_distance == 2);

    const ExtremalPair three = max_hamming_pair(S({}), 3);
    CHECK(three.a == P({1, 2, 3}));
    CHECK(three.b == P({3, 1, 2})); // 321 only differs in two entries
    CHECK(three.claimed_distance == 3);
    CHECK(hamming(three.a, three.b) == 3);

    // The lone class where distance n is unattainable; the best is 2.
    const ExtremalPair peaked = max_hamming_pair(S({2}), 3);
    CHECK(peaked.a == P({1, 3, 2}));
    CHECK(peaked.b == P({2, 3, 1}));
    CHECK(peaked.claimed_distance == 2);
    CHECK(hamming(peaked.a, peaked.b) == 2);
}

TEST_CASE("the n = 6 construction reproduces the golden table byte for byte") {
    CHECK(all_admissible_sets(6).size() == kGolden6.size());
    for (const auto& [indices, rows] : kGolden6) {
        const ExtremalPair pair = max_hamming_pair(S(indices), 6);
        CHECK(pair.a == P(rows.first));
        CHECK(pair.b == P(rows.second));
        CHECK(hamming(pair.a, pair.b) == 6);
    }
}

TEST_CASE("recursive max Hamming construction, all admissible sets, n <= 12") {
    for (int n = 4; n <= 12; ++n) {
        for (const PeakSet& s : all_admissible_sets(n)) {
            const ExtremalPair pair = max_hamming_pair(s, n);
            CHECK(hamming(pair.a, pair.b) == static_cast<std::uint64_t>(n));
            CHECK(peak_set(pair.a) == s);
            CHECK(peak_set(pair.b) == s);
            CHECK(pair.a < pair.b);
        }
    }
}

TEST_CASE("extremal_pair dispatch and error paths") {
    CHECK(extremal_pair(ExtremalKind::Max, MetricKind::Hamming, S({3}), 4).b == P({4, 2, 3, 1}));
    CHECK(extremal_pair(ExtremalKind::Min, MetricKind::Linf, S({}), 3).claimed_distance == 1);
    CHECK_THROWS_AS(max_hamming_pair(S({2, 3}), 6), InadmissibleSet);
    CHECK_THROWS_AS(max_kendall_pair(S({}), 1), ClassTooSmall);
    CHECK_THROWS_AS(max_linf_pair(S({5}), 5), InadmissibleSet);
}
