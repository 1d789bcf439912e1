#include "peakmetrics/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "peakmetrics/enumerate.hpp"

namespace peakmetrics {

namespace {

void require_admissible(const PeakSet& s, int n) {
    if (!is_admissible(s, n))
        throw InadmissibleSet("peak set " + to_string(s) + " is inadmissible for n = " +
                              std::to_string(n));
}

void require_pairable(int n) {
    if (n < 2)
        throw ClassTooSmall("extremal pairs need n >= 2, got n = " + std::to_string(n));
}

ExtremalPair normalized(Permutation a, Permutation b, MetricKind metric,
                        std::uint64_t claimed) {
    if (b < a) std::swap(a, b);
    return ExtremalPair{std::move(a), std::move(b), metric, claimed};
}

using BaseTable = std::map<std::vector<int>, std::pair<std::vector<int>, std::vector<int>>>;

// Hamming-distance-n base pairs for n = 4 and n = 5, keyed by peak set.
const BaseTable& base_pairs_n4() {
    static const BaseTable table = {
        {{}, {{1, 2, 3, 4}, {4, 3, 2, 1}}},
        {{2}, {{1, 3, 2, 4}, {2, 4, 3, 1}}},
        {{3}, {{1, 3, 4, 2}, {4, 2, 3, 1}}},
    };
    return table;
}

const BaseTable& base_pairs_n5() {
    static const BaseTable table = {
        {{}, {{1, 2, 3, 4, 5}, {5, 3, 2, 1, 4}}},
        {{2}, {{1, 3, 2, 4, 5}, {2, 5, 3, 1, 4}}},
        {{3}, {{1, 3, 4, 2, 5}, {5, 2, 3, 1, 4}}},
        {{4}, {{4, 3, 2, 5, 1}, {5, 4, 1, 3, 2}}},
        {{2, 4}, {{1, 3, 2, 5, 4}, {4, 5, 1, 3, 2}}},
    };
    return table;
}

// Orders the recursion input so that position `pos` of the second member
// does not hold `value`; the pair differs everywhere, so at most one member
// can violate that.
std::pair<Permutation, Permutation> oriented(ExtremalPair pair, int pos, int value) {
    if (pair.b(pos) != value) return {std::move(pair.a), std::move(pair.b)};
    return {std::move(pair.b), std::move(pair.a)};
}

} // namespace

Permutation identity_with_peaks(const PeakSet& s, int n) {
    require_admissible(s, n);
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int v = i;
        if (s.contains(i)) v = i + 1;
        else if (s.contains(i - 1)) v = i - 1;
        values[static_cast<std::size_t>(i - 1)] = v;
    }
    return Permutation::from_one_line(std::move(values));
}

Permutation reversal_with_peaks(const PeakSet& s, int n) {
    require_admissible(s, n);
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int v = n + 1 - i;
        if (s.contains(i)) v = (n + 1 - i) + 1;
        else if (s.contains(i + 1)) v = (n + 1 - i) - 1;
        values[static_cast<std::size_t>(i - 1)] = v;
    }
    return Permutation::from_one_line(std::move(values));
}

std::uint64_t min_distance_bound(MetricKind m) {
    return m == MetricKind::Hamming ? 2 : 1;
}

std::uint64_t max_kendall_bound(int n, int peak_count) {
    return binom2(static_cast<std::uint64_t>(n)) - 2 * static_cast<std::uint64_t>(peak_count);
}

std::uint64_t max_linf_bound(const PeakSet& s, int n) {
    const bool pinned_ends = s.contains(2) && s.contains(n - 1);
    return static_cast<std::uint64_t>(pinned_ends ? n - 2 : n - 1);
}

std::uint64_t max_hamming_bound(const PeakSet& s, int n) {
    if (n == 3 && s.indices() == std::vector<int>{2}) return 2;
    return static_cast<std::uint64_t>(n);
}

ExtremalPair min_pair(const PeakSet& s, int n, MetricKind metric) {
    require_admissible(s, n);
    require_pairable(n);
    const Permutation a = identity_with_peaks(s, n);
    const Permutation b = *checked_value_swap(a, 1); // i = 1 always applies
    return normalized(a, b, metric, min_distance_bound(metric));
}

ExtremalPair max_kendall_pair(const PeakSet& s, int n) {
    require_admissible(s, n);
    require_pairable(n);
    return normalized(identity_with_peaks(s, n), reversal_with_peaks(s, n),
                      MetricKind::KendallTau, max_kendall_bound(n, s.count()));
}

ExtremalPair max_linf_pair(const PeakSet& s, int n) {
    require_admissible(s, n);
    require_pairable(n);
    return normalized(identity_with_peaks(s, n), reversal_with_peaks(s, n), MetricKind::Linf,
                      max_linf_bound(s, n));
}

ExtremalPair max_hamming_pair(const PeakSet& s, int n) {
    require_admissible(s, n);
    require_pairable(n);
    const std::uint64_t claimed = max_hamming_bound(s, n);

    if (n == 2) return normalized(Permutation::identity(2), Permutation::reverse_identity(2),
                                  MetricKind::Hamming, claimed);
    if (n == 3) {
        // 321 fixes the middle entry, so the peakless distance-3 partner of
        // 123 is the cyclic shift 312 instead.
        if (s.empty())
            return normalized(Permutation::identity(3), Permutation::from_one_line({3, 1, 2}),
                              MetricKind::Hamming, claimed);
        return normalized(Permutation::from_one_line({1, 3, 2}),
                          Permutation::from_one_line({2, 3, 1}), MetricKind::Hamming, claimed);
    }
    if (n == 4 || n == 5) {
        const BaseTable& table = n == 4 ? base_pairs_n4() : base_pairs_n5();
        const auto& entry = table.at(s.indices());
        return normalized(Permutation::from_one_line(entry.first),
                          Permutation::from_one_line(entry.second), MetricKind::Hamming,
                          claimed);
    }

    if (!s.contains(n - 1)) {
        // Grow a distance-(n-1) pair on the same peak set by one entry: append
        // n to both, then swap values n-1 and n in the member that does not
        // hold n-1 at position n-1 (peak-preserving by the swap lemma).
        auto [sigma, rho] = oriented(max_hamming_pair(s, n - 1), n - 1, n - 1);
        std::vector<int> sigma_values = sigma.values();
        sigma_values.push_back(n);
        std::vector<int> rho_values = rho.values();
        rho_values.push_back(n);
        const Permutation grown_rho =
            apply_value_swap(Permutation::from_one_line(std::move(rho_values)),
                             AdjacentValueSwap{n - 1});
        return normalized(Permutation::from_one_line(std::move(sigma_values)), grown_rho,
                          MetricKind::Hamming, claimed);
    }

    // Peak at n-1: recurse two sizes down without it, append a fresh peak.
    std::vector<int> trimmed = s.indices();
    trimmed.pop_back();
    auto [sigma, rho] = oriented(max_hamming_pair(PeakSet::of(std::move(trimmed)), n - 2),
                                 n - 2, n - 2);
    std::vector<int> sigma_values = sigma.values();
    sigma_values.push_back(n);
    sigma_values.push_back(n - 1);
    std::vector<int> rho_values = rho.values();
    for (int& v : rho_values) {
        if (v == n - 2) v = n; // cyclic (n, n-1, n-2) shift keeps peaks intact
    }
    rho_values.push_back(n - 1);
    rho_values.push_back(n - 2);
    return normalized(Permutation::from_one_line(std::move(sigma_values)),
                      Permutation::from_one_line(std::move(rho_values)), MetricKind::Hamming,
                      claimed);
}

ExtremalPair extremal_pair(ExtremalKind kind, MetricKind metric, const PeakSet& s, int n) {
    if (kind == ExtremalKind::Min) return min_pair(s, n, metric);
    switch (metric) {
    case MetricKind::Hamming: return max_hamming_pair(s, n);
    case MetricKind::Linf: return max_linf_pair(s, n);
    case MetricKind::KendallTau: return max_kendall_pair(s, n);
    }
    std::abort();
}

} // namespace peakmetrics
