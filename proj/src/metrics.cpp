#include "peakmetrics/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace peakmetrics {

namespace {

void require_equal_sizes(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw SizeMismatch("distance between permutations of sizes " +
                           std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

// Merge-sort inversion count, destructive on `values`.
std::uint64_t count_inversions(std::vector<int>& values, std::vector<int>& buffer,
                               std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t count =
        count_inversions(values, buffer, lo, mid) + count_inversions(values, buffer, mid, hi);
    std::size_t left = lo, right = mid, out = lo;
    while (left < mid && right < hi) {
        if (values[left] <= values[right]) {
            buffer[out++] = values[left++];
        } else {
            count += mid - left;
            buffer[out++] = values[right++];
        }
    }
    while (left < mid) buffer[out++] = values[left++];
    while (right < hi) buffer[out++] = values[right++];
    std::copy(buffer.begin() + static_cast<std::ptrdiff_t>(lo),
              buffer.begin() + static_cast<std::ptrdiff_t>(hi),
              values.begin() + static_cast<std::ptrdiff_t>(lo));
    return count;
}

} // namespace

MetricKind parse_metric(std::string_view name) {
    if (name == "hamming") return MetricKind::Hamming;
    if (name == "linf") return MetricKind::Linf;
    if (name == "kendall") return MetricKind::KendallTau;
    throw ParseError("unknown metric \"" + std::string(name) +
                     "\" (expected hamming, linf, or kendall)");
}

std::string metric_name(MetricKind m) {
    switch (m) {
    case MetricKind::Hamming: return "hamming";
    case MetricKind::Linf: return "linf";
    case MetricKind::KendallTau: return "kendall";
    }
    std::abort();
}

std::uint64_t hamming(const Permutation& a, const Permutation& b) {
    require_equal_sizes(a, b);
    std::uint64_t count = 0;
    for (int i = 1; i <= a.size(); ++i)
        if (a(i) != b(i)) ++count;
    return count;
}

std::uint64_t linf(const Permutation& a, const Permutation& b) {
    require_equal_sizes(a, b);
    std::uint64_t best = 0;
    for (int i = 1; i <= a.size(); ++i) {
        const std::uint64_t diff = static_cast<std::uint64_t>(std::abs(a(i) - b(i)));
        best = std::max(best, diff);
    }
    return best;
}

std::uint64_t kendall_tau(const Permutation& a, const Permutation& b) {
    require_equal_sizes(a, b);
    const int n = a.size();
    std::uint64_t count = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const std::int64_t lhs = a(i) - a(j);
            const std::int64_t rhs = b(i) - b(j);
            if (lhs * rhs < 0) ++count;
        }
    }
    return count;
}

std::uint64_t kendall_tau_fast(const Permutation& a, const Permutation& b) {
    require_equal_sizes(a, b);
    std::vector<int> quotient = compose(b, inverse(a)).values();
    std::vector<int> buffer(quotient.size());
    return count_inversions(quotient, buffer, 0, quotient.size());
}

std::uint64_t distance(MetricKind m, const Permutation& a, const Permutation& b) {
    switch (m) {
    case MetricKind::Hamming: return hamming(a, b);
    case MetricKind::Linf: return linf(a, b);
    case MetricKind::KendallTau: return kendall_tau_fast(a, b);
    }
    std::abort();
}

SwapPath minimal_swap_path(const Permutation& a, const Permutation& b) {
    require_equal_sizes(a, b);
    // quotient(v) = the value b holds where a holds v; sorting it to the
    // identity by adjacent-position swaps mirrors value swaps on a.
    std::vector<int> quotient = compose(b, inverse(a)).values();
    const std::size_t n = quotient.size();
    std::vector<AdjacentValueSwap> steps;
    while (true) {
        std::size_t descent = n;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            if (quotient[j] > quotient[j + 1]) {
                descent = j;
                break;
            }
        }
        if (descent == n) break;
        steps.emplace_back(static_cast<int>(descent + 1));
        std::swap(quotient[descent], quotient[descent + 1]);
    }
    return SwapPath{a, b, std::move(steps)};
}

std::string to_string(const SwapPath& path) {
    std::ostringstream out;
    bool first = true;
    for (const auto& step : path.steps) {
        if (!first) out << ',';
        out << step.value;
        first = false;
    }
    return out.str();
}

} // namespace peakmetrics
