#include "peakmetrics/enumerate.hpp"

#include <cstdlib>
#include <map>
#include <thread>

namespace peakmetrics {

namespace {

// Candidate extreme: distance plus the (i,j) member-index pair attaining it.
// Members are sorted, so minimizing (i,j) lexicographically picks the
// lexicographically smallest witness pair.
struct Candidate {
    std::uint64_t d = 0;
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    bool valid = false;
};

bool improves_min(const Candidate& next, const Candidate& best) {
    if (!best.valid) return true;
    if (next.d != best.d) return next.d < best.d;
    if (next.i != best.i) return next.i < best.i;
    return next.j < best.j;
}

bool improves_max(const Candidate& next, const Candidate& best) {
    if (!best.valid) return true;
    if (next.d != best.d) return next.d > best.d;
    if (next.i != best.i) return next.i < best.i;
    return next.j < best.j;
}

struct SweepResult {
    Candidate min[3];
    Candidate max[3];

    void absorb(std::uint64_t d, int metric, std::uint32_t i, std::uint32_t j) {
        const Candidate cand{d, i, j, true};
        if (improves_min(cand, min[metric])) min[metric] = cand;
        if (improves_max(cand, max[metric])) max[metric] = cand;
    }

    void merge(const SweepResult& other) {
        for (int m = 0; m < 3; ++m) {
            if (other.min[m].valid && improves_min(other.min[m], min[m])) min[m] = other.min[m];
            if (other.max[m].valid && improves_max(other.max[m], max[m])) max[m] = other.max[m];
        }
    }
};

// All three metrics for one pair in one pass over the entries.
void pair_distances(const std::vector<int>& a, const std::vector<int>& b,
                    std::uint64_t out[3]) {
    const std::size_t n = a.size();
    std::uint64_t ham = 0, max_abs = 0, kendall = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int ai = a[i], bi = b[i];
        if (ai != bi) ++ham;
        const std::uint64_t diff = static_cast<std::uint64_t>(std::abs(ai - bi));
        if (diff > max_abs) max_abs = diff;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (static_cast<std::int64_t>(ai - a[j]) * (bi - b[j]) < 0) ++kendall;
        }
    }
    out[0] = ham;
    out[1] = max_abs;
    out[2] = kendall;
}

SweepResult sweep_range(const std::vector<Permutation>& members, std::uint32_t first,
                        std::uint32_t stride) {
    const std::uint32_t count = static_cast<std::uint32_t>(members.size());
    SweepResult result;
    std::uint64_t d[3];
    for (std::uint32_t i = first; i < count; i += stride) {
        const std::vector<int>& a = members[i].values();
        for (std::uint32_t j = i + 1; j < count; ++j) {
            pair_distances(a, members[j].values(), d);
            for (int m = 0; m < 3; ++m) result.absorb(d[m], m, i, j);
        }
    }
    return result;
}

} // namespace

void check_enumeration_cap(int n, const Caps& caps) {
    if (n < 1) throw NotAPermutation("n must be at least 1");
    if (n > caps.enumeration)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                          std::to_string(caps.enumeration));
}

std::vector<Permutation> all_of_sn(int n, const Caps& caps) {
    check_enumeration_cap(n, caps);
    std::vector<Permutation> all;
    all.reserve(static_cast<std::size_t>(factorial(n)));
    enumerate_sn(n, [&](const Permutation& p) { all.push_back(p); }, caps);
    return all;
}

PeakClass peak_class(const PeakSet& s, int n, const Caps& caps) {
    PeakClass cls{s, n, {}};
    enumerate_sn(n, [&](const Permutation& p) {
        if (peak_set(p) == s) cls.members.push_back(p);
    }, caps);
    return cls;
}

ClassSize class_size(const PeakSet& s, int n, const Caps& caps) {
    std::uint64_t size = 0;
    enumerate_sn(n, [&](const Permutation& p) {
        if (peak_set(p) == s) ++size;
    }, caps);
    if (size == 0) return ClassSize{0, 0};
    const int exponent = n - s.count() - 1;
    const std::uint64_t divisor = std::uint64_t{1} << exponent;
    if (size % divisor != 0)
        throw DivisibilityViolation("|P(" + to_string(s) + ";" + std::to_string(n) + ")| = " +
                                    std::to_string(size) + " is not divisible by 2^" +
                                    std::to_string(exponent));
    return ClassSize{size, size / divisor};
}

bool partition_check(int n, const Caps& caps) {
    std::map<std::vector<int>, std::uint64_t> observed;
    std::uint64_t total = 0;
    enumerate_sn(n, [&](const Permutation& p) {
        ++observed[peak_set(p).indices()];
        ++total;
    }, caps);
    if (total != factorial(n)) return false;
    // Disjointness holds because peak extraction is a total function; the
    // meaningful check is that observed keys are exactly the admissible sets.
    const std::vector<PeakSet> admissible = all_admissible_sets(n);
    if (observed.size() != admissible.size()) return false;
    std::uint64_t covered = 0;
    for (const PeakSet& s : admissible) {
        auto it = observed.find(s.indices());
        if (it == observed.end()) return false;
        covered += it->second;
    }
    return covered == factorial(n);
}

std::array<MetricExtremes, 3> pairwise_extremes(const std::vector<Permutation>& members) {
    const std::uint32_t count = static_cast<std::uint32_t>(members.size());
    if (count < 2) throw ClassTooSmall("pairwise extremes need at least two members");

    const std::uint64_t pairs = binom2(count);
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (pairs < 1u << 21) workers = 1;

    SweepResult combined;
    if (workers == 1) {
        combined = sweep_range(members, 0, 1);
    } else {
        std::vector<SweepResult> partials(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            threads.emplace_back([&, t] { partials[t] = sweep_range(members, t, workers); });
        }
        for (auto& thread : threads) thread.join();
        // Merge order is fixed, and the comparator is a total order on
        // (distance, i, j), so the result is schedule-independent.
        for (const auto& partial : partials) combined.merge(partial);
    }

    auto extremes_of = [&](int m) {
        const Candidate& lo = combined.min[m];
        const Candidate& hi = combined.max[m];
        return MetricExtremes{lo.d,
                              hi.d,
                              {members[lo.i], members[lo.j]},
                              {members[hi.i], members[hi.j]}};
    };
    return {extremes_of(0), extremes_of(1), extremes_of(2)};
}

std::array<DistanceSummary, 3> summarize_class(const PeakSet& s, int n, const Caps& caps) {
    if (n > caps.pairwise)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the pairwise cap " +
                          std::to_string(caps.pairwise));
    const PeakClass cls = peak_class(s, n, caps);
    if (cls.members.size() < 2)
        throw ClassTooSmall("P(" + to_string(s) + ";" + std::to_string(n) + ") has " +
                            std::to_string(cls.members.size()) +
                            " member(s); distances need two");
    const auto extremes = pairwise_extremes(cls.members);
    auto summary_of = [&](MetricKind m) {
        const auto& e = extremes[static_cast<std::size_t>(m)];
        return DistanceSummary{s,     n,     m,     cls.members.size(),
                               e.min, e.max, e.min_witness, e.max_witness};
    };
    return {summary_of(MetricKind::Hamming), summary_of(MetricKind::Linf),
            summary_of(MetricKind::KendallTau)};
}

DistanceSummary distance_summary(const PeakSet& s, int n, MetricKind metric, const Caps& caps) {
    return summarize_class(s, n, caps)[static_cast<std::size_t>(metric)];
}

std::uint64_t factorial(int n) {
    std::uint64_t result = 1;
    for (int i = 2; i <= n; ++i) result *= static_cast<std::uint64_t>(i);
    return result;
}

std::uint64_t binom2(std::uint64_t n) { return n * (n - 1) / 2; }

} // namespace peakmetrics
