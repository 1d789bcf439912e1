#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "peakmetrics/enumerate.hpp"
#include "peakmetrics/metrics.hpp"

using namespace peakmetrics;

namespace {

Permutation P(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }

Permutation random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t i = v.size() - 1; i > 0; --i)
        std::swap(v[i], v[static_cast<std::size_t>(rng() % (i + 1))]);
    return P(std::move(v));
}

Permutation replay(const SwapPath& path) {
    Permutation current = path.source;
    for (const AdjacentValueSwap& step : path.steps)
        current = apply_value_swap(current, step);
    return current;
}

// Dense distance tables over all of S_n, one per metric.
struct Tables {
    std::vector<Permutation> all;
    std::size_t count;
    std::vector<std::vector<std::uint64_t>> d; // [metric][i*count+j]

    explicit Tables(int n) : all(all_of_sn(n)), count(all.size()), d(3) {
        for (auto& table : d) table.assign(count * count, 0);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j)
                for (MetricKind m : kAllMetrics)
                    d[static_cast<std::size_t>(m)][i * count + j] = distance(m, all[i], all[j]);
    }
};

} // namespace

TEST_CASE("worked example: 14325 vs 25314") {
    const Permutation a = P({1, 4, 3, 2, 5});
    const Permutation b = P({2, 5, 3, 1, 4});
    CHECK(hamming(a, b) == 4);
    CHECK(linf(a, b) == 1);
    CHECK(kendall_tau(a, b) == 2);
    CHECK(kendall_tau_fast(a, b) == 2);

    const SwapPath path = minimal_swap_path(a, b);
    REQUIRE(path.steps.size() == 2);
    CHECK(path.steps[0].value == 1);
    CHECK(path.steps[1].value == 4);
    CHECK(replay(path) == b);
    CHECK(to_string(path) == "1,4");
}

TEST_CASE("identities of indiscernibles") {
    const Permutation p = P({3, 1, 4, 2});
    for (MetricKind m : kAllMetrics) CHECK(distance(m, p, p) == 0);
    CHECK(minimal_swap_path(p, p).steps.empty());
}

TEST_CASE("distances on the identity/reversal pair") {
    for (int n = 2; n <= 9; ++n) {
        const Permutation e = Permutation::identity(n);
        const Permutation r = Permutation::reverse_identity(n);
        CHECK(linf(e, r) == static_cast<std::uint64_t>(n - 1));
        CHECK(kendall_tau(e, r) == binom2(static_cast<std::uint64_t>(n)));
        // Odd n fixes the middle entry, so Hamming drops to n-1 there; the
        // distance-n witness is the cyclic shift, checked below.
        const std::uint64_t expected = static_cast<std::uint64_t>(n % 2 == 0 ? n : n - 1);
        CHECK(hamming(e, r) == expected);
    }
}

TEST_CASE("cyclic shift attains Hamming distance n from the identity") {
    for (int n = 2; n <= 9; ++n) {
        std::vector<int> shifted(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
        CHECK(hamming(Permutation::identity(n), P(std::move(shifted))) ==
              static_cast<std::uint64_t>(n));
    }
}

TEST_CASE("single adjacent swap from the identity") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        std::swap(v[0], v[1]);
        const Permutation one_swap = P(std::move(v)); // 2 1 3 ... n
        CHECK(kendall_tau(one_swap, Permutation::identity(n)) == 1);
        CHECK(hamming(one_swap, Permutation::identity(n)) == 2);
        CHECK(linf(one_swap, Permutation::identity(n)) == 1);
    }
}

TEST_CASE("size mismatches are rejected") {
    const Permutation a = P({1, 2});
    const Permutation b = P({1, 2, 3});
    CHECK_THROWS_AS(hamming(a, b), SizeMismatch);
    CHECK_THROWS_AS(linf(a, b), SizeMismatch);
    CHECK_THROWS_AS(kendall_tau(a, b), SizeMismatch);
    CHECK_THROWS_AS(kendall_tau_fast(a, b), SizeMismatch);
    CHECK_THROWS_AS(minimal_swap_path(a, b), SizeMismatch);
}

TEST_CASE("metric axioms, exhaustive for n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const Tables t(n);
        for (MetricKind m : kAllMetrics) {
            const auto& d = t.d[static_cast<std::size_t>(m)];
            std::size_t violations = 0;
            for (std::size_t i = 0; i < t.count; ++i) {
                for (std::size_t j = 0; j < t.count; ++j) {
                    if ((d[i * t.count + j] == 0) != (i == j)) ++violations;
                    if (d[i * t.count + j] != d[j * t.count + i]) ++violations;
                    for (std::size_t k = 0; k < t.count; ++k)
                        if (d[i * t.count + k] > d[i * t.count + j] + d[j * t.count + k])
                            ++violations;
                }
            }
            CHECK(violations == 0);
        }
    }
}

TEST_CASE("metric axioms on random triples at n = 9") {
    std::mt19937_64 rng(20250810);
    for (int trial = 0; trial < 20000; ++trial) {
        const Permutation a = random_perm(9, rng);
        const Permutation b = random_perm(9, rng);
        const Permutation c = random_perm(9, rng);
        for (MetricKind m : kAllMetrics) {
            const std::uint64_t ab = distance(m, a, b);
            CHECK((ab == 0) == (a == b));
            CHECK(ab == distance(m, b, a));
            CHECK(distance(m, a, c) <= ab + distance(m, b, c));
        }
    }
}

TEST_CASE("Hamming distance is never 1 between distinct permutations") {
    for (int n = 2; n <= 5; ++n) {
        const auto all = all_of_sn(n);
        std::size_t violations = 0;
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (hamming(all[i], all[j]) == 1) ++violations;
        CHECK(violations == 0);
    }
}

TEST_CASE("Kendall-Tau is right invariant, exhaustive for n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const auto all = all_of_sn(n);
        const std::size_t count = all.size();
        std::map<std::vector<int>, std::uint16_t> index;
        for (std::size_t i = 0; i < count; ++i)
            index[all[i].values()] = static_cast<std::uint16_t>(i);

        std::vector<std::uint16_t> comp(count * count);
        std::vector<std::uint64_t> kt(count * count);
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j) {
                comp[i * count + j] = index.at(compose(all[i], all[j]).values());
                kt[i * count + j] = kendall_tau_fast(all[i], all[j]);
            }
        }

        std::size_t violations = 0;
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = 0; b < count; ++b)
                for (std::size_t alpha = 0; alpha < count; ++alpha)
                    if (kt[a * count + b] !=
                        kt[comp[a * count + alpha] * count + comp[b * count + alpha]])
                        ++violations;
        CHECK(violations == 0);
    }
}

TEST_CASE("deranged pairs, inversion counting, and swap paths agree, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = all_of_sn(n);
        std::size_t violations = 0;
        for (const Permutation& a : all) {
            for (const Permutation& b : all) {
                const std::uint64_t slow = kendall_tau(a, b);
                if (slow != kendall_tau_fast(a, b)) ++violations;
                const SwapPath path = minimal_swap_path(a, b);
                if (path.steps.size() != slow || replay(path) != b) ++violations;
            }
        }
        CHECK(violations == 0);
    }
}

TEST_CASE("fast Kendall-Tau matches the quadratic oracle on random large pairs") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 60);
        const Permutation a = random_perm(n, rng);
        const Permutation b = random_perm(n, rng);
        CHECK(kendall_tau_fast(a, b) == kendall_tau(a, b));
        const SwapPath path = minimal_swap_path(a, b);
        CHECK(path.steps.size() == kendall_tau(a, b));
        CHECK(replay(path) == b);
    }
}

TEST_CASE("metric names round trip") {
    for (MetricKind m : kAllMetrics) CHECK(parse_metric(metric_name(m)) == m);
    CHECK_THROWS_AS(parse_metric("euclid"), ParseError);
}
