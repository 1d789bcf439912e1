#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "peakmetrics/enumerate.hpp"

namespace peakmetrics {

inline constexpr std::uint64_t kDefaultVerifySeed = 1729;

// One brute-force check of a closed-form claim over an n range. A failing
// report carries a counterexample with enough raw data (n, peak set,
// witnesses, expected/actual values) to replay the failure through the
// public operations.
struct VerificationReport {
    std::string theorem_id;
    int n_lo = 2;
    int n_hi = 2;
    bool pass = true;
    nlohmann::json counterexample; // null when pass
    std::int64_t elapsed_ms = 0;
    std::optional<std::uint64_t> seed;
};

nlohmann::json to_json(const VerificationReport& report);

inline const std::vector<std::string>& all_theorem_ids() {
    static const std::vector<std::string> ids = {
        "metric_axioms",  "sn_extremes", "kt_equivalence",
        "min_over_classes", "max_kendall", "max_linf",
        "max_hamming",    "partition",   "cardinality_divisibility"};
    return ids;
}

// Identity of indiscernibles, symmetry, and the triangle inequality for all
// three metrics: exhaustive triples for n <= min(4, n_max), and randomized
// triples (>= 100k, seeded) at n_max when n_max > 4.
VerificationReport verify_metric_axioms(int n_max, std::uint64_t seed = kDefaultVerifySeed,
                                        const Caps& caps = {});

// Brute-force min/max of each metric over S_n equals (2,n), (1,n-1),
// (1,C(n,2)) for 2 <= n <= n_max.
VerificationReport verify_sn_extremes(int n_max, const Caps& caps = {});

// kendall_tau == kendall_tau_fast == minimal swap path length, with path
// replay, over all ordered pairs for n <= min(6, n_max); for larger n,
// seeded random pairs (100k per n).
VerificationReport verify_kt_equivalence(int n_max, std::uint64_t seed = kDefaultVerifySeed,
                                         const Caps& caps = {});

// Four reports (min_over_classes, max_kendall, max_linf, max_hamming):
// brute-force class extremes equal the closed forms for every admissible
// peak set with at least two members, 2 <= n <= n_max, and the explicit
// constructions attain them from inside the class.
std::vector<VerificationReport> verify_class_theorems(int n_max, const Caps& caps = {});

// Two reports (partition, cardinality_divisibility): peak classes partition
// S_n and every class size is divisible by 2^(n-|S|-1), 2 <= n <= n_max.
std::vector<VerificationReport> verify_structural(int n_max, const Caps& caps = {});

// Dispatcher: ids from all_theorem_ids(), or "all". Reports come back in
// the fixed theorem order regardless of request order.
std::vector<VerificationReport> run_verification(const std::vector<std::string>& theorem_ids,
                                                 int n_max,
                                                 std::uint64_t seed = kDefaultVerifySeed,
                                                 const Caps& caps = {});

} // namespace peakmetrics
