#pragma once

#include <stdexcept>

namespace peakmetrics {

// Input that is not a bijection on {1,...,n} (duplicates, out-of-range
// entries, empty input, or n above the supported bound).
struct NotAPermutation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Unparseable text input (one-line notation or peak-set syntax).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Binary operation applied to permutations of different sizes.
struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Adjacent value swap (i,i+1) with i outside 1..n-1.
struct SwapOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Enumeration or pairwise work requested beyond the configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pairwise query on a class with fewer than two members.
struct ClassTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Construction requested for a peak set with an empty class.
struct InadmissibleSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A class size not divisible by 2^(n-|S|-1); internal consistency failure.
struct DivisibilityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace peakmetrics
