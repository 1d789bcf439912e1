#include "peakmetrics/permutation.hpp"

#include <charconv>
#include <sstream>

namespace peakmetrics {

Permutation Permutation::from_one_line(std::vector<int> values) {
    const auto n = values.size();
    if (n == 0) throw NotAPermutation("a permutation needs at least one entry");
    if (n > static_cast<std::size_t>(kMaxPermutationSize))
        throw NotAPermutation("permutation size exceeds the supported bound");
    std::vector<char> seen(n, 0);
    for (int v : values) {
        if (v < 1 || v > static_cast<int>(n))
            throw NotAPermutation("entry " + std::to_string(v) + " is outside 1.." +
                                  std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)])
            throw NotAPermutation("entry " + std::to_string(v) + " appears more than once");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw NotAPermutation("a permutation needs at least one entry");
    if (n > kMaxPermutationSize)
        throw NotAPermutation("permutation size exceeds the supported bound");
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(values));
}

Permutation Permutation::reverse_identity(int n) {
    if (n < 1) throw NotAPermutation("a permutation needs at least one entry");
    if (n > kMaxPermutationSize)
        throw NotAPermutation("permutation size exceeds the supported bound");
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(values));
}

AdjacentValueSwap::AdjacentValueSwap(int value_index) : value(value_index) {
    if (value_index < 1)
        throw SwapOutOfRange("swap index must be at least 1, got " +
                             std::to_string(value_index));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size())
        throw SizeMismatch("cannot compose permutations of sizes " +
                           std::to_string(outer.size()) + " and " +
                           std::to_string(inner.size()));
    const int n = outer.size();
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) values[static_cast<std::size_t>(k - 1)] = outer(inner(k));
    return Permutation::from_one_line(std::move(values));
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int pos = 1; pos <= n; ++pos) values[static_cast<std::size_t>(p(pos) - 1)] = pos;
    return Permutation::from_one_line(std::move(values));
}

Permutation apply_value_swap(const Permutation& p, AdjacentValueSwap s) {
    const int n = p.size();
    if (s.value > n - 1)
        throw SwapOutOfRange("swap of values " + std::to_string(s.value) + "," +
                             std::to_string(s.value + 1) + " needs n > " +
                             std::to_string(s.value));
    std::vector<int> values = p.values();
    int pos_lo = -1, pos_hi = -1;
    for (int i = 0; i < n; ++i) {
        if (values[static_cast<std::size_t>(i)] == s.value) pos_lo = i;
        if (values[static_cast<std::size_t>(i)] == s.value + 1) pos_hi = i;
    }
    std::swap(values[static_cast<std::size_t>(pos_lo)], values[static_cast<std::size_t>(pos_hi)]);
    return Permutation::from_one_line(std::move(values));
}

Permutation parse_one_line(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    const auto n = text.size();
    while (i < n) {
        if (text[i] == ' ' || text[i] == ',' || text[i] == '\t') {
            ++i;
            continue;
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + n, v);
        if (ec != std::errc())
            throw ParseError("expected an integer at position " + std::to_string(i + 1) +
                             " of \"" + std::string(text) + "\"");
        values.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    if (values.empty()) throw ParseError("empty permutation input");
    return Permutation::from_one_line(std::move(values));
}

std::string to_one_line(const Permutation& p) {
    std::ostringstream out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out << ' ';
        out << p(i);
    }
    return out.str();
}

} // namespace peakmetrics
