#include "peakmetrics/peaks.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace peakmetrics {

PeakSet PeakSet::of(std::vector<int> indices) {
    for (int i : indices) {
        if (i < 1)
            throw ParseError("peak index must be a positive integer, got " + std::to_string(i));
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return PeakSet(std::move(indices));
}

bool PeakSet::contains(int index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

PeakSet peak_set(const Permutation& p) {
    const int n = p.size();
    std::vector<int> peaks;
    for (int i = 2; i <= n - 1; ++i) {
        if (p(i - 1) < p(i) && p(i) > p(i + 1)) peaks.push_back(i);
    }
    return PeakSet::of(std::move(peaks));
}

bool is_admissible(const PeakSet& s, int n) {
    int previous = 0;
    for (int i : s.indices()) {
        if (i < 2 || i > n - 1) return false;
        if (previous != 0 && i == previous + 1) return false;
        previous = i;
    }
    return true;
}

std::vector<PeakSet> all_admissible_sets(int n) {
    // Subsets of {2,...,n-1} with no two consecutive elements.
    std::vector<std::vector<int>> result = {{}};
    std::vector<int> current;
    auto extend = [&](auto&& self, int from) -> void {
        for (int i = from; i <= n - 1; ++i) {
            current.push_back(i);
            result.push_back(current);
            self(self, i + 2);
            current.pop_back();
        }
    };
    extend(extend, 2);
    std::vector<PeakSet> sets;
    sets.reserve(result.size());
    for (auto& indices : result) sets.push_back(PeakSet::of(std::move(indices)));
    std::sort(sets.begin(), sets.end(), [](const PeakSet& a, const PeakSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.indices() < b.indices();
    });
    return sets;
}

std::optional<Permutation> checked_value_swap(const Permutation& p, int i) {
    const int n = p.size();
    if (i < 1 || i > n - 1)
        throw SwapOutOfRange("swap index " + std::to_string(i) + " outside 1.." +
                             std::to_string(n - 1));
    const AdjacentValueSwap swap{i};
    if (i == 1) return apply_value_swap(p, swap);
    int pos_i = 0, pos_i1 = 0;
    for (int pos = 1; pos <= n; ++pos) {
        if (p(pos) == i) pos_i = pos;
        if (p(pos) == i + 1) pos_i1 = pos;
    }
    if (std::abs(pos_i - pos_i1) == 1) return std::nullopt;
    return apply_value_swap(p, swap);
}

PeakSet parse_peak_set(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}')
            throw ParseError("unterminated '{' in peak set \"" + std::string(text) + "\"");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> indices;
    std::string token;
    std::istringstream in{std::string(body)};
    while (std::getline(in, token, ',')) {
        std::size_t start = token.find_first_not_of(" \t");
        if (start == std::string::npos) {
            if (indices.empty() && in.eof()) break; // "{}" or ""
            throw ParseError("empty entry in peak set \"" + std::string(text) + "\"");
        }
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token.substr(start), &used);
        } catch (const std::exception&) {
            throw ParseError("expected an integer in peak set \"" + std::string(text) + "\"");
        }
        if (token.find_first_not_of(" \t", start + used) != std::string::npos)
            throw ParseError("trailing characters in peak set entry \"" + token + "\"");
        indices.push_back(value);
    }
    return PeakSet::of(std::move(indices));
}

std::string to_string(const PeakSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i : s.indices()) {
        if (!first) out << ',';
        out << i;
        first = false;
    }
    out << '}';
    return out.str();
}

} // namespace peakmetrics
