#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "toricfan/errors.hpp"

namespace toricfan {

/// Subset of a ground set with at most 63 elements; bit i = element i+1.
using Mask = std::uint64_t;

constexpr int kMaxGroundSize = 63;

struct GroundSet {
    int size = 0;
};

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int size) {
    return size >= 64 ? ~Mask{0} : (Mask{1} << size) - 1;
}

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// 0-based index of the least element, undefined for the empty mask.
inline int lowest_element(Mask m) { return std::countr_zero(m); }

/// Elements of m as ascending 0-based indices.
inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(popcount(m)));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Canonical order on subsets: by cardinality, then by mask value.
inline bool canonical_less(Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

/// "{2,3}" with 1-based elements.
inline std::string set_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) s += ",";
        s += std::to_string(e + 1);
        first = false;
    }
    return s + "}";
}

/// Short label "2|3" with 1-based elements, used for fan ray labels.
inline std::string set_label(Mask m) {
    std::string s;
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) s += "|";
        s += std::to_string(e + 1);
        first = false;
    }
    return s;
}

}  // namespace toricfan
