#pragma once

// Include after doctest.h; test binaries define the doctest main first.

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/errors.hpp"

namespace recolor {

inline doctest::String toString(errc c) { return errc_name(c); }

}  // namespace recolor

namespace testutil {

// Runs fn and reports the library error code it threw, if any. Other
// exception types propagate so the test fails loudly.
template <class Fn>
std::optional<recolor::errc> thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const recolor::error& e) {
        return e.code();
    }
    return std::nullopt;
}

// Assignment vectors in lexicographic order, for comparisons against
// oracles that sort differently than the library's canonical-code order.
inline std::vector<std::vector<int>> sorted_assignments(const std::vector<recolor::ProperColoring>& cs) {
    std::vector<std::vector<int>> out;
    for (const auto& c : cs) out.push_back(c.assign);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testutil
