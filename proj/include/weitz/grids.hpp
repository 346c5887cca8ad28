#pragma once

#include <vector>

#include "weitz/weights.hpp"

namespace weitz {

/// All dominant weights for so(n) whose entries have absolute value at most
/// max_entry, in both integrality classes, deterministically ordered
/// (integral class first, then lexicographically descending).
std::vector<DominantWeight> weight_grid(int n, const Rational& max_entry);

}  // namespace weitz
