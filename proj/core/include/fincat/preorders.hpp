#pragma once

#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// Every labelled preorder on the three elements p, q, r as a validated
/// thin category: the 64 reflexive relations on the six off-diagonal pairs,
/// filtered for transitivity, in ascending bitmask order. Exactly 29
/// survive.
std::vector<FinCat> all_preorders_on_3();

}  // namespace fincat
