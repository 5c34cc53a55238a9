#pragma once

#include <optional>
#include <vector>

#include "noncent/group.hpp"

namespace noncent {

inline constexpr std::size_t kMaxIsomorphismOrder = 512;

/// Finds a table isomorphism a -> b (image of each element of a), or none.
/// Cheap invariants are compared first; the search then maps a generating set
/// of `a` onto fingerprint-compatible elements of `b` with backtracking.
/// Throws Errc::TooLarge above kMaxIsomorphismOrder.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// True when `map` is a bijective homomorphism a -> b.
bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Element>& map);

}  // namespace noncent
