#pragma once

#include <optional>
#include <vector>

#include "modlat/group.hpp"

namespace modlat {

/// Searches for an isomorphism a -> b by backtracking over images of a
/// minimal-ish generating set of a, pruned by element orders. Exponential in
/// the number of generators; fine at desk scale.
std::optional<std::vector<Elem>> find_isomorphism(const Group& a, const Group& b);

inline bool are_isomorphic(const Group& a, const Group& b) { return find_isomorphism(a, b).has_value(); }

/// True iff `map` is a bijective homomorphism a -> b.
bool is_isomorphism(const Group& a, const Group& b, const std::vector<Elem>& map);

}  // namespace modlat
