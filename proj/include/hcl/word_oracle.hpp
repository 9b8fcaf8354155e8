#pragma once

// Brute-force arithmetic in the double cover W~ using only its defining
// relations: z central with z^2 = 1, t~_i^2 = 1, and the lifted braid
// relations P_m(i, j) = z^e P_m(j, i) with e = 1 exactly when m_ij is even.
// Kept apart from the Clifford route so the two can be compared.

#include <cstdint>
#include <vector>

#include "hcl/weyl.hpp"

namespace hcl {

/// z-exponent relating two reduced words of the same element: if
/// t~_{word} = z^k t~_{target}, returns k. Searches the braid-move graph.
int braid_class_zbit(const WeylGroup& g, const std::vector<int>& word,
                     const std::vector<int>& target);

/// Reduces t~_{word} to z^k t~_{canonical word}; returns {element, k}.
std::pair<uint32_t, int> reduce_cover_word(const WeylGroup& g, const std::vector<int>& word);

/// (-1)^k where t~_a t~_b = z^k t~_{ab}.
int cocycle_by_rewriting(const WeylGroup& g, uint32_t a, uint32_t b);

}  // namespace hcl
