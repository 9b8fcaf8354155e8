#pragma once

// Degenerate covering affine Hecke algebras in the basis
// z^k X^alpha T_w, and their two quotients: Lusztig's degenerate affine
// Hecke algebra at z = 1 and the spin algebra at z = -1.

#include "hcl/spin_affine.hpp"

namespace hcl {

struct CoverKey {
  Exponents alpha{};
  uint32_t w = 0;
  uint8_t zbit = 0;
  auto operator<=>(const CoverKey&) const = default;
};
struct CoverTag {};
using CoverElt = Element<CoverKey, CoverTag>;

/// Basis x^alpha w, commuting x's.
struct LusztigKey {
  Exponents alpha{};
  uint32_t w = 0;
  auto operator<=>(const LusztigKey&) const = default;
};
struct LusztigTag {};
using LusztigElt = Element<LusztigKey, LusztigTag>;

CoverElt cover_scalar(const WeylGroup& g, const Scalar& c);
CoverElt cover_z(const WeylGroup& g);
CoverElt cover_x(const WeylGroup& g, int j);
CoverElt cover_t(const WeylGroup& g, int i);
/// T_w along canonical_word(w).
CoverElt cover_group(const WeylGroup& g, uint32_t w);

/// Throws std::invalid_argument on mismatched type/rank.
CoverElt cover_mul(const CoverElt& a, const CoverElt& b);
inline CoverElt operator*(const CoverElt& a, const CoverElt& b) { return cover_mul(a, b); }
CoverElt power(const CoverElt& a, int e);

/// z -> 1.
LusztigElt upsilon_plus(const CoverElt& a);
/// z -> -1, X_j -> b_j, T_i -> t_i.
SahElt upsilon_minus(const CoverElt& a);
/// The zbit = 0 preimages, term by term.
CoverElt lift(const LusztigElt& a);
CoverElt lift(const SahElt& a);

LusztigElt lusztig_scalar(const WeylGroup& g, const Scalar& c);
LusztigElt lusztig_x(const WeylGroup& g, int j);
LusztigElt lusztig_s(const WeylGroup& g, int i);
LusztigElt lusztig_group(const WeylGroup& g, uint32_t w);
/// Lift to the cover, multiply there, project with upsilon_plus.
LusztigElt lusztig_mul(const LusztigElt& a, const LusztigElt& b);
inline LusztigElt operator*(const LusztigElt& a, const LusztigElt& b) { return lusztig_mul(a, b); }

}  // namespace hcl
