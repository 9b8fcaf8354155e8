#pragma once

// Degenerate affine Hecke-Clifford algebras of types A, B, D in the PBW
// basis x^alpha c^eps w, the module IND = C[x] (x) C_n, intertwiners and
// the type D (anti-)involutions.

#include <compare>

#include "hcl/clifford.hpp"
#include "hcl/element.hpp"
#include "hcl/poly.hpp"

namespace hcl {

struct AhcKey {
  Exponents alpha{};
  CliffMask mask = 0;
  uint32_t w = 0;
  auto operator<=>(const AhcKey&) const = default;
};

struct AhcTag {};
using AhcElt = Element<AhcKey, AhcTag>;

struct IndKey {
  Exponents alpha{};
  CliffMask mask = 0;
  auto operator<=>(const IndKey&) const = default;
};
struct IndTag {};
using IndElt = Element<IndKey, IndTag>;

AhcElt ahc_scalar(const WeylGroup& g, const Scalar& c);
AhcElt ahc_x(const WeylGroup& g, int j);
AhcElt ahc_c(const WeylGroup& g, int j);
AhcElt ahc_s(const WeylGroup& g, int i);
AhcElt ahc_group(const WeylGroup& g, uint32_t w);
AhcElt ahc_poly(const WeylGroup& g, const Poly& f);
AhcElt ahc_clifford(const WeylGroup& g, const CliffordElt& a);

/// Throws std::invalid_argument on mismatched type/rank.
AhcElt ahc_mul(const AhcElt& a, const AhcElt& b);
inline AhcElt operator*(const AhcElt& a, const AhcElt& b) { return ahc_mul(a, b); }
AhcElt power(const AhcElt& a, int e);

/// Normal form of s_i f for a polynomial f.
AhcElt straighten_si_poly(const WeylType& t, int i, const Poly& f);

/// The polynomial part of an element with no Clifford or group part;
/// throws std::invalid_argument otherwise.
Poly ahc_to_poly(const AhcElt& a);

IndElt ind_poly(const WeylGroup& g, const Poly& f);
/// Module action on IND, written directly from the action formulas.
IndElt ind_act(const AhcElt& a, const IndElt& m);

AhcElt intertwiner_phi(const WeylType& t, int i);

enum class Involution { Tau1, Tau2, Sigma };
/// Type D only; std::invalid_argument for other types.
AhcElt apply_involution(Involution which, const AhcElt& a);

/// Index of the image of w under the diagram automorphism of D_n swapping
/// s_{n-1} and s_n.
uint32_t diagram_swap(const WeylGroup& g, uint32_t w);

/// True iff f commutes with every x_i, c_i, s_i.
bool center_commutator_check(const WeylType& t, const Poly& f);

/// x_i -> a x_i together with u -> a u, v -> a v on coefficients. This is
/// the dilation between the algebras at (a u, a v) and (u, v), written over
/// formal parameters; it is multiplicative.
AhcElt dilate(const AhcElt& a, const Cyc8& factor);

}  // namespace hcl
