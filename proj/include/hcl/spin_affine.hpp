#pragma once

// Degenerate spin affine Hecke algebras on the skew polynomials
// C[b_1..b_n] and CW^-, in the basis b^alpha t_w, together with the
// isomorphism to the algebra of affine_hc.hpp tensored with C_n.

#include "hcl/affine_hc.hpp"
#include "hcl/spin_weyl.hpp"

namespace hcl {

/// b^alpha = b_1^alpha_1 ... b_n^alpha_n with b_i b_j = -b_j b_i (i != j).
using SkewPoly = LinComb<Exponents>;

/// Sign of b^a b^c = sign * b^(a+c).
int skew_reorder_sign(const Exponents& a, const Exponents& c);
SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b);

struct SahKey {
  Exponents alpha{};
  uint32_t w = 0;
  auto operator<=>(const SahKey&) const = default;
};
struct SahTag {};
using SahElt = Element<SahKey, SahTag>;

/// Z/2 degree of b^alpha t_w.
int sah_parity(const WeylGroup& g, const SahKey& k);

SahElt sah_scalar(const WeylGroup& g, const Scalar& c);
SahElt sah_b(const WeylGroup& g, int j);
SahElt sah_t(const WeylGroup& g, int i);
SahElt sah_group(const WeylGroup& g, uint32_t w);
SahElt sah_skew(const WeylGroup& g, const SkewPoly& f);
SahElt sah_spin(const SpinWeylElt& a);

/// Throws std::invalid_argument on mismatched type/rank.
SahElt sah_mul(const SahElt& a, const SahElt& b);
inline SahElt operator*(const SahElt& a, const SahElt& b) { return sah_mul(a, b); }
SahElt power(const SahElt& a, int e);

/// Normal form of t_i * b^beta.
SahElt straighten_ti_skew(const WeylType& t, int i, const Exponents& beta);

SahElt intertwiner_I(const WeylType& t, int i);

/// Type D only; std::invalid_argument otherwise.
SahElt apply_spin_involution(Involution which, const SahElt& a);

/// f(b_1^2, ..., b_n^2) for a polynomial f in x_1..x_n.
SahElt sah_even_poly(const WeylGroup& g, const Poly& f);
/// True iff f(b_1^2, ..., b_n^2) commutes with every b_i and t_i.
bool spin_center_check(const WeylType& t, const Poly& f);

// C_n (x) spin affine, with (c^e (x) h)(c^d (x) h') = (-1)^{|h||d|} c^e c^d (x) h h'.
struct TensorSpinKey {
  CliffMask mask = 0;
  Exponents alpha{};
  uint32_t w = 0;
  auto operator<=>(const TensorSpinKey&) const = default;
};
struct TensorSpinTag {};
using TensorSpinElt = Element<TensorSpinKey, TensorSpinTag>;

TensorSpinElt tensor_spin_mul(const TensorSpinElt& a, const TensorSpinElt& b);
inline TensorSpinElt operator*(const TensorSpinElt& a, const TensorSpinElt& b) {
  return tensor_spin_mul(a, b);
}
TensorSpinElt ts_clifford(const WeylGroup& g, const CliffordElt& a);
TensorSpinElt ts_spin_affine(const SahElt& h);
TensorSpinElt ts_from_finite(const TensorElt& a);

/// x_i -> sqrt(-2) c_i (x) b_i, extending phi_fin.
TensorSpinElt phi_affine(const AhcElt& a);
/// b_i -> c_i x_i / sqrt(-2), extending psi_fin.
AhcElt psi_affine(const TensorSpinElt& b);

}  // namespace hcl
