#pragma once

// Clifford algebras C_N on c_1..c_N with c_i^2 = 1 and c_i c_j = -c_j c_i,
// and the generators beta_i of the subalgebra C_W.

#include <cstdint>
#include <vector>

#include "hcl/linear.hpp"
#include "hcl/weyl.hpp"

namespace hcl {

/// Bit k-1 of a mask stands for c_k; a mask denotes the ordered monomial
/// c_1^e1 ... c_N^eN.
using CliffMask = uint32_t;

/// Sign of c^a c^b = sign * c^(a xor b).
int clifford_reorder_sign(CliffMask a, CliffMask b);
inline int mask_parity(CliffMask m) { return __builtin_popcount(m) & 1; }

class CliffordElt {
 public:
  CliffordElt() = default;
  explicit CliffordElt(int n) : n_(n) {}
  CliffordElt(int n, const Scalar& s) : n_(n) { terms_.add(0, s); }
  static CliffordElt generator(int n, int i);
  static CliffordElt monomial(int n, CliffMask m, const Scalar& c = Scalar(1));

  int rank() const { return n_; }
  const LinComb<CliffMask>& terms() const { return terms_; }
  LinComb<CliffMask>& terms() { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  /// Nonzero only in degree 0.
  bool is_scalar() const;

  CliffordElt& operator+=(const CliffordElt& o);
  CliffordElt& operator-=(const CliffordElt& o);
  CliffordElt operator-() const;
  friend CliffordElt operator+(CliffordElt a, const CliffordElt& b) { return a += b; }
  friend CliffordElt operator-(CliffordElt a, const CliffordElt& b) { return a -= b; }
  friend CliffordElt operator*(const Scalar& s, CliffordElt a);
  friend bool operator==(const CliffordElt& a, const CliffordElt& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  LinComb<CliffMask> terms_;
};

/// Throws std::invalid_argument on mismatched N.
CliffordElt cliff_mul(const CliffordElt& a, const CliffordElt& b);
inline CliffordElt operator*(const CliffordElt& a, const CliffordElt& b) {
  return cliff_mul(a, b);
}
CliffordElt power(const CliffordElt& a, int e);

/// Image of a single monomial c^m under c_j -> sign(w(j)) c_|w(j)|.
std::pair<CliffMask, int> act_on_mask(const WeylElt& w, CliffMask m);
CliffordElt weyl_act_clifford(const WeylElt& w, const CliffordElt& a);

/// Ambient Clifford rank N for the root table of t.
int clifford_rank(const WeylType& t);

/// beta_i = numerator / sqrt(norm_sq); numerator has rational coefficients.
struct ScaledBeta {
  CliffordElt numerator;
  Rational norm_sq;
};

/// Initialized once per type.
const std::vector<ScaledBeta>& beta_table(const WeylType& t);

/// beta_i as an exact element. Throws std::out_of_range for a bad index and
/// std::domain_error when 1/sqrt(norm_sq) is not in Q(zeta_8) (G2's beta_2).
CliffordElt beta(const WeylType& t, int i);

/// (beta_i beta_j)^m_ij, evaluated exactly even when the betas themselves
/// are not in Q(zeta_8).
CliffordElt beta_braid_power(const WeylType& t, int i, int j);

}  // namespace hcl
