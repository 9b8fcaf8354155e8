#pragma once

// The spin Weyl group algebra CW^-, its sign cocycle, the homomorphism
// Omega: CW^- -> C_n, and the finite isomorphism between C_n x| CW and
// C_n (x) CW^-.

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "hcl/clifford.hpp"
#include "hcl/element.hpp"

namespace hcl {

struct SpinWeylTag {};
struct SemidirectTag {};
struct TensorFinTag {};

/// Basis t_w, with t_w the product of the t_i along canonical_word(w).
using SpinWeylElt = Element<uint32_t, SpinWeylTag>;
/// Basis c^e w of C_n x| CW.
using SemidirectElt = Element<std::pair<CliffMask, uint32_t>, SemidirectTag>;
/// Basis c^e (x) t_w of the super tensor product C_n (x) CW^-.
using TensorElt = Element<std::pair<CliffMask, uint32_t>, TensorFinTag>;

/// Per-type data: Omega(t_w) for every w and the cocycle table.
class SpinWeyl {
 public:
  static const SpinWeyl& get(const WeylType& t);
  static const SpinWeyl& get(const WeylGroup& g) { return get(g.type()); }

  explicit SpinWeyl(const WeylGroup& g);

  const WeylGroup& group() const { return *group_; }
  /// Omega(t_w) = beta_i1 ... beta_ik along the canonical word.
  const CliffordElt& omega_basis(uint32_t w) const { return omega_[w]; }
  /// mu(s_i, w): t_i t_w = mu * t_{s_i w}.
  int gen_cocycle(int i, uint32_t w) const {
    return gen_cocycle_[(i - 1) * group_->size() + w];
  }
  /// mu(a, b): t_a t_b = mu * t_{ab}. Table built on first use.
  int cocycle(uint32_t a, uint32_t b) const;
  /// The same sign, recomputed from scratch as the ratio
  /// Omega(t_a) Omega(t_b) / Omega(t_ab).
  int cocycle_via_clifford(uint32_t a, uint32_t b) const;

 private:
  void build_table() const;

  const WeylGroup* group_;
  std::vector<CliffordElt> omega_;
  std::vector<int8_t> gen_cocycle_;
  mutable std::once_flag table_once_;
  mutable std::vector<int8_t> table_;
};

/// sigma with p = sigma * q, sigma in {+1, -1}; throws std::logic_error
/// when no such sign exists.
int clifford_sign_ratio(const CliffordElt& p, const CliffordElt& q);

int cocycle(const WeylElt& a, const WeylElt& b);

SpinWeylElt spin_basis(const WeylGroup& g, uint32_t w, const Scalar& c = Scalar(1));
SpinWeylElt spin_generator(const WeylGroup& g, int i);
SpinWeylElt spin_mul(const SpinWeylElt& a, const SpinWeylElt& b);
inline SpinWeylElt operator*(const SpinWeylElt& a, const SpinWeylElt& b) { return spin_mul(a, b); }
CliffordElt omega(const SpinWeylElt& a);

SemidirectElt semidirect_mul(const SemidirectElt& a, const SemidirectElt& b);
inline SemidirectElt operator*(const SemidirectElt& a, const SemidirectElt& b) {
  return semidirect_mul(a, b);
}
TensorElt tensor_fin_mul(const TensorElt& a, const TensorElt& b);
inline TensorElt operator*(const TensorElt& a, const TensorElt& b) { return tensor_fin_mul(a, b); }

SemidirectElt semidirect_clifford(const WeylGroup& g, const CliffordElt& a);
SemidirectElt semidirect_group(const WeylGroup& g, uint32_t w);
TensorElt tensor_clifford(const WeylGroup& g, const CliffordElt& a);
TensorElt tensor_spin(const WeylGroup& g, const SpinWeylElt& b);

/// s_i -> -sqrt(-1) beta_i t_i, identity on C_n.
TensorElt phi_fin(const SemidirectElt& a);
/// t_i -> sqrt(-1) beta_i s_i, identity on C_n.
SemidirectElt psi_fin(const TensorElt& b);

}  // namespace hcl
