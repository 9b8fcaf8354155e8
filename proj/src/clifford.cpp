#include "hcl/clifford.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hcl {

int clifford_reorder_sign(CliffMask a, CliffMask b) {
  // Each c_j in b moves left past every c_i (i > j) of a.
  int swaps = 0;
  for (CliffMask rest = b; rest != 0; rest &= rest - 1) {
    const int j = __builtin_ctz(rest);
    swaps += __builtin_popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

CliffordElt CliffordElt::generator(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("Clifford generator index out of range");
  return monomial(n, CliffMask{1} << (i - 1));
}

CliffordElt CliffordElt::monomial(int n, CliffMask m, const Scalar& c) {
  CliffordElt e(n);
  e.terms_.add(m, c);
  return e;
}

bool CliffordElt::is_scalar() const {
  return terms_.is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

CliffordElt& CliffordElt::operator+=(const CliffordElt& o) {
  if (n_ != o.n_) throw std::invalid_argument("Clifford rank mismatch");
  terms_ += o.terms_;
  return *this;
}

CliffordElt& CliffordElt::operator-=(const CliffordElt& o) {
  if (n_ != o.n_) throw std::invalid_argument("Clifford rank mismatch");
  terms_ -= o.terms_;
  return *this;
}

CliffordElt CliffordElt::operator-() const {
  CliffordElt r = *this;
  r.terms_.scale(Scalar(-1));
  return r;
}

CliffordElt operator*(const Scalar& s, CliffordElt a) {
  a.terms_.scale(s);
  return a;
}

CliffordElt cliff_mul(const CliffordElt& a, const CliffordElt& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("cliff_mul: rank mismatch");
  CliffordElt r(a.rank());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const Scalar c = ca * cb;
      if (clifford_reorder_sign(ma, mb) < 0)
        r.terms().sub(ma ^ mb, c);
      else
        r.terms().add(ma ^ mb, c);
    }
  return r;
}

CliffordElt power(const CliffordElt& a, int e) {
  CliffordElt r(a.rank(), Scalar(1));
  for (int k = 0; k < e; ++k) r = r * a;
  return r;
}

std::pair<CliffMask, int> act_on_mask(const WeylElt& w, CliffMask m) {
  CliffMask out = 0;
  int sign = 1;
  for (CliffMask rest = m; rest != 0; rest &= rest - 1) {
    const int j = __builtin_ctz(rest) + 1;
    const int wj = w.image(j);
    if (wj < 0) sign = -sign;
    const CliffMask bit = CliffMask{1} << (std::abs(wj) - 1);
    sign *= clifford_reorder_sign(out, bit);
    out ^= bit;
  }
  return {out, sign};
}

CliffordElt weyl_act_clifford(const WeylElt& w, const CliffordElt& a) {
  if (w.rank() != a.rank()) throw std::invalid_argument("weyl_act_clifford: rank mismatch");
  CliffordElt r(a.rank());
  for (const auto& [m, c] : a.terms()) {
    const auto [image, sign] = act_on_mask(w, m);
    if (sign < 0)
      r.terms().sub(image, c);
    else
      r.terms().add(image, c);
  }
  return r;
}

int clifford_rank(const WeylType& t) {
  switch (t.family) {
    case Family::F: return 4;
    case Family::G: return 3;
    default: return t.n;
  }
}

namespace {

CliffordElt combo(int n, std::initializer_list<std::pair<int, long>> parts) {
  CliffordElt e(n);
  for (const auto& [i, c] : parts) e += CliffordElt::monomial(n, CliffMask{1} << (i - 1), Scalar(c));
  return e;
}

std::vector<ScaledBeta> build_betas(const WeylType& t) {
  const int n = clifford_rank(t);
  std::vector<ScaledBeta> out;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::D:
      for (int i = 1; i < t.n; ++i) out.push_back({combo(n, {{i, 1}, {i + 1, -1}}), 2});
      if (t.family == Family::B) out.push_back({combo(n, {{n, 1}}), 1});
      if (t.family == Family::D) out.push_back({combo(n, {{n - 1, 1}, {n, 1}}), 2});
      break;
    case Family::F:
      out.push_back({combo(n, {{1, 1}, {2, -1}}), 2});
      out.push_back({combo(n, {{2, 1}, {3, -1}}), 2});
      out.push_back({combo(n, {{3, 1}}), 1});
      out.push_back({combo(n, {{4, 1}, {1, -1}, {2, -1}, {3, -1}}), 4});
      break;
    case Family::G:
      out.push_back({combo(n, {{1, 1}, {2, -1}}), 2});
      out.push_back({combo(n, {{1, -2}, {2, 1}, {3, 1}}), 6});
      break;
  }
  for (auto& b : out) {
    if (!(b.numerator * b.numerator == CliffordElt(n, Scalar(b.norm_sq))))
      throw std::logic_error("beta table: numerator square is not the stated norm");
  }
  return out;
}

}  // namespace

const std::vector<ScaledBeta>& beta_table(const WeylType& t) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<ScaledBeta>> cache;
  validate(t);
  const std::lock_guard lock(mutex);
  auto key = std::pair{static_cast<int>(t.family), t.n};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_betas(t)).first;
  return it->second;
}

CliffordElt beta(const WeylType& t, int i) {
  const auto& table = beta_table(t);
  if (i < 1 || i > static_cast<int>(table.size()))
    throw std::out_of_range("beta: index out of range for " + to_string(t));
  const ScaledBeta& b = table[i - 1];
  const auto root = sqrt_rational(b.norm_sq);
  if (!root) throw std::domain_error("beta: normalization not in Q(zeta_8) for " + to_string(t));
  return Scalar(root->inverse()) * b.numerator;
}

CliffordElt beta_braid_power(const WeylType& t, int i, int j) {
  const auto& table = beta_table(t);
  const int r = static_cast<int>(table.size());
  if (i < 1 || j < 1 || i > r || j > r) throw std::out_of_range("beta_braid_power: index");
  const int m = coxeter_order(t, i, j);
  const ScaledBeta& bi = table[i - 1];
  const ScaledBeta& bj = table[j - 1];
  const CliffordElt product = power(bi.numerator * bj.numerator, m);
  Rational scale = 1;
  for (int k = 0; k < m; ++k) scale *= bi.norm_sq * bj.norm_sq;
  const auto root = sqrt_rational(scale);
  if (!root) throw std::domain_error("beta_braid_power: normalization outside Q(zeta_8)");
  return Scalar(root->inverse()) * product;
}

}  // namespace hcl
