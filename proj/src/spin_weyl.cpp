#include "hcl/spin_weyl.hpp"

#include <map>
#include <stdexcept>

namespace hcl {

int clifford_sign_ratio(const CliffordElt& p, const CliffordElt& q) {
  if (q.is_zero()) throw std::logic_error("cocycle: Omega image vanished");
  if (p == q) return 1;
  if (p == -q) return -1;
  throw std::logic_error("cocycle: Omega images are not proportional by a sign");
}

SpinWeyl::SpinWeyl(const WeylGroup& g) : group_(&g) {
  const WeylType& t = g.type();
  const int n = g.rank();
  const int r = g.generators();
  std::vector<CliffordElt> betas;
  for (int i = 1; i <= r; ++i) betas.push_back(beta(t, i));

  omega_.resize(g.size());
  omega_[0] = CliffordElt(n, Scalar(1));
  for (uint32_t w = 1; w < g.size(); ++w) {
    const int first = g.word(w).front();
    omega_[w] = betas[first - 1] * omega_[g.gen_left(first, w)];
  }

  gen_cocycle_.resize(static_cast<size_t>(r) * g.size());
  for (int i = 1; i <= r; ++i)
    for (uint32_t w = 0; w < g.size(); ++w)
      gen_cocycle_[(i - 1) * g.size() + w] = static_cast<int8_t>(
          clifford_sign_ratio(betas[i - 1] * omega_[w], omega_[g.gen_left(i, w)]));
}

const SpinWeyl& SpinWeyl::get(const WeylType& t) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<SpinWeyl>> registry;
  const WeylGroup& g = WeylGroup::get(t);
  const std::lock_guard lock(mutex);
  auto& slot = registry[{static_cast<int>(t.family), t.n}];
  if (!slot) slot = std::make_unique<SpinWeyl>(g);
  return *slot;
}

void SpinWeyl::build_table() const {
  const WeylGroup& g = *group_;
  const size_t order = g.size();
  table_.assign(order * order, 0);
  for (uint32_t b = 0; b < order; ++b) table_[b] = 1;
  // t_w = t_i t_{w'} with w' = s_i w exactly, since a canonical word's tail
  // is canonical; so mu(w, b) = mu(w', b) * mu(s_i, w' b).
  for (uint32_t w = 1; w < order; ++w) {
    const int i = g.word(w).front();
    const uint32_t tail = g.gen_left(i, w);
    for (uint32_t b = 0; b < order; ++b)
      table_[w * order + b] = static_cast<int8_t>(table_[tail * order + b] *
                                                  gen_cocycle(i, g.mul(tail, b)));
  }
}

int SpinWeyl::cocycle(uint32_t a, uint32_t b) const {
  std::call_once(table_once_, [this] { build_table(); });
  return table_[a * group_->size() + b];
}

int SpinWeyl::cocycle_via_clifford(uint32_t a, uint32_t b) const {
  return clifford_sign_ratio(omega_[a] * omega_[b], omega_[group_->mul(a, b)]);
}

int cocycle(const WeylElt& a, const WeylElt& b) {
  if (!(a.type() == b.type())) throw std::invalid_argument("cocycle: mismatched types");
  const SpinWeyl& sw = SpinWeyl::get(a.type());
  return sw.cocycle(sw.group().index(a), sw.group().index(b));
}

// ---------------------------------------------------------------------------

SpinWeylElt spin_basis(const WeylGroup& g, uint32_t w, const Scalar& c) {
  return SpinWeylElt(g, w, c);
}

SpinWeylElt spin_generator(const WeylGroup& g, int i) {
  return spin_basis(g, g.generator(i));
}

SpinWeylElt spin_mul(const SpinWeylElt& a, const SpinWeylElt& b) {
  const WeylGroup& g = common_group(a, b);
  const SpinWeyl& sw = SpinWeyl::get(g);
  SpinWeylElt r(g);
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      const Scalar c = ca * cb;
      if (sw.cocycle(wa, wb) < 0)
        r.terms().sub(g.mul(wa, wb), c);
      else
        r.terms().add(g.mul(wa, wb), c);
    }
  return r;
}

CliffordElt omega(const SpinWeylElt& a) {
  const WeylGroup& g = a.group();
  const SpinWeyl& sw = SpinWeyl::get(g);
  CliffordElt r(g.rank());
  for (const auto& [w, c] : a.terms()) r += c * sw.omega_basis(w);
  return r;
}

SemidirectElt semidirect_mul(const SemidirectElt& a, const SemidirectElt& b) {
  const WeylGroup& g = common_group(a, b);
  SemidirectElt r(g);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      // c^e w c^d w' = c^e (w . c^d) w w'
      const auto [moved, sign] = act_on_mask(g.element(ka.second), kb.first);
      const int total = sign * clifford_reorder_sign(ka.first, moved);
      const std::pair key{ka.first ^ moved, g.mul(ka.second, kb.second)};
      if (total < 0)
        r.terms().sub(key, ca * cb);
      else
        r.terms().add(key, ca * cb);
    }
  return r;
}

TensorElt tensor_fin_mul(const TensorElt& a, const TensorElt& b) {
  const WeylGroup& g = common_group(a, b);
  const SpinWeyl& sw = SpinWeyl::get(g);
  TensorElt r(g);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      int sign = clifford_reorder_sign(ka.first, kb.first) * sw.cocycle(ka.second, kb.second);
      if ((g.length(ka.second) & 1) && mask_parity(kb.first)) sign = -sign;
      const std::pair key{ka.first ^ kb.first, g.mul(ka.second, kb.second)};
      if (sign < 0)
        r.terms().sub(key, ca * cb);
      else
        r.terms().add(key, ca * cb);
    }
  return r;
}

SemidirectElt semidirect_clifford(const WeylGroup& g, const CliffordElt& a) {
  SemidirectElt r(g);
  for (const auto& [m, c] : a.terms()) r.add({m, 0}, c);
  return r;
}

SemidirectElt semidirect_group(const WeylGroup& g, uint32_t w) { return SemidirectElt(g, {0, w}); }

TensorElt tensor_clifford(const WeylGroup& g, const CliffordElt& a) {
  TensorElt r(g);
  for (const auto& [m, c] : a.terms()) r.add({m, 0}, c);
  return r;
}

TensorElt tensor_spin(const WeylGroup& g, const SpinWeylElt& b) {
  TensorElt r(g);
  for (const auto& [w, c] : b.terms()) r.add({0, w}, c);
  return r;
}

TensorElt phi_fin(const SemidirectElt& a) {
  const WeylGroup& g = a.group();
  const Scalar minus_i(-named_constant("i"));
  std::vector<TensorElt> gens;
  for (int i = 1; i <= g.generators(); ++i)
    gens.push_back(minus_i * (tensor_clifford(g, beta(g.type(), i)) *
                              tensor_spin(g, spin_generator(g, i))));
  std::map<uint32_t, TensorElt> images;
  TensorElt r(g);
  for (const auto& [k, c] : a.terms()) {
    auto it = images.find(k.second);
    if (it == images.end()) {
      TensorElt img = tensor_clifford(g, CliffordElt(g.rank(), Scalar(1)));
      for (int i : g.word(k.second)) img = img * gens[i - 1];
      it = images.emplace(k.second, std::move(img)).first;
    }
    r.add_scaled(TensorElt(g, {k.first, 0}) * it->second, c);
  }
  return r;
}

SemidirectElt psi_fin(const TensorElt& b) {
  const WeylGroup& g = b.group();
  const Scalar plus_i(named_constant("i"));
  std::vector<SemidirectElt> gens;
  for (int i = 1; i <= g.generators(); ++i)
    gens.push_back(plus_i * (semidirect_clifford(g, beta(g.type(), i)) *
                             semidirect_group(g, g.generator(i))));
  std::map<uint32_t, SemidirectElt> images;
  SemidirectElt r(g);
  for (const auto& [k, c] : b.terms()) {
    auto it = images.find(k.second);
    if (it == images.end()) {
      SemidirectElt img = semidirect_group(g, 0);
      for (int i : g.word(k.second)) img = img * gens[i - 1];
      it = images.emplace(k.second, std::move(img)).first;
    }
    r.add_scaled(SemidirectElt(g, {k.first, 0}) * it->second, c);
  }
  return r;
}

}  // namespace hcl
