#include "hcl/affine_hc.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace hcl {

namespace {

CliffMask bit(int j) { return CliffMask{1} << (j - 1); }

// Parity of sum_{j in mask} alpha_j: the sign of moving c^mask past x^alpha.
int clifford_past_poly_sign(CliffMask mask, const Exponents& alpha) {
  int odd = 0;
  for (CliffMask rest = mask; rest != 0; rest &= rest - 1) odd ^= alpha[__builtin_ctz(rest)] & 1;
  return odd ? -1 : 1;
}

// s_i x^beta = sign x^refl s_i + plain + twisted * c^pair.
struct SiMonomial {
  Exponents refl{};
  int sign = 1;
  Poly plain;
  Poly twisted;
  CliffMask pair = 0;
};

SiMonomial compute_si_monomial(const WeylType& t, int i, const Exponents& beta) {
  SiMonomial m;
  const WeylElt s = WeylElt::generator(t, i);
  std::tie(m.refl, m.sign) = act_on_exponents(s, beta);
  if (m.refl == beta && m.sign == 1) return m;
  const Poly f = poly_monomial(beta);
  const int n = t.n;
  const Scalar u = Scalar::u();
  if (i < n) {
    m.plain = demazure(t, i, DemazureKind::Plain, f);
    m.plain.scale(u);
    m.twisted = demazure(t, i, DemazureKind::Twisted, f);
    m.twisted.scale(u);
    m.pair = bit(i) | bit(i + 1);
  } else if (t.family == Family::D) {
    m.plain = demazure(t, i, DemazureKind::DPlain, f);
    m.plain.scale(-u);
    m.twisted = demazure(t, i, DemazureKind::DTwisted, f);
    m.twisted.scale(u);
    m.pair = bit(n - 1) | bit(n);
  } else if (t.family == Family::B) {
    m.plain = demazure(t, i, DemazureKind::BReflection, f);
    m.plain.scale(-(Scalar(named_constant("sqrt2")) * Scalar::v()));
  } else {
    throw std::logic_error("straightening: unsupported generator");
  }
  return m;
}

const SiMonomial& si_monomial(const WeylType& t, int i, const Exponents& beta) {
  thread_local std::map<std::tuple<int, int, int, Exponents>, SiMonomial> cache;
  const auto key = std::tuple{static_cast<int>(t.family), t.n, i, beta};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_si_monomial(t, i, beta)).first;
  return it->second;
}

void add_signed(AhcElt& r, const AhcKey& k, const Scalar& c, int sign) {
  if (sign < 0)
    r.terms().sub(k, c);
  else
    r.terms().add(k, c);
}

AhcElt left_s(const WeylGroup& g, int i, const AhcElt& y) {
  const WeylElt s = WeylElt::generator(g.type(), i);
  AhcElt r(g);
  for (const auto& [k, c] : y.terms()) {
    const SiMonomial& m = si_monomial(g.type(), i, k.alpha);
    const auto [mask, msign] = act_on_mask(s, k.mask);
    add_signed(r, {m.refl, mask, g.gen_left(i, k.w)}, c, m.sign * msign);
    for (const auto& [gamma, d] : m.plain) r.terms().add({gamma, k.mask, k.w}, c * d);
    if (m.twisted.is_zero()) continue;
    const int tsign = clifford_reorder_sign(m.pair, k.mask);
    for (const auto& [gamma, d] : m.twisted)
      add_signed(r, {gamma, m.pair ^ k.mask, k.w}, c * d, tsign);
  }
  return r;
}

}  // namespace

AhcElt ahc_scalar(const WeylGroup& g, const Scalar& c) { return AhcElt(g, AhcKey{}, c); }

AhcElt ahc_x(const WeylGroup& g, int j) {
  if (j < 1 || j > g.rank()) throw std::out_of_range("x index out of range");
  return AhcElt(g, {unit_exponent(j), 0, 0});
}

AhcElt ahc_c(const WeylGroup& g, int j) {
  if (j < 1 || j > g.rank()) throw std::out_of_range("c index out of range");
  return AhcElt(g, {Exponents{}, bit(j), 0});
}

AhcElt ahc_s(const WeylGroup& g, int i) { return ahc_group(g, g.generator(i)); }

AhcElt ahc_group(const WeylGroup& g, uint32_t w) { return AhcElt(g, {Exponents{}, 0, w}); }

AhcElt ahc_poly(const WeylGroup& g, const Poly& f) {
  AhcElt r(g);
  for (const auto& [alpha, c] : f) r.add({alpha, 0, 0}, c);
  return r;
}

AhcElt ahc_clifford(const WeylGroup& g, const CliffordElt& a) {
  if (a.rank() != g.rank()) throw std::invalid_argument("Clifford rank mismatch");
  AhcElt r(g);
  for (const auto& [m, c] : a.terms()) r.add({Exponents{}, m, 0}, c);
  return r;
}

AhcElt ahc_mul(const AhcElt& a, const AhcElt& b) {
  const WeylGroup& g = common_group(a, b);
  if (a.is_zero() || b.is_zero()) return AhcElt(g);
  // w * b for every group part w of a, sharing canonical-word tails.
  std::map<uint32_t, AhcElt> wb;
  wb.emplace(0, b);
  const auto group_times_b = [&](auto&& self, uint32_t w) -> const AhcElt& {
    auto it = wb.find(w);
    if (it != wb.end()) return it->second;
    const int i = g.word(w).front();
    AhcElt y = left_s(g, i, self(self, g.gen_left(i, w)));
    return wb.emplace(w, std::move(y)).first->second;
  };
  AhcElt r(g);
  for (const auto& [ka, ca] : a.terms()) {
    const AhcElt& y = group_times_b(group_times_b, ka.w);
    for (const auto& [kb, cb] : y.terms()) {
      const int sign =
          clifford_past_poly_sign(ka.mask, kb.alpha) * clifford_reorder_sign(ka.mask, kb.mask);
      add_signed(r, {add_exponents(ka.alpha, kb.alpha), ka.mask ^ kb.mask, kb.w}, ca * cb, sign);
    }
  }
  return r;
}

AhcElt power(const AhcElt& a, int e) {
  AhcElt r = ahc_scalar(a.group(), 1);
  for (int k = 0; k < e; ++k) r = r * a;
  return r;
}

AhcElt straighten_si_poly(const WeylType& t, int i, const Poly& f) {
  const WeylGroup& g = WeylGroup::get(t);
  if (i < 1 || i > g.generators()) throw std::out_of_range("generator index out of range");
  return left_s(g, i, ahc_poly(g, f));
}

Poly ahc_to_poly(const AhcElt& a) {
  Poly f;
  for (const auto& [k, c] : a.terms()) {
    if (k.mask != 0 || k.w != 0) throw std::invalid_argument("element is not a polynomial");
    f.add(k.alpha, c);
  }
  return f;
}

// ---------------------------------------------------------------------------

IndElt ind_poly(const WeylGroup& g, const Poly& f) {
  IndElt r(g);
  for (const auto& [alpha, c] : f) r.add({alpha, 0}, c);
  return r;
}

namespace {

void ind_add(IndElt& r, const Poly& f, const CliffordElt& a) {
  for (const auto& [alpha, c] : f)
    for (const auto& [m, d] : a.terms()) r.add({alpha, m}, c * d);
}

IndElt ind_s(const WeylGroup& g, int i, const IndElt& m) {
  const WeylType& t = g.type();
  const int n = g.rank();
  const WeylElt s = WeylElt::generator(t, i);
  std::map<CliffMask, Poly> parts;
  for (const auto& [k, c] : m.terms()) parts[k.mask].add(k.alpha, c);
  IndElt r(g);
  const Scalar u = Scalar::u();
  for (const auto& [mask, f] : parts) {
    const CliffordElt ce = CliffordElt::monomial(n, mask);
    ind_add(r, poly_act(s, f), weyl_act_clifford(s, ce));
    if (i < n) {
      const CliffordElt pair = CliffordElt::generator(n, i) * CliffordElt::generator(n, i + 1);
      ind_add(r, demazure(t, i, DemazureKind::Plain, f), u * ce);
      ind_add(r, demazure(t, i, DemazureKind::Twisted, f), u * (pair * ce));
    } else if (t.family == Family::D) {
      const CliffordElt pair = CliffordElt::generator(n, n - 1) * CliffordElt::generator(n, n);
      ind_add(r, demazure(t, i, DemazureKind::DPlain, f), -u * ce);
      ind_add(r, demazure(t, i, DemazureKind::DTwisted, f), u * (pair * ce));
    } else {
      const Scalar coeff = -(Scalar(named_constant("sqrt2")) * Scalar::v());
      ind_add(r, demazure(t, i, DemazureKind::BReflection, f), coeff * ce);
    }
  }
  return r;
}

IndElt ind_c(const WeylGroup& g, int j, const IndElt& m) {
  IndElt r(g);
  for (const auto& [k, c] : m.terms()) {
    const int sign = clifford_past_poly_sign(bit(j), k.alpha) * clifford_reorder_sign(bit(j), k.mask);
    if (sign < 0)
      r.terms().sub({k.alpha, k.mask ^ bit(j)}, c);
    else
      r.terms().add({k.alpha, k.mask ^ bit(j)}, c);
  }
  return r;
}

}  // namespace

IndElt ind_act(const AhcElt& a, const IndElt& m) {
  const WeylGroup& g = common_group(a, m);
  IndElt r(g);
  for (const auto& [k, c] : a.terms()) {
    IndElt y = m;
    const auto& word = g.word(k.w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = ind_s(g, *it, y);
    for (int j = g.rank(); j >= 1; --j)
      if (k.mask & bit(j)) y = ind_c(g, j, y);
    for (const auto& [kk, d] : y.terms()) r.add({add_exponents(k.alpha, kk.alpha), kk.mask}, c * d);
  }
  return r;
}

// ---------------------------------------------------------------------------

AhcElt intertwiner_phi(const WeylType& t, int i) {
  const WeylGroup& g = WeylGroup::get(t);
  const int n = g.rank();
  if (i < 1 || i > g.generators()) throw std::out_of_range("intertwiner index out of range");
  const AhcElt u = ahc_scalar(g, Scalar::u());
  const auto x = [&](int j) { return ahc_x(g, j); };
  const auto c = [&](int j) { return ahc_c(g, j); };
  if (i < n) {
    return (x(i + 1) * x(i + 1) - x(i) * x(i)) * ahc_s(g, i) - u * (x(i + 1) + x(i)) -
           u * (x(i + 1) - x(i)) * c(i) * c(i + 1);
  }
  if (t.family == Family::D) {
    return (x(n) * x(n) - x(n - 1) * x(n - 1)) * ahc_s(g, n) + u * (x(n) - x(n - 1)) -
           u * (x(n) + x(n - 1)) * c(n - 1) * c(n);
  }
  const AhcElt r2v = ahc_scalar(g, Scalar(named_constant("sqrt2")) * Scalar::v());
  return ahc_scalar(g, 2) * x(n) * x(n) * ahc_s(g, n) + r2v * x(n);
}

uint32_t diagram_swap(const WeylGroup& g, uint32_t w) {
  const int n = g.rank();
  if (g.type().family != Family::D) throw std::invalid_argument("diagram swap needs type D");
  const auto& word = g.word(w);
  uint32_t r = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it == n ? n - 1 : (*it == n - 1 ? n : *it);
    r = g.gen_left(i, r);
  }
  return r;
}

AhcElt apply_involution(Involution which, const AhcElt& a) {
  const WeylGroup& g = a.group();
  const int n = g.rank();
  if (g.type().family != Family::D)
    throw std::invalid_argument("involutions are implemented for type D only");
  AhcElt r(g);
  for (const auto& [k, c] : a.terms()) {
    if (which == Involution::Sigma) {
      // x_n -> -x_n, c_n -> -c_n, and s_{n-1} <-> s_n on the group part.
      const int odd = (k.alpha[n - 1] + ((k.mask >> (n - 1)) & 1)) & 1;
      add_signed(r, {k.alpha, k.mask, diagram_swap(g, k.w)}, c, odd ? -1 : 1);
      continue;
    }
    // Anti-involution: x^a c^e w -> w^-1 rev(c^e) x^a, c_j -> -c_j for tau2.
    const int m = __builtin_popcount(k.mask);
    int sign = (m * (m - 1) / 2) % 2 ? -1 : 1;
    if (which == Involution::Tau2 && (m & 1)) sign = -sign;
    sign *= clifford_past_poly_sign(k.mask, k.alpha);
    const AhcElt tail(g, {k.alpha, k.mask, 0}, sign < 0 ? -c : c);
    r += ahc_group(g, g.inverse(k.w)) * tail;
  }
  return r;
}

bool center_commutator_check(const WeylType& t, const Poly& f) {
  const WeylGroup& g = WeylGroup::get(t);
  const AhcElt z = ahc_poly(g, f);
  std::vector<AhcElt> gens;
  for (int j = 1; j <= g.rank(); ++j) {
    gens.push_back(ahc_x(g, j));
    gens.push_back(ahc_c(g, j));
  }
  for (int i = 1; i <= g.generators(); ++i) gens.push_back(ahc_s(g, i));
  for (const AhcElt& y : gens)
    if (!(z * y == y * z)) return false;
  return true;
}

AhcElt dilate(const AhcElt& a, const Cyc8& factor) {
  AhcElt r(a.group());
  for (const auto& [k, c] : a.terms()) {
    Cyc8 scale(1);
    for (int d = degree(k.alpha); d > 0; --d) scale *= factor;
    r.add(k, Scalar(scale) * rescale_parameters(c, factor));
  }
  return r;
}

}  // namespace hcl
