#include "hcl/spin_affine.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace hcl {

namespace {

void add_signed(LinComb<SahKey>& r, const SahKey& k, const Scalar& c, int sign) {
  if (sign < 0)
    r.sub(k, c);
  else
    r.add(k, c);
}

// b_j * b^gamma.
SkewPoly skew_left_letter(int j, const SkewPoly& f) {
  SkewPoly r;
  for (const auto& [gamma, c] : f) {
    int before = 0;
    for (int k = 0; k < j - 1; ++k) before += gamma[k];
    r.add(add_exponents(unit_exponent(j), gamma), before & 1 ? -c : c);
  }
  return r;
}

// t_i b_j = -b_{image} t_i + constant.
struct LetterRule {
  int image = 0;
  Scalar constant;
};

LetterRule letter_rule(const WeylType& t, int i, int j) {
  const int n = t.n;
  if (i < n) {
    if (j == i) return {i + 1, Scalar::u()};
    if (j == i + 1) return {i, Scalar::u()};
    return {j, Scalar()};
  }
  if (t.family == Family::D) {
    if (j == n) return {n - 1, Scalar::u()};
    if (j == n - 1) return {n, Scalar::u()};
    return {j, Scalar()};
  }
  if (t.family == Family::B) return {j, j == n ? Scalar::v() : Scalar()};
  throw std::logic_error("spin straightening: unsupported generator");
}

// t_i b^beta = refl t_i + lower.
struct TiMonomial {
  SkewPoly refl;
  SkewPoly lower;
};

const TiMonomial& ti_monomial(const WeylType& t, int i, const Exponents& beta) {
  thread_local std::map<std::tuple<int, int, int, Exponents>, TiMonomial> cache;
  const auto key = std::tuple{static_cast<int>(t.family), t.n, i, beta};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  TiMonomial m;
  int j = 0;
  while (j < t.n && beta[j] == 0) ++j;
  if (j == t.n) {
    m.refl.add(Exponents{}, Scalar(1));
  } else {
    // t_i b_j b^rest = -b_image (t_i b^rest) + constant b^rest.
    Exponents rest = beta;
    --rest[j];
    const TiMonomial tail = ti_monomial(t, i, rest);
    const LetterRule rule = letter_rule(t, i, j + 1);
    m.refl = -skew_left_letter(rule.image, tail.refl);
    m.lower = -skew_left_letter(rule.image, tail.lower);
    m.lower.add(rest, rule.constant);
  }
  return cache.emplace(key, std::move(m)).first->second;
}

LinComb<SahKey> left_t(const WeylGroup& g, const SpinWeyl& sw, int i, const LinComb<SahKey>& y) {
  LinComb<SahKey> r;
  for (const auto& [k, c] : y) {
    const TiMonomial& m = ti_monomial(g.type(), i, k.alpha);
    const uint32_t w = g.gen_left(i, k.w);
    const int mu = sw.gen_cocycle(i, k.w);
    for (const auto& [gamma, d] : m.refl) add_signed(r, {gamma, w}, c * d, mu);
    for (const auto& [gamma, d] : m.lower) r.add({gamma, k.w}, c * d);
  }
  return r;
}

}  // namespace

int skew_reorder_sign(const Exponents& a, const Exponents& c) {
  int later = 0, odd = 0;
  for (int k = kMaxRank - 1; k >= 0; --k) {
    odd ^= (later & c[k]) & 1;
    later += a[k];
  }
  return odd ? -1 : 1;
}

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b) {
  SkewPoly r;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b) {
      const Scalar p = c * d;
      if (skew_reorder_sign(x, y) < 0)
        r.sub(add_exponents(x, y), p);
      else
        r.add(add_exponents(x, y), p);
    }
  return r;
}

int sah_parity(const WeylGroup& g, const SahKey& k) { return (degree(k.alpha) + g.length(k.w)) & 1; }

SahElt sah_scalar(const WeylGroup& g, const Scalar& c) { return SahElt(g, SahKey{}, c); }

SahElt sah_b(const WeylGroup& g, int j) {
  if (j < 1 || j > g.rank()) throw std::out_of_range("b index out of range");
  return SahElt(g, {unit_exponent(j), 0});
}

SahElt sah_t(const WeylGroup& g, int i) {
  if (i < 1 || i > g.generators()) throw std::out_of_range("t index out of range");
  return sah_group(g, g.generator(i));
}

SahElt sah_group(const WeylGroup& g, uint32_t w) { return SahElt(g, {Exponents{}, w}); }

SahElt sah_skew(const WeylGroup& g, const SkewPoly& f) {
  SahElt r(g);
  for (const auto& [alpha, c] : f) r.add({alpha, 0}, c);
  return r;
}

SahElt sah_spin(const SpinWeylElt& a) {
  SahElt r(a.group());
  for (const auto& [w, c] : a.terms()) r.add({Exponents{}, w}, c);
  return r;
}

SahElt sah_mul(const SahElt& a, const SahElt& b) {
  const WeylGroup& g = common_group(a, b);
  if (a.is_zero() || b.is_zero()) return SahElt(g);
  const SpinWeyl& sw = SpinWeyl::get(g);
  std::map<uint32_t, LinComb<SahKey>> wb;
  wb.emplace(0, b.terms());
  const auto group_times_b = [&](auto&& self, uint32_t w) -> const LinComb<SahKey>& {
    auto it = wb.find(w);
    if (it != wb.end()) return it->second;
    const int i = g.word(w).front();
    LinComb<SahKey> y = left_t(g, sw, i, self(self, g.gen_left(i, w)));
    return wb.emplace(w, std::move(y)).first->second;
  };
  SahElt r(g);
  for (const auto& [ka, ca] : a.terms()) {
    const LinComb<SahKey>& y = group_times_b(group_times_b, ka.w);
    for (const auto& [kb, cb] : y)
      add_signed(r.terms(), {add_exponents(ka.alpha, kb.alpha), kb.w}, ca * cb,
                 skew_reorder_sign(ka.alpha, kb.alpha));
  }
  return r;
}

SahElt power(const SahElt& a, int e) {
  SahElt r = sah_scalar(a.group(), 1);
  for (int k = 0; k < e; ++k) r = r * a;
  return r;
}

SahElt straighten_ti_skew(const WeylType& t, int i, const Exponents& beta) {
  const WeylGroup& g = WeylGroup::get(t);
  if (i < 1 || i > g.generators()) throw std::out_of_range("generator index out of range");
  return sah_t(g, i) * SahElt(g, {beta, 0});
}

SahElt intertwiner_I(const WeylType& t, int i) {
  const WeylGroup& g = WeylGroup::get(t);
  const int n = g.rank();
  if (i < 1 || i > g.generators()) throw std::out_of_range("intertwiner index out of range");
  const auto b = [&](int j) { return sah_b(g, j); };
  const SahElt u = sah_scalar(g, Scalar::u());
  if (i < n) return (b(i + 1) * b(i + 1) - b(i) * b(i)) * sah_t(g, i) - u * (b(i + 1) - b(i));
  if (t.family == Family::D)
    return (b(n) * b(n) - b(n - 1) * b(n - 1)) * sah_t(g, n) - u * (b(n) - b(n - 1));
  return sah_scalar(g, 2) * b(n) * b(n) * sah_t(g, n) - sah_scalar(g, Scalar::v()) * b(n);
}

SahElt apply_spin_involution(Involution which, const SahElt& a) {
  const WeylGroup& g = a.group();
  const int n = g.rank();
  if (g.type().family != Family::D)
    throw std::invalid_argument("involutions are implemented for type D only");
  std::map<uint32_t, SahElt> images;
  const auto image_of = [&](uint32_t w) -> const SahElt& {
    auto it = images.find(w);
    if (it != images.end()) return it->second;
    SahElt img = sah_scalar(g, 1);
    const auto& word = g.word(w);
    if (which == Involution::Sigma) {
      for (int i : word) img = img * sah_t(g, i == n ? n - 1 : (i == n - 1 ? n : i));
    } else {
      for (auto r = word.rbegin(); r != word.rend(); ++r) img = img * sah_t(g, *r);
    }
    return images.emplace(w, std::move(img)).first->second;
  };
  SahElt r(g);
  for (const auto& [k, c] : a.terms()) {
    const SahElt& tw = image_of(k.w);
    if (which == Involution::Sigma) {
      r.add_scaled(SahElt(g, {k.alpha, 0}) * tw, c);
      continue;
    }
    // Reversing b^alpha costs one sign per pair of letters b_j, b_k, j < k.
    int pairs = 0, seen = 0;
    for (int j = 0; j < n; ++j) {
      pairs += seen * k.alpha[j];
      seen += k.alpha[j];
    }
    if (which == Involution::Tau1) pairs += degree(k.alpha) + g.length(k.w);
    r.add_scaled(tw * SahElt(g, {k.alpha, 0}), pairs & 1 ? -c : c);
  }
  return r;
}

SahElt sah_even_poly(const WeylGroup& g, const Poly& f) {
  SahElt r(g);
  for (const auto& [alpha, c] : f) {
    Exponents doubled{};
    for (int j = 0; j < kMaxRank; ++j) {
      if (alpha[j] > 127) throw std::overflow_error("exponent overflow");
      doubled[j] = static_cast<uint8_t>(2 * alpha[j]);
    }
    r.add({doubled, 0}, c);
  }
  return r;
}

bool spin_center_check(const WeylType& t, const Poly& f) {
  const WeylGroup& g = WeylGroup::get(t);
  const SahElt z = sah_even_poly(g, f);
  for (int j = 1; j <= g.rank(); ++j)
    if (!(z * sah_b(g, j) == sah_b(g, j) * z)) return false;
  for (int i = 1; i <= g.generators(); ++i)
    if (!(z * sah_t(g, i) == sah_t(g, i) * z)) return false;
  return true;
}

// ---------------------------------------------------------------------------

TensorSpinElt tensor_spin_mul(const TensorSpinElt& a, const TensorSpinElt& b) {
  const WeylGroup& g = common_group(a, b);
  std::map<std::pair<CliffMask, int>, SahElt> left;
  for (const auto& [k, c] : a.terms()) {
    auto [it, fresh] = left.try_emplace({k.mask, sah_parity(g, {k.alpha, k.w})}, g);
    it->second.add({k.alpha, k.w}, c);
  }
  std::map<CliffMask, SahElt> right;
  for (const auto& [k, c] : b.terms()) {
    auto [it, fresh] = right.try_emplace(k.mask, g);
    it->second.add({k.alpha, k.w}, c);
  }
  TensorSpinElt r(g);
  for (const auto& [lk, h] : left)
    for (const auto& [mask, h2] : right) {
      int sign = clifford_reorder_sign(lk.first, mask);
      if (lk.second && mask_parity(mask)) sign = -sign;
      const CliffMask m = lk.first ^ mask;
      const SahElt prod = h * h2;
      for (const auto& [k, c] : prod.terms()) {
        if (sign < 0)
          r.terms().sub({m, k.alpha, k.w}, c);
        else
          r.terms().add({m, k.alpha, k.w}, c);
      }
    }
  return r;
}

TensorSpinElt ts_clifford(const WeylGroup& g, const CliffordElt& a) {
  if (a.rank() != g.rank()) throw std::invalid_argument("Clifford rank mismatch");
  TensorSpinElt r(g);
  for (const auto& [m, c] : a.terms()) r.add({m, Exponents{}, 0}, c);
  return r;
}

TensorSpinElt ts_spin_affine(const SahElt& h) {
  TensorSpinElt r(h.group());
  for (const auto& [k, c] : h.terms()) r.add({0, k.alpha, k.w}, c);
  return r;
}

TensorSpinElt ts_from_finite(const TensorElt& a) {
  TensorSpinElt r(a.group());
  for (const auto& [k, c] : a.terms()) r.add({k.first, Exponents{}, k.second}, c);
  return r;
}

TensorSpinElt phi_affine(const AhcElt& a) {
  const WeylGroup& g = a.group();
  const int n = g.rank();
  const TensorSpinElt one = ts_clifford(g, CliffordElt(n, Scalar(1)));
  std::vector<TensorSpinElt> x;
  for (int j = 1; j <= n; ++j)
    x.push_back(Scalar(named_constant("sqrtm2")) *
                (ts_clifford(g, CliffordElt::generator(n, j)) * ts_spin_affine(sah_b(g, j))));
  std::map<Exponents, TensorSpinElt> poly_images;
  std::map<uint32_t, TensorSpinElt> group_images;
  TensorSpinElt r(g);
  for (const auto& [k, c] : a.terms()) {
    auto p = poly_images.find(k.alpha);
    if (p == poly_images.end()) {
      TensorSpinElt img = one;
      for (int j = 0; j < n; ++j)
        for (int e = 0; e < k.alpha[j]; ++e) img = img * x[j];
      p = poly_images.emplace(k.alpha, std::move(img)).first;
    }
    auto w = group_images.find(k.w);
    if (w == group_images.end())
      w = group_images.emplace(k.w, ts_from_finite(phi_fin(semidirect_group(g, k.w)))).first;
    r.add_scaled(p->second * ts_clifford(g, CliffordElt::monomial(n, k.mask)) * w->second, c);
  }
  return r;
}

AhcElt psi_affine(const TensorSpinElt& b) {
  const WeylGroup& g = b.group();
  const int n = g.rank();
  std::vector<AhcElt> y;
  for (int j = 1; j <= n; ++j)
    y.push_back(ahc_scalar(g, Scalar(named_constant("inv_sqrtm2"))) * ahc_c(g, j) * ahc_x(g, j));
  std::map<Exponents, AhcElt> skew_images;
  std::map<uint32_t, AhcElt> group_images;
  AhcElt r(g);
  for (const auto& [k, c] : b.terms()) {
    auto p = skew_images.find(k.alpha);
    if (p == skew_images.end()) {
      AhcElt img = ahc_scalar(g, 1);
      for (int j = 0; j < n; ++j)
        for (int e = 0; e < k.alpha[j]; ++e) img = img * y[j];
      p = skew_images.emplace(k.alpha, std::move(img)).first;
    }
    auto w = group_images.find(k.w);
    if (w == group_images.end()) {
      AhcElt img(g);
      const SemidirectElt fin = psi_fin(TensorElt(g, {0, k.w}));
      for (const auto& [sk, sc] : fin.terms())
        img.add({Exponents{}, sk.first, sk.second}, sc);
      w = group_images.emplace(k.w, std::move(img)).first;
    }
    r.add_scaled(ahc_clifford(g, CliffordElt::monomial(n, k.mask)) * p->second * w->second, c);
  }
  return r;
}

}  // namespace hcl
