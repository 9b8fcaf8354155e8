#include "hcl/covering.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace hcl {

namespace {

// Coefficients of a polynomial in X with z-powers: X^alpha z^k.
using ZPoly = LinComb<std::pair<Exponents, uint8_t>>;

// X_j * z^k X^gamma.
ZPoly left_letter(int j, const ZPoly& f) {
  ZPoly r;
  for (const auto& [key, c] : f) {
    int before = 0;
    for (int k = 0; k < j - 1; ++k) before += key.first[k];
    r.add({add_exponents(unit_exponent(j), key.first), static_cast<uint8_t>((key.second + before) & 1)},
          c);
  }
  return r;
}

ZPoly times(const ZPoly& f, int sign, int zbit) {
  ZPoly r;
  for (const auto& [key, c] : f)
    r.add({key.first, static_cast<uint8_t>(key.second ^ zbit)}, sign < 0 ? -c : c);
  return r;
}

// T_i X_j = sign z^zbit X_image T_i + constant z^czbit.
struct LetterRule {
  int image = 0;
  int sign = 1;
  int zbit = 1;
  Scalar constant;
  int czbit = 0;
};

LetterRule letter_rule(const WeylType& t, int i, int j) {
  const int n = t.n;
  if (i < n) {
    if (j == i + 1) return {i, 1, 1, Scalar::u(), 0};
    // From T_i^2 = 1: T_i X_i = z X_{i+1} T_i - z u.
    if (j == i) return {i + 1, 1, 1, -Scalar::u(), 1};
    return {j, 1, 1, Scalar(), 0};
  }
  if (t.family == Family::D) {
    // T_n X_n = -X_{n-1} T_n - z u. A constant of +u is consistent only at
    // z = -1: at z = 1 the T_{n-2} T_n braid fails on X.
    if (j == n) return {n - 1, -1, 0, -Scalar::u(), 1};
    if (j == n - 1) return {n, -1, 0, -Scalar::u(), 1};
    return {j, 1, 1, Scalar(), 0};
  }
  if (t.family == Family::B) {
    if (j == n) return {n, -1, 0, Scalar::v(), 0};
    return {j, 1, 1, Scalar(), 0};
  }
  throw std::logic_error("covering straightening: unsupported generator");
}

// T_i X^beta = refl T_i + lower.
struct TiMonomial {
  ZPoly refl;
  ZPoly lower;
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
    m.refl.add({Exponents{}, 0}, Scalar(1));
  } else {
    Exponents rest = beta;
    --rest[j];
    const TiMonomial tail = ti_monomial(t, i, rest);
    const LetterRule rule = letter_rule(t, i, j + 1);
    m.refl = times(left_letter(rule.image, tail.refl), rule.sign, rule.zbit);
    m.lower = times(left_letter(rule.image, tail.lower), rule.sign, rule.zbit);
    m.lower.add({rest, static_cast<uint8_t>(rule.czbit)}, rule.constant);
  }
  return cache.emplace(key, std::move(m)).first->second;
}

// z-count of X^a X^c = z^N X^(a+c).
int x_reorder_zbit(const Exponents& a, const Exponents& c) {
  // Same pair count as for the skew polynomials.
  return skew_reorder_sign(a, c) < 0 ? 1 : 0;
}

LinComb<CoverKey> left_t(const WeylGroup& g, const SpinWeyl& sw, int i, const LinComb<CoverKey>& y) {
  LinComb<CoverKey> r;
  for (const auto& [k, c] : y) {
    const TiMonomial& m = ti_monomial(g.type(), i, k.alpha);
    const uint32_t w = g.gen_left(i, k.w);
    const int mu_bit = sw.gen_cocycle(i, k.w) < 0 ? 1 : 0;
    for (const auto& [key, d] : m.refl)
      r.add({key.first, w, static_cast<uint8_t>(k.zbit ^ key.second ^ mu_bit)}, c * d);
    for (const auto& [key, d] : m.lower)
      r.add({key.first, k.w, static_cast<uint8_t>(k.zbit ^ key.second)}, c * d);
  }
  return r;
}

}  // namespace

CoverElt cover_scalar(const WeylGroup& g, const Scalar& c) { return CoverElt(g, CoverKey{}, c); }

CoverElt cover_z(const WeylGroup& g) { return CoverElt(g, {Exponents{}, 0, 1}); }

CoverElt cover_x(const WeylGroup& g, int j) {
  if (j < 1 || j > g.rank()) throw std::out_of_range("X index out of range");
  return CoverElt(g, {unit_exponent(j), 0, 0});
}

CoverElt cover_t(const WeylGroup& g, int i) {
  if (i < 1 || i > g.generators()) throw std::out_of_range("T index out of range");
  return cover_group(g, g.generator(i));
}

CoverElt cover_group(const WeylGroup& g, uint32_t w) { return CoverElt(g, {Exponents{}, w, 0}); }

CoverElt cover_mul(const CoverElt& a, const CoverElt& b) {
  const WeylGroup& g = common_group(a, b);
  if (a.is_zero() || b.is_zero()) return CoverElt(g);
  const SpinWeyl& sw = SpinWeyl::get(g);
  std::map<uint32_t, LinComb<CoverKey>> wb;
  wb.emplace(0, b.terms());
  const auto group_times_b = [&](auto&& self, uint32_t w) -> const LinComb<CoverKey>& {
    auto it = wb.find(w);
    if (it != wb.end()) return it->second;
    const int i = g.word(w).front();
    LinComb<CoverKey> y = left_t(g, sw, i, self(self, g.gen_left(i, w)));
    return wb.emplace(w, std::move(y)).first->second;
  };
  CoverElt r(g);
  for (const auto& [ka, ca] : a.terms()) {
    const LinComb<CoverKey>& y = group_times_b(group_times_b, ka.w);
    for (const auto& [kb, cb] : y) {
      const int z = ka.zbit ^ kb.zbit ^ x_reorder_zbit(ka.alpha, kb.alpha);
      r.add({add_exponents(ka.alpha, kb.alpha), kb.w, static_cast<uint8_t>(z)}, ca * cb);
    }
  }
  return r;
}

CoverElt power(const CoverElt& a, int e) {
  CoverElt r = cover_scalar(a.group(), 1);
  for (int k = 0; k < e; ++k) r = r * a;
  return r;
}

LusztigElt upsilon_plus(const CoverElt& a) {
  LusztigElt r(a.group());
  for (const auto& [k, c] : a.terms()) r.add({k.alpha, k.w}, c);
  return r;
}

SahElt upsilon_minus(const CoverElt& a) {
  SahElt r(a.group());
  for (const auto& [k, c] : a.terms()) r.add({k.alpha, k.w}, k.zbit ? -c : c);
  return r;
}

CoverElt lift(const LusztigElt& a) {
  CoverElt r(a.group());
  for (const auto& [k, c] : a.terms()) r.add({k.alpha, k.w, 0}, c);
  return r;
}

CoverElt lift(const SahElt& a) {
  CoverElt r(a.group());
  for (const auto& [k, c] : a.terms()) r.add({k.alpha, k.w, 0}, c);
  return r;
}

LusztigElt lusztig_scalar(const WeylGroup& g, const Scalar& c) { return LusztigElt(g, LusztigKey{}, c); }

LusztigElt lusztig_x(const WeylGroup& g, int j) {
  if (j < 1 || j > g.rank()) throw std::out_of_range("x index out of range");
  return LusztigElt(g, {unit_exponent(j), 0});
}

LusztigElt lusztig_s(const WeylGroup& g, int i) {
  if (i < 1 || i > g.generators()) throw std::out_of_range("s index out of range");
  return lusztig_group(g, g.generator(i));
}

LusztigElt lusztig_group(const WeylGroup& g, uint32_t w) { return LusztigElt(g, {Exponents{}, w}); }

LusztigElt lusztig_mul(const LusztigElt& a, const LusztigElt& b) {
  return upsilon_plus(lift(a) * lift(b));
}

}  // namespace hcl
