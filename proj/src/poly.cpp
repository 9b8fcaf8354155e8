#include "hcl/poly.hpp"

#include <map>
#include <stdexcept>

namespace hcl {

int degree(const Exponents& alpha) {
  int d = 0;
  for (uint8_t e : alpha) d += e;
  return d;
}

Exponents unit_exponent(int j) {
  Exponents e{};
  e[j - 1] = 1;
  return e;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int k = 0; k < kMaxRank; ++k) {
    const int s = a[k] + b[k];
    if (s > 255) throw std::overflow_error("exponent overflow");
    r[k] = static_cast<uint8_t>(s);
  }
  return r;
}

Poly poly_constant(const Scalar& c) { return poly_monomial(Exponents{}, c); }

Poly poly_monomial(const Exponents& alpha, const Scalar& c) {
  Poly p;
  p.add(alpha, c);
  return p;
}

Poly poly_var(int j) { return poly_monomial(unit_exponent(j)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r.add(add_exponents(ea, eb), ca * cb);
  return r;
}

Poly poly_pow(const Poly& a, int e) {
  Poly r = poly_constant(1);
  for (int k = 0; k < e; ++k) r = poly_mul(r, a);
  return r;
}

Poly poly_act(const WeylElt& w, const Poly& f) {
  Poly r;
  for (const auto& [alpha, c] : f) {
    const auto [image, sign] = act_on_exponents(w, alpha);
    if (sign < 0)
      r.sub(image, c);
    else
      r.add(image, c);
  }
  return r;
}

Poly poly_negate_vars(const Poly& f, uint32_t vars) {
  Poly r;
  for (const auto& [alpha, c] : f) {
    int odd = 0;
    for (int k = 0; k < kMaxRank; ++k)
      if ((vars >> k & 1) && (alpha[k] & 1)) odd ^= 1;
    if (odd)
      r.sub(alpha, c);
    else
      r.add(alpha, c);
  }
  return r;
}

Poly divide_linear(const Poly& f, int a, int b, int sign) {
  if (a == b) throw std::invalid_argument("divide_linear: needs two distinct variables");
  // Synthetic division in x_a by the root x_a = r with r = -sign x_b:
  // q_{k-1} = f_k + r q_k, remainder f_0 + r q_0.
  std::map<int, Poly> slices;
  int top = 0;
  for (const auto& [alpha, c] : f) {
    Exponents rest = alpha;
    const int k = rest[a - 1];
    rest[a - 1] = 0;
    slices[k].add(rest, c);
    top = std::max(top, k);
  }
  const Poly root = poly_monomial(unit_exponent(b), Scalar(-sign));
  Poly quotient;
  Poly carry;
  for (int k = top; k >= 1; --k) {
    Poly qk = carry;
    if (auto it = slices.find(k); it != slices.end()) qk += it->second;
    for (const auto& [alpha, c] : qk) {
      Exponents e = alpha;
      e[a - 1] = static_cast<uint8_t>(k - 1);
      quotient.add(e, c);
    }
    carry = poly_mul(root, qk);
  }
  Poly remainder = carry;
  if (auto it = slices.find(0); it != slices.end()) remainder += it->second;
  if (!remainder.is_zero()) throw std::logic_error("non-exact division by a linear form");
  return quotient;
}

Poly divide_var(const Poly& f, int a) {
  Poly r;
  for (const auto& [alpha, c] : f) {
    if (alpha[a - 1] == 0) throw std::logic_error("non-exact division by a variable");
    Exponents e = alpha;
    --e[a - 1];
    r.add(e, c);
  }
  return r;
}

Poly demazure(const WeylType& t, int i, DemazureKind kind, const Poly& f) {
  const int n = t.n;
  const Poly reflected = poly_act(WeylElt::generator(t, i), f);
  switch (kind) {
    case DemazureKind::Plain:
      return divide_linear(f - reflected, i + 1, i, -1);
    case DemazureKind::Twisted:
      return divide_linear(poly_negate_vars(f, 3u << (i - 1)) - reflected, i + 1, i, 1);
    case DemazureKind::DPlain:
      return divide_linear(f - reflected, n, n - 1, 1);
    case DemazureKind::DTwisted:
      return divide_linear(poly_negate_vars(f, 3u << (n - 2)) - reflected, n, n - 1, -1);
    case DemazureKind::BReflection: {
      Poly q = divide_var(f - reflected, n);
      q.scale(Scalar(Rational(1, 2)));
      return q;
    }
  }
  return {};
}

}  // namespace hcl
