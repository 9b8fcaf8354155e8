#include "hcl/scalar.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hcl {

Cyc8::Cyc8(Rational a0, Rational a1, Rational a2, Rational a3)
    : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {
  for (auto& q : c_) q.canonicalize();
}

bool Cyc8::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Cyc8::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Cyc8::is_one() const { return is_rational() && c_[0] == 1; }

Cyc8& Cyc8::operator+=(const Cyc8& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyc8& Cyc8::operator-=(const Cyc8& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyc8& Cyc8::operator*=(const Cyc8& o) { return *this = *this * o; }

Cyc8 Cyc8::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Cyc8 operator*(const Cyc8& a, const Cyc8& b) {
  if (a.is_rational()) {
    if (a.c_[0] == 1) return b;
    return {a.c_[0] * b.c_[0], a.c_[0] * b.c_[1], a.c_[0] * b.c_[2],
            a.c_[0] * b.c_[3]};
  }
  if (b.is_rational()) return b * a;
  Cyc8 r;
  for (int i = 0; i < 4; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      const int k = i + j;
      if (k < 4)
        r.c_[k] += a.c_[i] * b.c_[j];
      else
        r.c_[k - 4] -= a.c_[i] * b.c_[j];
    }
  }
  return r;
}

Cyc8 cyc8_mul(const Cyc8& a, const Cyc8& b) { return a * b; }

Cyc8 Cyc8::galois(int k) const {
  if (k % 2 == 0) throw std::invalid_argument("galois: exponent must be odd");
  k = ((k % 8) + 8) % 8;
  Cyc8 r;
  for (int j = 0; j < 4; ++j) {
    const int m = (j * k) % 8;
    if (m < 4)
      r.c_[m] += c_[j];
    else
      r.c_[m - 4] -= c_[j];
  }
  return r;
}

Rational Cyc8::norm() const {
  const Cyc8 n = *this * galois(3) * galois(5) * galois(7);
  return n.c_[0];
}

Cyc8 Cyc8::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc8: division by zero");
  if (is_rational()) return Cyc8(Rational(1) / c_[0]);
  const Cyc8 rest = galois(3) * galois(5) * galois(7);
  const Rational n = (*this * rest).c_[0];
  return Cyc8(Rational(1) / n) * rest;
}

std::array<Rational, 4> Cyc8::sugar_coords() const {
  return {c_[0], c_[2], (c_[1] - c_[3]) / 2, (c_[1] + c_[3]) / 2};
}

Cyc8 Cyc8::from_sugar(const Rational& one, const Rational& i, const Rational& r2,
                      const Rational& ir2) {
  return {one, r2 + ir2, i, ir2 - r2};
}

Cyc8 named_constant(std::string_view name) {
  const Cyc8 sqrt2(0, 1, 0, -1);
  const Cyc8 sqrtm2(0, 1, 0, 1);
  if (name == "i") return {0, 0, 1, 0};
  if (name == "sqrt2") return sqrt2;
  if (name == "sqrtm2") return sqrtm2;
  if (name == "inv_sqrt2") return Cyc8(Rational(1, 2)) * sqrt2;
  if (name == "inv_sqrtm2") return Cyc8(Rational(-1, 2)) * sqrtm2;
  throw std::invalid_argument("unknown named constant: " + std::string(name));
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

std::optional<Cyc8> sqrt_rational(const Rational& q) {
  const bool negative = sgn(q) < 0;
  const Rational a = negative ? Rational(-q) : q;
  std::optional<Cyc8> root;
  if (auto r = rational_sqrt(a)) {
    root = Cyc8(*r);
  } else if (auto r2 = rational_sqrt(Rational(a / 2))) {
    root = Cyc8(*r2) * named_constant("sqrt2");
  }
  if (root && negative) *root = *root * named_constant("i");
  return root;
}

// ---------------------------------------------------------------------------

Scalar::Scalar(long value) {
  if (value != 0) terms_.push_back({0, 0, Cyc8(value)});
}

Scalar::Scalar(const Rational& value) {
  if (sgn(value) != 0) terms_.push_back({0, 0, Cyc8(value)});
}

Scalar::Scalar(const Cyc8& value) {
  if (!value.is_zero()) terms_.push_back({0, 0, value});
}

Scalar Scalar::monomial(unsigned du, unsigned dv, const Cyc8& coeff) {
  Scalar s;
  if (!coeff.is_zero())
    s.terms_.push_back({static_cast<uint16_t>(du), static_cast<uint16_t>(dv), coeff});
  return s;
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].du == 0 && terms_[0].dv == 0);
}

Cyc8 Scalar::constant_term() const {
  if (!terms_.empty() && terms_[0].du == 0 && terms_[0].dv == 0) return terms_[0].coeff;
  return {};
}

void Scalar::add_term(uint16_t du, uint16_t dv, const Cyc8& c, bool negate) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{du, dv},
                             [](const ScalarTerm& t, const std::pair<uint16_t, uint16_t>& k) {
                               return std::pair{t.du, t.dv} < k;
                             });
  if (it != terms_.end() && it->du == du && it->dv == dv) {
    if (negate)
      it->coeff -= c;
    else
      it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {du, dv, negate ? -c : c});
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& t : o.terms_) add_term(t.du, t.dv, t.coeff, false);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& t : o.terms_) add_term(t.du, t.dv, t.coeff, true);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    const auto& x = a.terms_[0];
    const auto& y = b.terms_[0];
    Cyc8 c = x.coeff * y.coeff;
    if (!c.is_zero())
      r.terms_.push_back({static_cast<uint16_t>(x.du + y.du),
                          static_cast<uint16_t>(x.dv + y.dv), std::move(c)});
    return r;
  }
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      r.add_term(static_cast<uint16_t>(x.du + y.du), static_cast<uint16_t>(x.dv + y.dv),
                 x.coeff * y.coeff, false);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& x = a.terms_[k];
    const auto& y = b.terms_[k];
    if (x.du != y.du || x.dv != y.dv || !(x.coeff == y.coeff)) return false;
  }
  return true;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  return {};
}

namespace {

Cyc8 power(const Cyc8& base, unsigned e) {
  Cyc8 r(1);
  for (unsigned k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

Cyc8 specialize(const Scalar& s, const Cyc8& u0, const Cyc8& v0) {
  Cyc8 r;
  for (const auto& t : s.terms()) r += t.coeff * power(u0, t.du) * power(v0, t.dv);
  return r;
}

Scalar specialize_partial(const Scalar& s, const std::optional<Cyc8>& u0,
                          const std::optional<Cyc8>& v0) {
  Scalar r;
  for (const auto& t : s.terms()) {
    Cyc8 c = t.coeff;
    unsigned du = t.du, dv = t.dv;
    if (u0) c *= power(*u0, std::exchange(du, 0));
    if (v0) c *= power(*v0, std::exchange(dv, 0));
    r += Scalar::monomial(du, dv, c);
  }
  return r;
}

Scalar rescale_parameters(const Scalar& s, const Cyc8& a) {
  Scalar r;
  for (const auto& t : s.terms())
    r += Scalar::monomial(t.du, t.dv, t.coeff * power(a, t.du + t.dv));
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hcl
