#pragma once

// Exact coefficients: the cyclotomic field Q(zeta_8) and the polynomial
// ring Q(zeta_8)[u, v] over it.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcl {

using Rational = mpq_class;

/// a0 + a1*z + a2*z^2 + a3*z^3 where z is a primitive 8th root of unity,
/// reduced modulo z^4 + 1.
class Cyc8 {
 public:
  Cyc8() = default;
  Cyc8(long value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT(implicit)
  explicit Cyc8(const Rational& value) : c_{value, 0, 0, 0} { c_[0].canonicalize(); }
  Cyc8(Rational a0, Rational a1, Rational a2, Rational a3);

  static Cyc8 zeta() { return {0, 1, 0, 0}; }

  const Rational& operator[](int k) const { return c_[k]; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_one() const;

  Cyc8& operator+=(const Cyc8& o);
  Cyc8& operator-=(const Cyc8& o);
  Cyc8& operator*=(const Cyc8& o);
  Cyc8 operator-() const;

  friend Cyc8 operator+(Cyc8 a, const Cyc8& b) { return a += b; }
  friend Cyc8 operator-(Cyc8 a, const Cyc8& b) { return a -= b; }
  friend Cyc8 operator*(const Cyc8& a, const Cyc8& b);
  friend Cyc8 operator/(const Cyc8& a, const Cyc8& b) { return a * b.inverse(); }
  friend bool operator==(const Cyc8& a, const Cyc8& b) { return a.c_ == b.c_; }

  /// Image under the Galois automorphism z -> z^k (k odd).
  Cyc8 galois(int k) const;
  /// Field norm down to Q; nonzero iff the element is nonzero.
  Rational norm() const;
  /// Throws std::domain_error on zero.
  Cyc8 inverse() const;

  /// Coordinates in the basis {1, i, r2, i*r2} with i = z^2, r2 = sqrt(2).
  std::array<Rational, 4> sugar_coords() const;
  static Cyc8 from_sugar(const Rational& one, const Rational& i,
                         const Rational& r2, const Rational& ir2);

 private:
  std::array<Rational, 4> c_{};
};

Cyc8 cyc8_mul(const Cyc8& a, const Cyc8& b);

/// One of i, sqrt2, sqrtm2, inv_sqrt2, inv_sqrtm2. Throws
/// std::invalid_argument for anything else.
Cyc8 named_constant(std::string_view name);

/// sqrt(q) when it lies in Q(zeta_8), i.e. when +-q or +-q/2 is a rational square.
std::optional<Cyc8> sqrt_rational(const Rational& q);

struct ScalarTerm {
  uint16_t du = 0;
  uint16_t dv = 0;
  Cyc8 coeff;
};

/// Element of Q(zeta_8)[u, v]. Terms are kept sorted by (du, dv) with no
/// zero coefficients, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);            // NOLINT(implicit)
  Scalar(const Rational& value);  // NOLINT(implicit)
  Scalar(const Cyc8& value);      // NOLINT(implicit)

  static Scalar u() { return monomial(1, 0, 1); }
  static Scalar v() { return monomial(0, 1, 1); }
  static Scalar monomial(unsigned du, unsigned dv, const Cyc8& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The u^0 v^0 coefficient.
  Cyc8 constant_term() const;
  const std::vector<ScalarTerm>& terms() const { return terms_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void add_term(uint16_t du, uint16_t dv, const Cyc8& c, bool negate);
  std::vector<ScalarTerm> terms_;
};

enum class ArithOp { Add, Sub, Mul };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Evaluates at u = u0, v = v0.
Cyc8 specialize(const Scalar& s, const Cyc8& u0, const Cyc8& v0);
/// Substitutes only the parameters that are given.
Scalar specialize_partial(const Scalar& s, const std::optional<Cyc8>& u0,
                          const std::optional<Cyc8>& v0);
/// u -> a*u, v -> a*v.
Scalar rescale_parameters(const Scalar& s, const Cyc8& a);

std::string to_string(const Rational& q);

}  // namespace hcl
