#pragma once

// Commutative polynomials in x_1..x_n over Scalar, the Weyl group action on
// them, and the exact divided differences used by straightening.

#include "hcl/linear.hpp"
#include "hcl/weyl.hpp"

namespace hcl {

using Poly = LinComb<Exponents>;

int degree(const Exponents& alpha);
Exponents unit_exponent(int j);
Exponents add_exponents(const Exponents& a, const Exponents& b);

Poly poly_constant(const Scalar& c);
Poly poly_monomial(const Exponents& alpha, const Scalar& c = Scalar(1));
Poly poly_var(int j);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int e);

/// f^w: each x_j replaced by sign(w(j)) x_|w(j)|.
Poly poly_act(const WeylElt& w, const Poly& f);
/// x_j -> -x_j for every j whose bit j-1 is set.
Poly poly_negate_vars(const Poly& f, uint32_t vars);

/// f / (x_a + sign x_b). Throws std::logic_error unless the division is exact.
Poly divide_linear(const Poly& f, int a, int b, int sign);
/// f / x_a, exact or std::logic_error.
Poly divide_var(const Poly& f, int a);

enum class DemazureKind {
  /// (f - f^{s_i}) / (x_{i+1} - x_i), i < n.
  Plain,
  /// (f^nu - f^{s_i}) / (x_{i+1} + x_i), nu negating x_i and x_{i+1}.
  Twisted,
  /// (f - f^{s_n}) / (x_n + x_{n-1}), type D.
  DPlain,
  /// (f^nu - f^{s_n}) / (x_n - x_{n-1}), nu negating x_{n-1} and x_n, type D.
  DTwisted,
  /// (f - f^{s_n}) / (2 x_n), type B.
  BReflection,
};

Poly demazure(const WeylType& t, int i, DemazureKind kind, const Poly& f);

}  // namespace hcl
