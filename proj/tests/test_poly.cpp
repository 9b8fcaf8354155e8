#include <random>

#include "doctest.h"
#include "hcl/poly.hpp"
#include "hcl/random_elements.hpp"

using namespace hcl;

namespace {

Poly x(int j) { return poly_var(j); }

}  // namespace

TEST_CASE("exact linear division") {
  const Poly f = poly_mul(x(1) - x(2), poly_mul(x(1), poly_constant(3)) + x(3));
  CHECK(divide_linear(f, 1, 2, -1) == poly_mul(x(1), poly_constant(3)) + x(3));
  CHECK(divide_linear(poly_mul(x(2) + x(1), x(2)), 2, 1, 1) == x(2));
  CHECK_THROWS_AS(divide_linear(x(1) + poly_constant(1), 1, 2, 1), std::logic_error);
  CHECK(divide_var(poly_mul(x(2), x(2)), 2) == x(2));
  CHECK_THROWS_AS(divide_var(x(1), 2), std::logic_error);
}

TEST_CASE("division round trip on random products") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    const Poly q = random_poly(rng, 3, {3, 3});
    const int sign = k % 2 ? 1 : -1;
    const Poly divisor = x(1) + poly_monomial(unit_exponent(3), Scalar(sign));
    CHECK(divide_linear(poly_mul(q, divisor), 1, 3, sign) == q);
  }
}

TEST_CASE("divided differences") {
  const WeylType a3 = type_A(3);
  CHECK(demazure(a3, 1, DemazureKind::Plain, x(1)) == poly_constant(-1));
  CHECK(demazure(a3, 1, DemazureKind::Plain, x(2)) == poly_constant(1));
  CHECK(demazure(a3, 1, DemazureKind::Plain, x(3)).is_zero());
  CHECK(demazure(a3, 1, DemazureKind::Twisted, x(1)) == poly_constant(-1));
  CHECK(demazure(a3, 1, DemazureKind::Twisted, x(2)) == poly_constant(-1));
  const WeylType b2 = type_B(2);
  CHECK(demazure(b2, 2, DemazureKind::BReflection, x(2)) == poly_constant(1));
  CHECK(demazure(b2, 2, DemazureKind::BReflection, poly_mul(x(2), x(2))).is_zero());
  const WeylType d4 = type_D(4);
  CHECK(demazure(d4, 4, DemazureKind::DPlain, x(4)) == poly_constant(1));
  CHECK(demazure(d4, 4, DemazureKind::DTwisted, x(4)) == poly_constant(-1));
  CHECK(demazure(d4, 4, DemazureKind::DTwisted, x(3)) == poly_constant(1));

  // Every kind divides exactly on random input; multiply back as oracle.
  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    const Poly f = random_poly(rng, 4, {3, 4});
    const Poly refl = poly_act(WeylElt::generator(d4, 2), f);
    const Poly q = demazure(d4, 2, DemazureKind::Plain, f);
    CHECK(poly_mul(q, x(3) - x(2)) == f - refl);
    const Poly qt = demazure(d4, 2, DemazureKind::Twisted, f);
    CHECK(poly_mul(qt, x(3) + x(2)) == poly_negate_vars(f, 0b0110) - refl);
    const Poly r4 = poly_act(WeylElt::generator(d4, 4), f);
    CHECK(poly_mul(demazure(d4, 4, DemazureKind::DPlain, f), x(4) + x(3)) == f - r4);
    CHECK(poly_mul(demazure(d4, 4, DemazureKind::DTwisted, f), x(4) - x(3)) ==
          poly_negate_vars(f, 0b1100) - r4);
  }
}

TEST_CASE("polynomial action") {
  const WeylElt s = WeylElt::generator(type_B(2), 2);
  CHECK(poly_act(s, poly_pow(x(2), 3)) == -poly_pow(x(2), 3));
  CHECK(poly_act(s, poly_mul(x(1), x(1))) == poly_mul(x(1), x(1)));
  CHECK(poly_negate_vars(x(1) + x(2), 0b01) == x(2) - x(1));
}
