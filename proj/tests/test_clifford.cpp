#include <random>

#include "doctest.h"
#include "hcl/clifford.hpp"

using namespace hcl;

namespace {

// Oracle: multiply monomials as explicit generator strings and bubble-sort
// them, cancelling adjacent equal letters.
std::pair<CliffMask, int> oracle_monomial(CliffMask a, CliffMask b) {
  std::vector<int> letters;
  for (int k = 0; k < 32; ++k)
    if (a >> k & 1) letters.push_back(k);
  for (int k = 0; k < 32; ++k)
    if (b >> k & 1) letters.push_back(k);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t p = 0; p + 1 < letters.size(); ++p) {
      if (letters[p] == letters[p + 1]) {
        letters.erase(letters.begin() + p, letters.begin() + p + 2);
        changed = true;
        break;
      }
      if (letters[p] > letters[p + 1]) {
        std::swap(letters[p], letters[p + 1]);
        sign = -sign;
        changed = true;
      }
    }
  }
  CliffMask m = 0;
  for (int k : letters) m |= CliffMask{1} << k;
  return {m, sign};
}

CliffordElt random_clifford(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<CliffMask> mask(0, (CliffMask{1} << n) - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  CliffordElt e(n);
  for (int k = 0; k < 4; ++k) {
    Scalar c = coeff(rng);
    if (k == 3) c = c * Scalar::u();
    e += CliffordElt::monomial(n, mask(rng), c);
  }
  return e;
}

CliffordElt c(int n, int i) { return CliffordElt::generator(n, i); }

}  // namespace

TEST_CASE("reordering signs match the bubble-sort oracle") {
  for (CliffMask a = 0; a < 64; ++a)
    for (CliffMask b = 0; b < 64; ++b) {
      const auto [m, s] = oracle_monomial(a, b);
      CHECK(m == (a ^ b));
      CHECK(s == clifford_reorder_sign(a, b));
    }
}

TEST_CASE("cliff_mul examples") {
  CHECK(c(3, 1) * c(3, 1) == CliffordElt(3, 1));
  CHECK(c(3, 2) * c(3, 1) == -(CliffordElt::monomial(3, 0b11)));
  CHECK(CliffordElt::monomial(3, 0b11) * c(3, 2) == c(3, 1));
  CHECK_THROWS_AS(c(2, 1) * c(3, 1), std::invalid_argument);
}

TEST_CASE("cliff_mul is associative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> rank(1, 6);
  for (int k = 0; k < 500; ++k) {
    const int n = rank(rng);
    const CliffordElt a = random_clifford(rng, n), b = random_clifford(rng, n),
                      d = random_clifford(rng, n);
    CHECK((a * b) * d == a * (b * d));
  }
}

TEST_CASE("beta table entries") {
  const Cyc8 r = named_constant("inv_sqrt2");
  CHECK(beta(type_B(3), 3) == c(3, 3));
  CHECK(beta(type_D(4), 4) == Scalar(r) * (c(4, 3) + c(4, 4)));
  CHECK(beta(type_A(3), 1) == Scalar(r) * (c(3, 1) - c(3, 2)));
  CHECK(beta(type_A(3), 1) * beta(type_A(3), 1) == CliffordElt(3, 1));
  CHECK_THROWS_AS(beta(type_A(3), 3), std::out_of_range);
  CHECK_THROWS_AS(beta(type_G2(), 2), std::domain_error);
  CHECK_NOTHROW(beta(type_G2(), 1));
  CHECK(beta(type_F4(), 4) * beta(type_F4(), 4) == CliffordElt(4, 1));
}

TEST_CASE("beta braid relations") {
  for (const WeylType& t : {type_A(2), type_A(3), type_A(4), type_B(2), type_B(3), type_B(4),
                            type_D(4), type_F4(), type_G2()}) {
    const int n = clifford_rank(t);
    for (int i = 1; i <= t.generators(); ++i)
      for (int j = 1; j <= t.generators(); ++j) {
        const int m = coxeter_order(t, i, j);
        const int expected = m % 2 == 1 ? 1 : -1;
        CHECK(beta_braid_power(t, i, j) == CliffordElt(n, expected));
      }
  }
  // Where the betas exist as exact elements, the direct power agrees.
  const WeylType b3 = type_B(3);
  CHECK(power(beta(b3, 2) * beta(b3, 3), 4) == CliffordElt(3, -1));
}

TEST_CASE("Weyl action on Clifford generators") {
  const WeylElt s1 = WeylElt::generator(type_A(3), 1);
  CHECK(weyl_act_clifford(s1, c(3, 1)) == c(3, 2));
  CHECK(weyl_act_clifford(WeylElt::generator(type_B(3), 3), c(3, 3)) == -c(3, 3));
  CHECK(weyl_act_clifford(WeylElt::generator(type_D(4), 4), c(4, 4)) == -c(4, 3));
  CHECK(weyl_act_clifford(WeylElt::generator(type_D(4), 4), c(4, 3)) == -c(4, 4));
}

TEST_CASE("Weyl action is by automorphisms") {
  std::mt19937_64 rng(19);
  for (const WeylType& t : {type_A(3), type_B(3), type_D(4)}) {
    const WeylGroup& g = WeylGroup::get(t);
    std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(g.size() - 1));
    for (int k = 0; k < 100; ++k) {
      const WeylElt w = g.element(pick(rng));
      const CliffordElt a = random_clifford(rng, t.n), b = random_clifford(rng, t.n);
      CHECK(weyl_act_clifford(w, a * b) == weyl_act_clifford(w, a) * weyl_act_clifford(w, b));
    }
  }
}
