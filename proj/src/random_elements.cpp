#include "hcl/random_elements.hpp"

namespace hcl {

Scalar random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> kind(0, 5);
  int a = small(rng);
  if (a == 0) a = 1;
  switch (kind(rng)) {
    case 0: return Scalar(a) * Scalar::u();
    case 1: return Scalar(a) * Scalar::v();
    case 2: return Scalar(a) + Scalar::u();
    default: return Scalar(a);
  }
}

Exponents random_exponents(std::mt19937_64& rng, int n, int max_degree) {
  std::uniform_int_distribution<int> var(0, n - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Exponents e{};
  for (int d = deg(rng); d > 0; --d) ++e[var(rng)];
  return e;
}

uint32_t random_group_element(std::mt19937_64& rng, const WeylGroup& g) {
  std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(g.size() - 1));
  return pick(rng);
}

Poly random_poly(std::mt19937_64& rng, int n, const RandomShape& shape) {
  Poly f;
  for (int k = 0; k < shape.terms; ++k) {
    const Exponents alpha = random_exponents(rng, n, shape.max_degree);
    f.add(alpha, random_coefficient(rng));
  }
  return f;
}

AhcElt random_ahc(std::mt19937_64& rng, const WeylGroup& g, const RandomShape& shape) {
  std::uniform_int_distribution<CliffMask> mask(0, (CliffMask{1} << g.rank()) - 1);
  AhcElt r(g);
  for (int k = 0; k < shape.terms; ++k) {
    const Exponents alpha = random_exponents(rng, g.rank(), shape.max_degree);
    const CliffMask m = mask(rng);
    const uint32_t w = random_group_element(rng, g);
    r.add({alpha, m, w}, random_coefficient(rng));
  }
  return r;
}

IndElt random_ind(std::mt19937_64& rng, const WeylGroup& g, const RandomShape& shape) {
  std::uniform_int_distribution<CliffMask> mask(0, (CliffMask{1} << g.rank()) - 1);
  IndElt r(g);
  for (int k = 0; k < shape.terms; ++k) {
    const Exponents alpha = random_exponents(rng, g.rank(), shape.max_degree);
    const CliffMask m = mask(rng);
    r.add({alpha, m}, random_coefficient(rng));
  }
  return r;
}

SahElt random_sah(std::mt19937_64& rng, const WeylGroup& g, const RandomShape& shape) {
  SahElt r(g);
  for (int k = 0; k < shape.terms; ++k) {
    const Exponents alpha = random_exponents(rng, g.rank(), shape.max_degree);
    const uint32_t w = random_group_element(rng, g);
    r.add({alpha, w}, random_coefficient(rng));
  }
  return r;
}

TensorSpinElt random_tensor_spin(std::mt19937_64& rng, const WeylGroup& g,
                                 const RandomShape& shape) {
  std::uniform_int_distribution<CliffMask> mask(0, (CliffMask{1} << g.rank()) - 1);
  TensorSpinElt r(g);
  for (int k = 0; k < shape.terms; ++k) {
    const CliffMask m = mask(rng);
    const Exponents alpha = random_exponents(rng, g.rank(), shape.max_degree);
    const uint32_t w = random_group_element(rng, g);
    r.add({m, alpha, w}, random_coefficient(rng));
  }
  return r;
}

CoverElt random_cover(std::mt19937_64& rng, const WeylGroup& g, const RandomShape& shape) {
  std::uniform_int_distribution<int> bit(0, 1);
  CoverElt r(g);
  for (int k = 0; k < shape.terms; ++k) {
    const Exponents alpha = random_exponents(rng, g.rank(), shape.max_degree);
    const uint32_t w = random_group_element(rng, g);
    const auto z = static_cast<uint8_t>(bit(rng));
    r.add({alpha, w, z}, random_coefficient(rng));
  }
  return r;
}

namespace {

template <class E>
E random_mask_group(std::mt19937_64& rng, const WeylGroup& g, int terms) {
  std::uniform_int_distribution<CliffMask> mask(0, (CliffMask{1} << g.rank()) - 1);
  E r(g);
  for (int k = 0; k < terms; ++k) {
    const CliffMask m = mask(rng);
    r.add({m, random_group_element(rng, g)}, random_coefficient(rng));
  }
  return r;
}

}  // namespace

SemidirectElt random_semidirect(std::mt19937_64& rng, const WeylGroup& g, int terms) {
  return random_mask_group<SemidirectElt>(rng, g, terms);
}

TensorElt random_tensor_fin(std::mt19937_64& rng, const WeylGroup& g, int terms) {
  return random_mask_group<TensorElt>(rng, g, terms);
}

}  // namespace hcl
