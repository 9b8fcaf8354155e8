#pragma once

// Seeded random elements for the property suites.

#include <random>

#include "hcl/affine_hc.hpp"
#include "hcl/covering.hpp"

namespace hcl {

struct RandomShape {
  int terms = 2;
  int max_degree = 2;
};

Scalar random_coefficient(std::mt19937_64& rng);
Exponents random_exponents(std::mt19937_64& rng, int n, int max_degree);
uint32_t random_group_element(std::mt19937_64& rng, const WeylGroup& g);
Poly random_poly(std::mt19937_64& rng, int n, const RandomShape& shape);

AhcElt random_ahc(std::mt19937_64& rng, const WeylGroup& g, const RandomShape& shape = {});
IndElt random_ind(std::mt19937_64& rng, const WeylGroup& g, const RandomShape& shape = {});
SahElt random_sah(std::mt19937_64& rng, const WeylGroup& g, const RandomShape& shape = {});
TensorSpinElt random_tensor_spin(std::mt19937_64& rng, const WeylGroup& g,
                                 const RandomShape& shape = {});
CoverElt random_cover(std::mt19937_64& rng, const WeylGroup& g, const RandomShape& shape = {});
SemidirectElt random_semidirect(std::mt19937_64& rng, const WeylGroup& g, int terms = 2);
TensorElt random_tensor_fin(std::mt19937_64& rng, const WeylGroup& g, int terms = 2);

}  // namespace hcl
