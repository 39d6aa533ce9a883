#pragma once

#include <random>

#include "freepi/freealg.hpp"

namespace freepi {

using Rng = std::mt19937_64;

struct RandomPolyParams {
  unsigned max_vars = 3;
  unsigned max_terms = 4;
  unsigned min_degree = 1;
  unsigned max_degree = 3;
  /// Numerators are drawn from [-coeff_range, coeff_range] \ {0}.
  int coeff_range = 3;
  /// Denominators are drawn from [1, max_denominator].
  int max_denominator = 1;
};

Scalar random_scalar(Rng& rng, int range, int max_denominator, bool nonzero);
Monomial random_monomial(Rng& rng, unsigned max_vars, unsigned min_len, unsigned max_len);
/// Up to max_terms terms; may be zero only if max_terms is 0.
Polynomial random_polynomial(Rng& rng, const RandomPolyParams& params);

}  // namespace freepi
