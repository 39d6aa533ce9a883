#include "freepi/random.hpp"

namespace freepi {

Scalar random_scalar(Rng& rng, int range, int max_denominator, bool nonzero) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, std::max(1, max_denominator));
  int n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  Scalar q(n, den(rng));
  q.canonicalize();
  return q;
}

Monomial random_monomial(Rng& rng, unsigned max_vars, unsigned min_len, unsigned max_len) {
  std::uniform_int_distribution<unsigned> len(std::max(1u, min_len), std::max(1u, max_len));
  std::uniform_int_distribution<VarIndex> var(1, std::max(1u, max_vars));
  std::vector<VarIndex> word(len(rng));
  for (auto& v : word) v = var(rng);
  return Monomial(std::move(word));
}

Polynomial random_polynomial(Rng& rng, const RandomPolyParams& p) {
  Polynomial f;
  if (p.max_terms == 0) return f;
  std::uniform_int_distribution<unsigned> count(1, p.max_terms);
  const unsigned target = count(rng);
  // Distinct monomials so no coefficient cancels to zero.
  for (unsigned attempts = 0; f.size() < target && attempts < 16 * target; ++attempts) {
    Monomial m = random_monomial(rng, p.max_vars, p.min_degree, p.max_degree);
    if (f.coefficient(m) != 0) continue;
    f.add_term(m, random_scalar(rng, p.coeff_range, p.max_denominator, true));
  }
  return f;
}

}  // namespace freepi
