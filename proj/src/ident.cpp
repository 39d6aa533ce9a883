#include "freepi/ident.hpp"

#include <stdexcept>

#include "freepi/errors.hpp"

namespace freepi {

void check_degree_cap(const MultiDegree& d, unsigned cap) {
  if (d.total() > cap) throw DegreeCapExceeded(d.total(), cap);
}

namespace {

std::optional<Witness> random_search(const Polynomial& f, const StructureAlgebra& a,
                                     unsigned trials, Rng& rng, int range) {
  const std::size_t vars = f.max_variable();
  std::uniform_int_distribution<int> coord(-range, range);
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<Element> args(vars, a.zero());
    for (auto& x : args)
      for (auto& c : x.coords) c = coord(rng);
    Element value = evaluate(f, a, args);
    if (!value.is_zero()) return Witness{std::move(args), std::move(value)};
  }
  return std::nullopt;
}

}  // namespace

RandomizedVerdict is_identity_randomized(const Polynomial& f, const StructureAlgebra& a,
                                         unsigned trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("randomized identity test needs trials >= 1");
  if (f.is_zero()) return {};
  Rng rng(seed);
  return {random_search(f, a, trials, rng, 3)};
}

std::vector<MultiDegree> failing_components(const Polynomial& f, const StructureAlgebra& a,
                                            unsigned cap) {
  const auto parts = components(f);
  for (const auto& [d, fd] : parts) check_degree_cap(d, cap);
  std::vector<MultiDegree> failing;
  for (const auto& [d, fd] : parts)
    if (!generic_evaluate(fd, a).empty()) failing.push_back(d);
  return failing;
}

bool is_identity_exact(const Polynomial& f, const StructureAlgebra& a, unsigned cap) {
  const auto parts = components(f);
  for (const auto& [d, fd] : parts) check_degree_cap(d, cap);
  for (const auto& [d, fd] : parts)
    if (!generic_evaluate(fd, a).empty()) return false;
  return true;
}

Polynomial IdentityComponentBasis::polynomial(std::size_t column) const {
  const Vector v = basis.column(column);
  return from_coefficients(monomials, v);
}

std::vector<Polynomial> IdentityComponentBasis::polynomials() const {
  std::vector<Polynomial> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) out.push_back(polynomial(c));
  return out;
}

IdentityComponentBasis identity_component_basis(const StructureAlgebra& a, const MultiDegree& d,
                                                unsigned cap) {
  if (d.total() == 0) throw std::invalid_argument("multidegree must have |d| >= 1");
  check_degree_cap(d, cap);
  IdentityComponentBasis out;
  out.multidegree = d;
  out.monomials = enumerate_monomials(d);
  out.basis = nullspace(generic_evaluation_matrix(a, d));
  return out;
}

Polynomial product_monomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("product monomial needs n >= 1");
  std::vector<VarIndex> word(n);
  for (unsigned i = 0; i < n; ++i) word[i] = i + 1;
  return Polynomial(Monomial(std::move(word)));
}

NilpotencyReport nilpotency_index(const StructureAlgebra& a, unsigned bound) {
  if (bound == 0) throw std::invalid_argument("nilpotency bound must be at least 1");
  const std::size_t n = a.dim();
  // power holds a basis of A^k, which is spanned by the k-fold products of
  // basis elements.
  RowReducer power(n);
  for (std::size_t i = 0; i < n; ++i) power.add(a.basis_element(i).coords);
  for (unsigned k = 1; k <= bound; ++k) {
    if (power.rank() == 0) return {k, bound};
    RowReducer next(n);
    for (const auto& row : power.rows()) {
      const Element v(row);
      for (std::size_t j = 0; j < n && next.rank() < n; ++j)
        next.add(a.multiply_basis_right(v, j).coords);
    }
    power = std::move(next);
  }
  return {std::nullopt, bound};
}

Polynomial t_ideal_sample(std::span<const Polynomial> generators, Rng& rng,
                          const TIdealSampleParams& p) {
  if (generators.empty()) throw std::invalid_argument("t_ideal_sample needs generators");
  std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
  std::bernoulli_distribution coin(0.5);
  Polynomial total;
  for (unsigned s = 0; s < p.summands; ++s) {
    const Polynomial& f = generators[pick(rng)];
    if (f.is_zero()) continue;
    const auto fdeg = static_cast<unsigned>(f.degree());
    if (fdeg > p.max_total_degree)
      throw std::invalid_argument("generator degree exceeds max_total_degree");

    std::optional<Monomial> left, right;
    unsigned budget = p.max_total_degree - fdeg;
    // u and v take part of the slack, then substitutions use the rest.
    if (p.outer_max_degree > 0 && budget > 0 && coin(rng)) {
      const unsigned len = std::min(p.outer_max_degree, budget);
      left = random_monomial(rng, p.num_vars, 1, len);
      budget -= static_cast<unsigned>(left->length());
    }
    if (p.outer_max_degree > 0 && budget > 0 && coin(rng)) {
      const unsigned len = std::min(p.outer_max_degree, budget);
      right = random_monomial(rng, p.num_vars, 1, len);
      budget -= static_cast<unsigned>(right->length());
    }
    // Substitutions of degree <= g keep f(g...) within fdeg * g.
    const unsigned room = (fdeg + budget) / fdeg;
    RandomPolyParams gp;
    gp.max_vars = p.num_vars;
    gp.max_terms = std::max(1u, p.subst_max_terms);
    gp.max_degree = std::max(1u, std::min(p.subst_max_degree, room));
    std::vector<Polynomial> subs;
    for (VarIndex v = 0; v < f.max_variable(); ++v) subs.push_back(random_polynomial(rng, gp));

    Polynomial piece = substitute(f, subs);
    if (left) piece = Polynomial(*left) * piece;
    if (right) piece = piece * Polynomial(*right);
    total += random_scalar(rng, 3, 1, true) * piece;
  }
  return total;
}

Polynomial t_ideal_sample(std::span<const Polynomial> generators, std::uint64_t seed,
                          const TIdealSampleParams& params) {
  Rng rng(seed);
  return t_ideal_sample(generators, rng, params);
}

std::optional<Witness> find_witness(const Polynomial& f, const StructureAlgebra& a,
                                    std::uint64_t seed, unsigned trials) {
  if (f.is_zero()) return std::nullopt;
  Rng rng(seed);
  if (auto w = random_search(f, a, trials, rng, 3)) return w;
  if (auto w = random_search(f, a, trials, rng, 1000)) return w;
  return std::nullopt;
}

}  // namespace freepi
