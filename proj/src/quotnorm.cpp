#include "freepi/quotnorm.hpp"

#include <stdexcept>

#include "freepi/errors.hpp"

namespace freepi {

const IdentityComponentBasis& ComponentBasisCache::get(const MultiDegree& d) {
  auto it = bases_.find(d);
  if (it == bases_.end()) it = bases_.emplace(d, identity_component_basis(algebra_, d, cap_)).first;
  return it->second;
}

ComponentDistance component_distance(const Polynomial& fd, ComponentBasisCache& cache) {
  if (fd.is_zero()) return {};
  if (!fd.is_multihomogeneous()) throw NotMultihomogeneous();
  const MultiDegree d = multidegree(fd.terms().begin()->first);
  check_degree_cap(d, cache.cap());
  const IdentityComponentBasis& ib = cache.get(d);
  const Vector v = coefficient_vector(fd, ib.monomials);
  const L1Distance dist = l1_distance_to_subspace(v, ib.basis);
  // The LP minimizes ||v - B z||, so g = -B z.
  Vector g(ib.monomials.size());
  if (ib.dimension() > 0) {
    const Vector bz = ib.basis * dist.coefficients;
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = -bz[i];
  }
  return {d, dist.distance, from_coefficients(ib.monomials, g)};
}

ComponentDistance component_distance(const Polynomial& fd, const StructureAlgebra& a,
                                     unsigned cap) {
  ComponentBasisCache cache(a, cap);
  return component_distance(fd, cache);
}

Polynomial QuotientNormResult::minimizer() const {
  Polynomial g;
  for (const auto& c : per_component) g += c.minimizer;
  return g;
}

QuotientNormResult quotient_norm(const Polynomial& f, ComponentBasisCache& cache) {
  const auto parts = components(f);
  for (const auto& [d, fd] : parts) check_degree_cap(d, cache.cap());
  QuotientNormResult out;
  out.total = 0;
  for (const auto& [d, fd] : parts) {
    out.per_component.push_back(component_distance(fd, cache));
    out.total += out.per_component.back().distance;
  }
  return out;
}

QuotientNormResult quotient_norm(const Polynomial& f, const StructureAlgebra& a, unsigned cap) {
  ComponentBasisCache cache(a, cap);
  return quotient_norm(f, cache);
}

std::vector<ProbeRow> cauchy_closedness_probe(const Polynomial& f, const Polynomial& h,
                                              const StructureAlgebra& a, unsigned N,
                                              unsigned cap) {
  if (N == 0) throw std::invalid_argument("probe length N must be at least 1");
  ComponentBasisCache cache(a, cap);
  std::vector<ProbeRow> rows;
  for (unsigned n = 1; n <= N; ++n) {
    const Scalar step(1, n);
    const Polynomial fn = f + step * h;
    rows.push_back({n, l1_norm(fn - f), quotient_norm(fn, cache).total});
  }
  return rows;
}

}  // namespace freepi
