#pragma once

#include <map>
#include <vector>

#include "freepi/algebra.hpp"
#include "freepi/freealg.hpp"
#include "freepi/ident.hpp"

namespace freepi {

/// Memoizes identity_component_basis for one algebra (held by value).
/// Not thread-safe.
class ComponentBasisCache {
 public:
  explicit ComponentBasisCache(StructureAlgebra a, unsigned cap = kDefaultDegreeCap)
      : algebra_(std::move(a)), cap_(cap) {}

  const IdentityComponentBasis& get(const MultiDegree& d);
  const StructureAlgebra& algebra() const { return algebra_; }
  unsigned cap() const { return cap_; }

 private:
  StructureAlgebra algebra_;
  unsigned cap_;
  std::map<MultiDegree, IdentityComponentBasis> bases_;
};

struct ComponentDistance {
  MultiDegree multidegree;
  Scalar distance;
  /// g in Id(A)^(d) with ||f_d + g||_1 == distance.
  Polynomial minimizer;
};

/// min over g in Id(A)^(d) of ||f_d + g||_1, attained by the returned
/// minimizer. Throws NotMultihomogeneous or DegreeCapExceeded.
ComponentDistance component_distance(const Polynomial& fd, const StructureAlgebra& a,
                                     unsigned cap = kDefaultDegreeCap);
ComponentDistance component_distance(const Polynomial& fd, ComponentBasisCache& cache);

struct QuotientNormResult {
  Scalar total;
  std::vector<ComponentDistance> per_component;  // multidegree order

  /// Sum of the component minimizers; an element of Id(A).
  Polynomial minimizer() const;
};

/// ||f + Id(A)|| for the l1 norm, as the sum of per-component distances.
QuotientNormResult quotient_norm(const Polynomial& f, const StructureAlgebra& a,
                                 unsigned cap = kDefaultDegreeCap);
QuotientNormResult quotient_norm(const Polynomial& f, ComponentBasisCache& cache);

struct ProbeRow {
  unsigned n = 0;
  Scalar distance_to_limit;  // ||f_n - f||_1
  Scalar quotient_norm;      // ||f_n + Id(A)||
};

/// Table for f_n = f + (1/n) h, n = 1..N.
std::vector<ProbeRow> cauchy_closedness_probe(const Polynomial& f, const Polynomial& h,
                                              const StructureAlgebra& a, unsigned N,
                                              unsigned cap = kDefaultDegreeCap);

}  // namespace freepi
