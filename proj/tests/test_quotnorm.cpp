#include <doctest.h>

#include "freepi/errors.hpp"
#include "freepi/quotnorm.hpp"

using namespace freepi;

namespace {

Polynomial word(std::initializer_list<VarIndex> w, Scalar c = 1) {
  return Polynomial(Monomial(w), c);
}

const Polynomial kComm = word({1, 2}) - word({2, 1});

// tpoly:3 is commutative with A^3 != 0 = A^4. For |d| <= 3 the generic
// value of a word of multidegree d is the same nonzero product, so
// Id^(d) = {coefficient sum 0} and the l1 distance to that hyperplane is
// |coefficient sum|. For |d| >= 4 everything is an identity.
Scalar tpoly3_closed_form(const Polynomial& f) {
  Scalar total = 0;
  for (const auto& [d, fd] : components(f)) {
    if (d.total() >= 4) continue;
    Scalar sum = 0;
    for (const auto& [m, c] : fd.terms()) sum += c;
    total += abs(sum);
  }
  return total;
}

}  // namespace

TEST_CASE("component distance") {
  const auto t3 = truncated_poly(3);
  const ComponentDistance a = component_distance(word({1, 2}), t3);
  CHECK(a.distance == 1);
  CHECK(a.multidegree == MultiDegree{1, 1});
  CHECK(is_identity_exact(a.minimizer, t3));
  CHECK(l1_norm(word({1, 2}) + a.minimizer) == 1);

  const ComponentDistance b = component_distance(kComm, t3);
  CHECK(b.distance == 0);
  CHECK(b.minimizer == -kComm);

  CHECK(component_distance(word({1, 2}), strictly_upper_triangular(2)).distance == 0);

  CHECK_THROWS_AS(component_distance(word({1}) + word({1, 1}), t3), NotMultihomogeneous);
  CHECK_THROWS_AS(component_distance(word({1, 1, 1, 1, 1, 1, 1}), t3), DegreeCapExceeded);
}

TEST_CASE("quotient norm") {
  const auto t3 = truncated_poly(3);
  const QuotientNormResult r = quotient_norm(word({1, 2}) + word({1, 1}), t3);
  CHECK(r.total == 2);
  REQUIRE(r.per_component.size() == 2);
  CHECK(r.per_component[0].multidegree == MultiDegree{1, 1});
  CHECK(r.per_component[0].distance == 1);
  CHECK(r.per_component[1].multidegree == MultiDegree{2});
  CHECK(r.per_component[1].distance == 1);

  CHECK(quotient_norm(kComm + word({1, 1, 1, 1}), t3).total == 0);
  for (const auto& a : {full_matrix(2), grassmann(2), truncated_poly(3), upper_triangular(2)})
    CHECK(quotient_norm(word({1}), a).total == 1);
  CHECK(quotient_norm(Polynomial{}, t3).total == 0);
}

TEST_CASE("quotient norm on tpoly:3 matches the closed form") {
  Rng rng(77);
  RandomPolyParams p;
  p.max_vars = 3;
  p.max_terms = 6;
  p.max_degree = 4;
  p.max_denominator = 3;
  ComponentBasisCache cache(truncated_poly(3));
  for (int t = 0; t < 150; ++t) {
    const Polynomial f = random_polynomial(rng, p);
    const QuotientNormResult r = quotient_norm(f, cache);
    CAPTURE(f.size());
    CHECK(r.total == tpoly3_closed_form(f));
    CHECK(l1_norm(f + r.minimizer()) == r.total);
    CHECK(is_identity_exact(r.minimizer(), truncated_poly(3)));
    CHECK(r.total <= l1_norm(f));
  }
}

TEST_CASE("quotient norm axioms on grassmann:2") {
  const auto g2 = grassmann(2);
  ComponentBasisCache cache(g2);
  Rng rng(8);
  RandomPolyParams p;
  p.max_vars = 2;
  p.max_terms = 3;
  p.max_degree = 2;
  for (int t = 0; t < 60; ++t) {
    const Polynomial f = random_polynomial(rng, p), h = random_polynomial(rng, p);
    const Scalar c = random_scalar(rng, 4, 3, false);
    const Scalar nf = quotient_norm(f, cache).total, nh = quotient_norm(h, cache).total;
    CHECK(quotient_norm(c * f, cache).total == abs(c) * nf);
    CHECK(quotient_norm(f + h, cache).total <= nf + nh);
    CHECK(quotient_norm(f * h, cache).total <= nf * nh);
    CHECK((nf == 0) == is_identity_exact(f, g2));
    if (f.is_multihomogeneous() && !f.is_zero())
      CHECK(nf == component_distance(f, cache).distance);
  }
}

TEST_CASE("closedness probe") {
  const auto t3 = truncated_poly(3);
  const auto rows = cauchy_closedness_probe(kComm, word({1, 2}), t3, 4);
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row.quotient_norm == Scalar(1, row.n));
    CHECK(row.distance_to_limit == Scalar(1, row.n));
    // Independent LP at each n.
    const Polynomial fn = kComm + Scalar(1, row.n) * word({1, 2});
    CHECK(component_distance(fn, t3).distance == row.quotient_norm);
  }
  for (const auto& row : cauchy_closedness_probe(word({1, 1}), Polynomial{}, t3, 3)) {
    CHECK(row.distance_to_limit == 0);
    CHECK(row.quotient_norm == 1);
  }
  for (const auto& row : cauchy_closedness_probe(Polynomial{}, kComm, t3, 3))
    CHECK(row.quotient_norm == 0);
  CHECK_THROWS(cauchy_closedness_probe(kComm, kComm, t3, 0));
}
