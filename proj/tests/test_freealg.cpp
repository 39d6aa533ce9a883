#include <doctest.h>

#include <set>

#include "freepi/errors.hpp"
#include "freepi/freealg.hpp"
#include "freepi/random.hpp"

using namespace freepi;

namespace {

Polynomial x(VarIndex i) { return Polynomial::variable(i); }
Polynomial word(std::initializer_list<VarIndex> w) { return Polynomial(Monomial(w)); }

}  // namespace

TEST_CASE("monomials reject the empty word and index 0") {
  CHECK_THROWS_AS(Monomial(std::vector<VarIndex>{}), std::invalid_argument);
  CHECK_THROWS_AS(Monomial({1, 0}), std::invalid_argument);
}

TEST_CASE("deg-lex order on monomials") {
  CHECK(Monomial({2}) < Monomial({1, 1}));
  CHECK(Monomial({1, 2}) < Monomial({2, 1}));
  CHECK(Monomial({1, 2, 3}) > Monomial({3, 3}));
}

TEST_CASE("add") {
  CHECK((word({1, 2}) + -word({1, 2})).is_zero());
  CHECK(add(Scalar(2) * x(1), Scalar(3) * x(1)) == Scalar(5) * x(1));
  const Polynomial s = word({1, 2}) + word({2, 1});
  CHECK(s.size() == 2);
  CHECK(s.coefficient(Monomial({1, 2})) == 1);
  CHECK(s.coefficient(Monomial({2, 1})) == 1);
}

TEST_CASE("scale") {
  CHECK(scale(0, word({1, 2}) - word({2, 1})).is_zero());
  CHECK(scale(-1, x(1)).coefficient(Monomial({1})) == -1);
  CHECK(scale(Scalar(1, 2), Scalar(2) * word({1, 2})) == word({1, 2}));
}

TEST_CASE("mul is bilinear, associative and noncommutative") {
  CHECK(mul(x(1), x(2)) == word({1, 2}));
  CHECK(mul(x(2), x(1)) == word({2, 1}));
  CHECK(mul(x(1), x(2)) != mul(x(2), x(1)));
  CHECK(mul(x(1) + x(2), x(1) - x(2)) ==
        word({1, 1}) - word({1, 2}) + word({2, 1}) - word({2, 2}));
  CHECK(mul(mul(x(1), x(2)), x(3)) == word({1, 2, 3}));
  CHECK(mul(x(1), mul(x(2), x(3))) == word({1, 2, 3}));
}

TEST_CASE("substitute") {
  const Polynomial comm = word({1, 2}) - word({2, 1});
  const std::vector<Polynomial> same{x(1), x(1)};
  CHECK(substitute(comm, same).is_zero());

  const std::vector<Polynomial> one{word({2, 3})};
  CHECK(substitute(x(1), one) == word({2, 3}));

  const std::vector<Polynomial> lin{x(1) + x(2), x(3)};
  CHECK(substitute(word({1, 2}), lin) == word({1, 3}) + word({2, 3}));

  const std::vector<Polynomial> pair{word({3, 4}), x(2)};
  CHECK(substitute(comm, pair) == word({3, 4, 2}) - word({2, 3, 4}));

  const std::vector<Polynomial> short_subs{x(1)};
  CHECK_THROWS_AS(substitute(comm, short_subs), MissingSubstituent);
}

TEST_CASE("multidegree") {
  CHECK(multidegree(Monomial({1, 2, 1}), 2) == MultiDegree{2, 1});
  CHECK(multidegree(Monomial({3}), 3) == MultiDegree{0, 0, 1});
  CHECK(multidegree(Monomial({2, 2, 2}), 2) == MultiDegree{0, 3});
  CHECK_THROWS_AS(multidegree(Monomial({3}), 2), std::invalid_argument);
  // Trailing zeros are normalized away.
  CHECK(MultiDegree{1, 1, 0, 0} == MultiDegree{1, 1});
  CHECK(to_string(MultiDegree{1, 1, 0}) == "(1,1)");
  CHECK(parse_multidegree("2,0,1") == MultiDegree{2, 0, 1});
  CHECK(parse_multidegree("(1,1)") == MultiDegree{1, 1});
  CHECK_THROWS(parse_multidegree("1,a"));
}

TEST_CASE("components") {
  const Polynomial f = x(1) + word({1, 2}) + word({2, 1}) + word({1, 1});
  const auto parts = components(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts.at(MultiDegree{1}) == x(1));
  CHECK(parts.at(MultiDegree{1, 1}) == word({1, 2}) + word({2, 1}));
  CHECK(parts.at(MultiDegree{2}) == word({1, 1}));

  const Polynomial comm = word({1, 2}) - word({2, 1});
  const auto single = components(comm);
  REQUIRE(single.size() == 1);
  CHECK(single.at(MultiDegree{1, 1}) == comm);

  CHECK(components(Polynomial{}).empty());
}

TEST_CASE("l1 norm") {
  CHECK(l1_norm(Scalar(2) * word({1, 2}) - word({2, 1})) == 3);
  CHECK(l1_norm(Polynomial{}) == 0);
  const Polynomial p = mul(x(1) + x(2), x(1) - x(2));
  CHECK(l1_norm(p) == 4);
  CHECK(l1_norm(p) <= l1_norm(x(1) + x(2)) * l1_norm(x(1) - x(2)));
}

TEST_CASE("enumerate_monomials matches brute force over all words") {
  // Oracle: every word of length |d| over the variables, filtered by content.
  auto brute = [](const MultiDegree& d) {
    std::vector<Monomial> out;
    const unsigned len = d.total();
    const auto m = static_cast<VarIndex>(d.num_vars());
    std::vector<VarIndex> w(len, 1);
    for (;;) {
      const Monomial mono(w);
      if (multidegree(mono, m) == d) out.push_back(mono);
      std::size_t p = len;
      while (p > 0 && w[p - 1] == m) w[--p] = 1;
      if (p == 0) break;
      ++w[p - 1];
    }
    return out;  // already lexicographic
  };
  const std::vector<Monomial> two = enumerate_monomials(MultiDegree{1, 1});
  CHECK(two == std::vector<Monomial>{Monomial({1, 2}), Monomial({2, 1})});
  CHECK(enumerate_monomials(MultiDegree{2, 0}) == std::vector<Monomial>{Monomial({1, 1})});
  const auto six = enumerate_monomials(MultiDegree{1, 1, 1});
  CHECK(six.size() == 6);
  CHECK(six.front() == Monomial({1, 2, 3}));
  CHECK(six.back() == Monomial({3, 2, 1}));
  for (const MultiDegree& d : {MultiDegree{1, 1, 1}, MultiDegree{2, 1}, MultiDegree{0, 2, 2},
                               MultiDegree{3, 1, 1}, MultiDegree{1, 2, 1}}) {
    CAPTURE(to_string(d));
    const auto got = enumerate_monomials(d);
    CHECK(got == brute(d));
    CHECK(got.size() == multinomial(d));
  }
  CHECK_THROWS(enumerate_monomials(MultiDegree{}));
}

TEST_CASE("standard polynomial") {
  CHECK(standard_polynomial(2) == word({1, 2}) - word({2, 1}));
  CHECK(standard_polynomial(3).size() == 6);
  CHECK(l1_norm(standard_polynomial(3)) == 6);
  CHECK(standard_polynomial(4).size() == 24);
  const auto parts = components(standard_polynomial(4));
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first == MultiDegree{1, 1, 1, 1});
  CHECK(standard_polynomial(3).coefficient(Monomial({2, 1, 3})) == -1);
  CHECK(standard_polynomial(3).coefficient(Monomial({2, 3, 1})) == 1);
}

TEST_CASE("ring and norm properties on random polynomials") {
  Rng rng(7);
  RandomPolyParams p;
  p.max_vars = 4;
  p.max_terms = 6;
  p.max_degree = 3;
  p.max_denominator = 3;
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial f = random_polynomial(rng, p), g = random_polynomial(rng, p),
                     h = random_polynomial(rng, p);
    const Scalar c = random_scalar(rng, 5, 4, false);

    // Decomposition identity and exact MN equality.
    Polynomial rebuilt;
    Scalar norm_sum = 0;
    std::set<Monomial> seen;
    for (const auto& [d, fd] : components(f)) {
      CHECK(fd.is_multihomogeneous());
      for (const auto& [m, coeff] : fd.terms()) {
        CHECK(multidegree(m) == d);
        CHECK(seen.insert(m).second);
      }
      rebuilt += fd;
      norm_sum += l1_norm(fd);
    }
    CHECK(rebuilt == f);
    CHECK(norm_sum == l1_norm(f));

    CHECK(l1_norm(f * g) <= l1_norm(f) * l1_norm(g));
    CHECK(l1_norm(f + g) <= l1_norm(f) + l1_norm(g));
    CHECK(l1_norm(c * f) == abs(c) * l1_norm(f));
    CHECK((l1_norm(f) == 0) == f.is_zero());
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);

    RandomPolyParams sp;
    sp.max_vars = 3;
    sp.max_terms = 2;
    sp.max_degree = 2;
    const std::vector<Polynomial> subs{random_polynomial(rng, sp), random_polynomial(rng, sp),
                                       random_polynomial(rng, sp), random_polynomial(rng, sp)};
    CHECK(substitute(f * g, subs) == substitute(f, subs) * substitute(g, subs));
  }
}

TEST_CASE("grading is additive and monomial products keep the norm") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Monomial a = random_monomial(rng, 3, 1, 3), b = random_monomial(rng, 3, 1, 3);
    const Scalar ca = random_scalar(rng, 4, 3, true), cb = random_scalar(rng, 4, 3, true);
    const Polynomial f(a, ca), g(b, cb);
    CHECK(l1_norm(f * g) == l1_norm(f) * l1_norm(g));
    const auto parts = components(f * g);
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first == multidegree(a) + multidegree(b));
  }
}
