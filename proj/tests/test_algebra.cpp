#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "freepi/algebra.hpp"
#include "freepi/random.hpp"

using namespace freepi;

namespace {

Polynomial word(std::initializer_list<VarIndex> w, Scalar c = 1) {
  return Polynomial(Monomial(w), c);
}

Element unit(const StructureAlgebra& a, const std::string& label) {
  return a.basis_element(*a.find_label(label));
}

Element random_element(Rng& rng, const StructureAlgebra& a) {
  Element e = a.zero();
  for (auto& c : e.coords) c = random_scalar(rng, 3, 2, false);
  return e;
}

std::vector<StructureAlgebra> fixtures() {
  return {full_matrix(2), upper_triangular(3), strictly_upper_triangular(3), grassmann(2),
          grassmann(3), truncated_poly(3), direct_sum(truncated_poly(2), grassmann(2))};
}

}  // namespace

TEST_CASE("fixture dimensions and labels") {
  const auto m2 = full_matrix(2);
  CHECK(m2.dim() == 4);
  CHECK(m2.labels() == std::vector<std::string>{"E11", "E12", "E21", "E22"});
  CHECK(grassmann(2).dim() == 3);
  CHECK(grassmann(2).labels() == std::vector<std::string>{"g1", "g2", "g1g2"});
  CHECK(grassmann(4).dim() == 15);
  CHECK(strictly_upper_triangular(4).dim() == 6);
  CHECK(upper_triangular(3).dim() == 6);
  CHECK(truncated_poly(3).labels() == std::vector<std::string>{"t", "t^2", "t^3"});
  CHECK(direct_sum(truncated_poly(2), full_matrix(2)).dim() == 6);
  for (const auto& a : fixtures()) CHECK_FALSE(check_associativity(a).has_value());
  CHECK_FALSE(check_associativity(grassmann(4)).has_value());
  CHECK_FALSE(check_associativity(full_matrix(3)).has_value());
}

TEST_CASE("non-associative constants are reported with the first violating triple") {
  // e1e1 = e2, e1e2 = e1, e2e1 = 0, e2e2 = 0:
  // (e1e1)e1 = e2e1 = 0 while e1(e1e1) = e1e2 = e1.
  const std::vector<StructureConstant> table{{0, 0, 1, 1}, {0, 1, 0, 1}};
  const auto v = check_associativity(2, table);
  REQUIRE(v.has_value());
  CHECK(v->i == 0);
  CHECK(v->j == 0);
  CHECK(v->k == 0);
  CHECK(v->left == Element(Vector{0, 0}));
  CHECK(v->right == Element(Vector{1, 0}));
  CHECK_THROWS_AS(StructureAlgebra({"e1", "e2"}, table), NonAssociative);
  CHECK(to_string(*v).find("(1,1,1)") == 0);
}

TEST_CASE("multiply elements") {
  const auto m2 = full_matrix(2);
  CHECK(multiply_elements(m2, unit(m2, "E12"), unit(m2, "E21")) == unit(m2, "E11"));
  CHECK(multiply_elements(m2, unit(m2, "E21"), unit(m2, "E12")) == unit(m2, "E22"));

  const auto t2 = truncated_poly(2);
  CHECK(multiply_elements(t2, unit(t2, "t"), unit(t2, "t")) == unit(t2, "t^2"));
  CHECK(multiply_elements(t2, unit(t2, "t"), unit(t2, "t^2")).is_zero());

  const auto g2 = grassmann(2);
  const Element g1 = unit(g2, "g1"), gg2 = unit(g2, "g2"), g12 = unit(g2, "g1g2");
  CHECK(multiply_elements(g2, g1, gg2) == g12);
  CHECK(multiply_elements(g2, gg2, g1) == Scalar(-1) * g12);
  CHECK(multiply_elements(g2, g1, g1).is_zero());

  CHECK_THROWS_AS(multiply_elements(g2, g1, m2.zero()), DimensionMismatch);
}

TEST_CASE("grassmann signs match sorting the concatenated generators") {
  const auto g3 = grassmann(3);
  // g2 * g1g3 = g2 g1 g3 = -g1 g2 g3
  CHECK(multiply_elements(g3, unit(g3, "g2"), unit(g3, "g1g3")) ==
        Scalar(-1) * unit(g3, "g1g2g3"));
  // g3 * g1g2 = g1g2g3 (two transpositions)
  CHECK(multiply_elements(g3, unit(g3, "g3"), unit(g3, "g1g2")) == unit(g3, "g1g2g3"));
}

TEST_CASE("evaluate") {
  const Polynomial comm = word({1, 2}) - word({2, 1});
  const auto t3 = truncated_poly(3);
  const std::vector<Element> targs{unit(t3, "t"), unit(t3, "t^2")};
  CHECK(evaluate(comm, t3, targs).is_zero());

  const auto m2 = full_matrix(2);
  const std::vector<Element> margs{unit(m2, "E12"), unit(m2, "E21")};
  CHECK(evaluate(comm, m2, margs) == unit(m2, "E11") + Scalar(-1) * unit(m2, "E22"));

  // E12 E23 = E13 and E13 E12 = 0.
  const auto n3 = strictly_upper_triangular(3);
  const std::vector<Element> nargs{unit(n3, "E12"), unit(n3, "E23"), unit(n3, "E12")};
  CHECK(evaluate(word({1, 2, 3}), n3, nargs).is_zero());
  CHECK(evaluate(word({1, 2}), n3, nargs) == unit(n3, "E13"));

  const std::vector<Element> too_few{unit(m2, "E12")};
  CHECK_THROWS_AS(evaluate(comm, m2, too_few), MissingArgument);
  const std::vector<Element> foreign{t3.zero(), t3.zero()};
  CHECK_THROWS_AS(evaluate(comm, m2, foreign), DimensionMismatch);
}

TEST_CASE("evaluation is a homomorphism and respects substitution") {
  Rng rng(3);
  RandomPolyParams p;
  p.max_vars = 3;
  p.max_terms = 3;
  p.max_degree = 2;
  for (const auto& a : fixtures()) {
    for (int t = 0; t < 20; ++t) {
      const Polynomial f = random_polynomial(rng, p), g = random_polynomial(rng, p);
      std::vector<Element> args;
      for (int i = 0; i < 3; ++i) args.push_back(random_element(rng, a));
      CHECK(evaluate(f * g, a, args) ==
            multiply_elements(a, evaluate(f, a, args), evaluate(g, a, args)));
      const std::vector<Polynomial> subs{g, f + g, random_polynomial(rng, p)};
      std::vector<Element> images;
      for (const auto& s : subs) images.push_back(evaluate(s, a, args));
      CHECK(evaluate(substitute(f, subs), a, args) == evaluate(f, a, images));
    }
  }
}

TEST_CASE("grassmann algebras satisfy [[x1,x2],x3] on every basis triple") {
  const Polynomial comm = word({1, 2}) - word({2, 1});
  const Polynomial x3 = Polynomial::variable(3);
  const Polynomial lie = comm * x3 - x3 * comm;
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto g = grassmann(k);
    bool all_zero = true;
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        for (std::size_t l = 0; l < g.dim(); ++l) {
          const std::vector<Element> args{g.basis_element(i), g.basis_element(j),
                                          g.basis_element(l)};
          all_zero = all_zero && evaluate(lie, g, args).is_zero();
        }
    CHECK(all_zero);
  }
}

TEST_CASE("generic evaluation matrix") {
  SUBCASE("truncated polynomial algebra, degree (1,1): kernel is the commutator line") {
    const Matrix m = generic_evaluation_matrix(truncated_poly(3), MultiDegree{1, 1});
    CHECK(m.cols() == 2);
    const Matrix ker = nullspace(m);
    REQUIRE(ker.cols() == 1);
    CHECK(ker(0, 0) == -ker(1, 0));
  }
  SUBCASE("full matrix algebra, degree (1,1): no identities") {
    CHECK(nullspace(generic_evaluation_matrix(full_matrix(2), MultiDegree{1, 1})).cols() == 0);
  }
  SUBCASE("degree (1): x1 is never an identity of a nonzero algebra") {
    for (const auto& a : fixtures())
      CHECK(nullspace(generic_evaluation_matrix(a, MultiDegree{1})).cols() == 0);
  }
  SUBCASE("strictly upper triangular 2x2: every product vanishes, matrix has no rows") {
    const Matrix m = generic_evaluation_matrix(strictly_upper_triangular(2), MultiDegree{1, 1});
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 2);
    CHECK(nullspace(m).cols() == 2);
  }
  SUBCASE("matrix route and direct generic evaluation agree") {
    Rng rng(17);
    const MultiDegree d{2, 1};
    const auto words = enumerate_monomials(d);
    for (const auto& a : fixtures()) {
      const Matrix m = generic_evaluation_matrix(a, d);
      for (int t = 0; t < 10; ++t) {
        Vector v(words.size());
        for (auto& x : v) x = random_scalar(rng, 2, 1, false);
        const Vector mv = m * v;
        const bool zero = std::all_of(mv.begin(), mv.end(), [](auto& x) { return x == 0; });
        CHECK(zero == generic_evaluate(from_coefficients(words, v), a).empty());
      }
    }
  }
}

TEST_CASE("algebra names") {
  CHECK(algebra_from_name("matrix:2").dim() == 4);
  CHECK(algebra_from_name("uptri:2").dim() == 3);
  CHECK(algebra_from_name("strict-uptri:3").dim() == 3);
  CHECK(algebra_from_name("grassmann:3").dim() == 7);
  CHECK(algebra_from_name("tpoly:3").dim() == 3);
  CHECK(algebra_from_name("tpoly:2+matrix:2").dim() == 6);
  CHECK(algebra_from_name("tpoly:3").name() == "tpoly:3");
  CHECK_THROWS_AS(algebra_from_name("matrix"), InvalidAlgebra);
  CHECK_THROWS_AS(algebra_from_name("matrix:0"), InvalidAlgebra);
  CHECK_THROWS_AS(algebra_from_name("quaternion:1"), InvalidAlgebra);
  CHECK_THROWS_AS(algebra_from_name("matrix:x"), InvalidAlgebra);
}

TEST_CASE("JSON algebra specs") {
  const auto m2 = full_matrix(2);
  const StructureAlgebra back = algebra_from_json(algebra_to_json(m2));
  CHECK(back.labels() == m2.labels());
  CHECK(back.dim() == m2.dim());
  CHECK(back.table().size() == m2.table().size());

  const auto half = algebra_from_json(
      R"({"dim": 2, "basis": ["a", "b"], "table": [[1, 1, 2, "1/2"]]})");
  const Element a = half.basis_element(0);
  CHECK(half.multiply(a, a) == Element(Vector{0, Scalar(1, 2)}));

  CHECK_THROWS_AS(
      algebra_from_json(R"({"dim": 2, "table": [[1, 1, 2, 1], [1, 2, 1, 1]]})"),
      NonAssociative);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "table": [[1, 1, 3, 1]]})"), InvalidAlgebra);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 0})"), InvalidAlgebra);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "basis": ["a"]})"), InvalidAlgebra);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 1, "table": [[1, 1, 1, "1/0"]]})"),
                  InvalidAlgebra);
  CHECK_THROWS_AS(algebra_from_json("not json"), InvalidAlgebra);
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/spec.json"), InvalidAlgebra);
}
