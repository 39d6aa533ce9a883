#include <doctest.h>

#include <fstream>
#include <string>

#include "freepi/errors.hpp"
#include "freepi/polyparse.hpp"
#include "freepi/random.hpp"

using namespace freepi;

namespace {

Polynomial word(std::initializer_list<VarIndex> w, Scalar c = 1) {
  return Polynomial(Monomial(w), c);
}

std::size_t error_position(std::string_view text,
                           ZeroLiteral zero = ZeroLiteral::Accept) {
  try {
    parse(text, zero);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for '" << std::string(text) << "'");
  return 0;
}

}  // namespace

TEST_CASE("parse examples") {
  const Polynomial f = parse("2*x1*x2 - x2*x1");
  CHECK(f.size() == 2);
  CHECK(f.coefficient(Monomial({1, 2})) == 2);
  CHECK(f.coefficient(Monomial({2, 1})) == -1);
  CHECK(parse("x1^2*x2") == word({1, 1, 2}));
  CHECK(parse("-x1") == word({1}, -1));
  CHECK(parse(" 3/4 * x2 * x1 ") == word({2, 1}, Scalar(3, 4)));
  CHECK(parse("x1 - 2*x1") == word({1}, -1));
}

TEST_CASE("constants are rejected") {
  CHECK_THROWS_AS(parse("3"), ParseError);
  CHECK(error_position("3") == 0);
  CHECK(error_position("x1 + 2") == 5);
  CHECK(error_position("2 + x1") == 2);
  CHECK(error_position("0", ZeroLiteral::Reject) == 0);
  CHECK(parse("0").is_zero());
}

TEST_CASE("malformed input reports the offending position") {
  CHECK(error_position("") == 0);
  CHECK(error_position("x") == 1);
  CHECK(error_position("x0") == 1);
  CHECK(error_position("x1 +") == 4);
  CHECK(error_position("x1 x2") == 3);
  CHECK(error_position("2x1") == 1);
  CHECK(error_position("x1^0") == 3);
  CHECK(error_position("1/0*x1") == 2);
  CHECK(error_position("y1") == 0);
  CHECK(error_position("x1*(x2)") == 3);
  try {
    parse("x1 ? x2");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
    CHECK(e.found() == "'?'");
    CHECK(e.expected() == "'+', '-' or end of input");
  }
}

TEST_CASE("print examples") {
  CHECK(print(word({1, 2}) - word({2, 1})) == "x1*x2 - x2*x1");
  CHECK(print(scale(Scalar(1, 2), word({1}))) == "1/2*x1");
  CHECK(print(Polynomial{}) == "0");
  CHECK(print(word({2}, -3) + word({1, 1})) == "-3*x2 + x1*x1");
}

TEST_CASE("golden print cases are byte-stable") {
  std::ifstream in(GOLDEN_DIR "/print_cases.tsv");
  REQUIRE(in);
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    const std::string input = line.substr(0, tab), expected = line.substr(tab + 1);
    CAPTURE(input);
    CHECK(print(parse(input)) == expected);
    CHECK(print(parse(expected)) == expected);
    ++cases;
  }
  CHECK(cases >= 10);
}

TEST_CASE("round trip on random polynomials") {
  Rng rng(2024);
  RandomPolyParams p;
  p.max_vars = 12;
  p.max_terms = 8;
  p.max_degree = 5;
  p.coeff_range = 50;
  p.max_denominator = 9;
  for (int i = 0; i < 500; ++i) {
    const Polynomial f = random_polynomial(rng, p);
    const std::string text = print(f);
    CAPTURE(text);
    CHECK(parse(text) == f);
    CHECK(print(parse(text)) == text);
  }
}
