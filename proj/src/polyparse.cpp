#include "freepi/polyparse.hpp"

#include <cctype>

#include "freepi/errors.hpp"

namespace freepi {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse_poly() {
    Polynomial result;
    skip_ws();
    Scalar sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    result += sign * parse_term();
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("'+', '-' or end of input");
      ++pos_;
      result += Scalar(op == '-' ? -1 : 1) * parse_term();
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    skip_ws();
    Scalar coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      mpz_class num = parse_nat();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        den = parse_nat();
        if (den == 0) throw ParseError(den_pos, "nonzero denominator", "0");
      }
      skip_ws();
      if (peek() != '*') {
        // A term made of a coefficient alone: the algebra has no unit.
        throw ParseError(at_end() ? start : pos_, "'*' and a variable after coefficient",
                         describe_here());
      }
      ++pos_;
      coeff = Scalar(num, den);
      coeff.canonicalize();
    }
    std::vector<VarIndex> word;
    parse_factor(word);
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      parse_factor(word);
    }
    return Polynomial(Monomial(std::move(word)), coeff);
  }

  void parse_factor(std::vector<VarIndex>& word) {
    skip_ws();
    if (peek() != 'x') fail("variable 'x<n>'");
    ++pos_;
    const std::size_t index_pos = pos_;
    const mpz_class index = parse_nat();
    if (index == 0 || !index.fits_uint_p())
      throw ParseError(index_pos, "variable index >= 1", index.get_str());
    const auto var = static_cast<VarIndex>(index.get_ui());
    skip_ws();
    unsigned long reps = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t exp_pos = pos_;
      const mpz_class e = parse_nat();
      if (e == 0 || !e.fits_ushort_p())
        throw ParseError(exp_pos, "exponent >= 1", e.get_str());
      reps = e.get_ui();
    }
    word.insert(word.end(), reps, var);
  }

  mpz_class parse_nat() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("natural number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string describe_here() const {
    if (at_end()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos_, expected, describe_here());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_zero_literal(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return text.substr(b, e - b) == "0";
}

}  // namespace

Polynomial parse(std::string_view text, ZeroLiteral zero) {
  if (zero == ZeroLiteral::Accept && is_zero_literal(text)) return {};
  return Parser(text).parse_poly();
}

std::string print(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const Scalar mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    out += to_string(m);
    first = false;
  }
  return out;
}

}  // namespace freepi
