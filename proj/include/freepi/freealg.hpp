#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "freepi/scalar.hpp"

namespace freepi {

/// 1-based variable index: x1, x2, ...
using VarIndex = std::uint32_t;

/// A nonempty word over the variables. The algebra is non-unital, so the
/// empty word is rejected at construction.
class Monomial {
 public:
  explicit Monomial(std::vector<VarIndex> word);
  Monomial(std::initializer_list<VarIndex> word) : Monomial(std::vector<VarIndex>(word)) {}

  static Monomial variable(VarIndex i) { return Monomial({i}); }

  const std::vector<VarIndex>& letters() const { return word_; }
  std::size_t length() const { return word_.size(); }
  VarIndex max_variable() const;

  /// Word concatenation.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Degree-lexicographic: shorter words first, then lexicographic by index.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<VarIndex> word_;
};

std::string to_string(const Monomial& m);

/// Per-variable occurrence counts (d1, ..., dm). Trailing zeros are
/// dropped, so (1,1) and (1,1,0) are the same multidegree.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<unsigned> counts);
  MultiDegree(std::initializer_list<unsigned> counts)
      : MultiDegree(std::vector<unsigned>(counts)) {}

  const std::vector<unsigned>& counts() const { return counts_; }
  /// Occurrences of x_i (1-based); zero past the stored range.
  unsigned count(VarIndex i) const;
  /// Number of variables up to the last one with nonzero count.
  std::size_t num_vars() const { return counts_.size(); }
  unsigned total() const;
  bool is_multilinear() const;

  friend MultiDegree operator+(const MultiDegree& a, const MultiDegree& b);
  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

 private:
  void normalize();
  std::vector<unsigned> counts_;
};

/// "(d1,d2,...)"; the empty multidegree prints as "()".
std::string to_string(const MultiDegree& d);

/// Parses "d1,d2,..." (parentheses optional).
MultiDegree parse_multidegree(const std::string& text);

/// Element of the free non-unital associative algebra over Q. Zero
/// coefficients are never stored; terms iterate in degree-lex order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Polynomial() = default;
  explicit Polynomial(const Monomial& m, const Scalar& c = 1);

  static Polynomial variable(VarIndex i) { return Polynomial(Monomial::variable(i)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  /// Adds c to the coefficient of m, pruning a resulting zero.
  void add_term(const Monomial& m, const Scalar& c);

  /// Highest variable index occurring, 0 for the zero polynomial.
  VarIndex max_variable() const;
  /// Maximum word length, 0 for the zero polynomial.
  std::size_t degree() const;
  bool is_multihomogeneous() const;

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator-(const Polynomial& f);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Scalar& c, const Polynomial& f);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Scalar& c, const Polynomial& f);
/// Bilinear extension of word concatenation.
Polynomial mul(const Polynomial& f, const Polynomial& g);

/// Image of f under x_i -> subs[i-1]. Throws MissingSubstituent when a
/// variable of f has no entry in subs.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> subs);

/// Throws std::invalid_argument if num_vars is below the largest index in m.
MultiDegree multidegree(const Monomial& m, std::size_t num_vars);
MultiDegree multidegree(const Monomial& m);

/// Multihomogeneous decomposition. The zero polynomial has no components.
std::map<MultiDegree, Polynomial> components(const Polynomial& f);

/// Sum of absolute values of the coefficients.
Scalar l1_norm(const Polynomial& f);

/// |d|! / (d1! ... dm!)
std::uint64_t multinomial(const MultiDegree& d);

/// All words with letter content d, degree-lex ordered. Requires |d| >= 1.
std::vector<Monomial> enumerate_monomials(const MultiDegree& d);

/// s_k = sum over permutations s of sgn(s) x_s(1) ... x_s(k).
Polynomial standard_polynomial(unsigned k);

/// Coefficient vector of f against a list of monomials. Terms of f outside
/// the list are ignored.
std::vector<Scalar> coefficient_vector(const Polynomial& f,
                                       std::span<const Monomial> monomials);
Polynomial from_coefficients(std::span<const Monomial> monomials,
                             std::span<const Scalar> coeffs);

}  // namespace freepi
