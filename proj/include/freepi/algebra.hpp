#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freepi/errors.hpp"
#include "freepi/exactla.hpp"
#include "freepi/freealg.hpp"
#include "freepi/scalar.hpp"

namespace freepi {

/// e_i * e_j contributes c * e_k. Basis indices are 0-based here; the JSON
/// spec format is 1-based.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar c;
};

/// Coordinates of an algebra element in the basis of its algebra.
struct Element {
  Vector coords;

  Element() = default;
  explicit Element(std::size_t dim) : coords(dim) {}
  explicit Element(Vector c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const;

  Element& operator+=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator*(const Scalar& c, Element a);
  friend bool operator==(const Element&, const Element&) = default;
};

struct AssociativityViolation {
  std::size_t i, j, k;  // 0-based
  Element left;         // (e_i e_j) e_k
  Element right;        // e_i (e_j e_k)
};

/// "(i,j,k)" in 1-based indices plus both products.
std::string to_string(const AssociativityViolation& v);

class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

class NonAssociative : public InvalidAlgebra {
 public:
  explicit NonAssociative(AssociativityViolation v)
      : InvalidAlgebra("structure constants are not associative: " + to_string(v)),
        violation_(std::move(v)) {}
  const AssociativityViolation& violation() const { return violation_; }

 private:
  AssociativityViolation violation_;
};

/// Exhaustive check over all dim^3 basis triples, in lexicographic (i,j,k)
/// order; returns the first violation. Throws InvalidAlgebra on an index
/// out of range.
std::optional<AssociativityViolation> check_associativity(
    std::size_t dim, std::span<const StructureConstant> table);

/// Finite-dimensional associative, possibly non-unital algebra over Q
/// given by structure constants. Construction rejects non-associative
/// tables, so every instance is associative.
class StructureAlgebra {
 public:
  StructureAlgebra(std::vector<std::string> labels, std::vector<StructureConstant> table);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Canonical table: sorted by (i,j,k), duplicates merged, zeros dropped.
  const std::vector<StructureConstant>& table() const { return table_; }

  /// Nonzero (k, c) terms of e_i * e_j.
  const std::vector<std::pair<std::size_t, Scalar>>& basis_product(std::size_t i,
                                                                   std::size_t j) const {
    return products_[i * dim() + j];
  }

  Element zero() const { return Element(dim()); }
  Element basis_element(std::size_t i) const;
  /// Index of a basis label, if present.
  std::optional<std::size_t> find_label(const std::string& label) const;

  Element multiply(const Element& a, const Element& b) const;
  /// a * e_j
  Element multiply_basis_right(const Element& a, std::size_t j) const;

  /// Human-readable name, e.g. "matrix:2"; empty for ad-hoc tables.
  const std::string& name() const { return name_; }
  StructureAlgebra& set_name(std::string n) {
    name_ = std::move(n);
    return *this;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<StructureConstant> table_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> products_;
  std::string name_;
};

std::optional<AssociativityViolation> check_associativity(const StructureAlgebra& a);

/// Throws DimensionMismatch when an operand is not from A.
Element multiply_elements(const StructureAlgebra& a, const Element& x, const Element& y);

/// f(args[0], args[1], ...). Throws MissingArgument when a variable of f
/// has no argument and DimensionMismatch for foreign elements.
Element evaluate(const Polynomial& f, const StructureAlgebra& a, std::span<const Element> args);

std::string format_element(const StructureAlgebra& a, const Element& x);

// Fixture algebras.
StructureAlgebra full_matrix(std::size_t n);
StructureAlgebra upper_triangular(std::size_t n);
StructureAlgebra strictly_upper_triangular(std::size_t n);
/// Exterior algebra on k generators without the scalar 1: dim 2^k - 1.
StructureAlgebra grassmann(std::size_t k);
/// t F[t] / (t^(n+1)), basis t, t^2, ..., t^n.
StructureAlgebra truncated_poly(std::size_t n);
StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b);

/// Built-in names: matrix:n, uptri:n, strict-uptri:n, grassmann:k,
/// tpoly:n, and "X+Y" for a direct sum. Throws InvalidAlgebra otherwise.
StructureAlgebra algebra_from_name(const std::string& name);

/// JSON spec text: {"dim": n, "basis": [names], "table": [[i,j,k,"num/den"], ...]}
/// with 1-based indices. Throws InvalidAlgebra (or NonAssociative).
StructureAlgebra algebra_from_json(const std::string& json_text);
StructureAlgebra load_algebra_file(const std::string& path);
std::string algebra_to_json(const StructureAlgebra& a);

// ---------------------------------------------------------------------------
// Generic evaluation
//
// Each variable x_i is sent to the generic element a_i = sum_j t_{i,j} e_j
// with commuting indeterminates t_{i,j}. The image of a word is then a
// polynomial in the t's with coefficients in A.

/// Exponent vector of a commutative monomial in the t_{i,j}, flattened as
/// (i-1)*dim + j, stored as bytes.
using GenericKey = std::string;
using GenericImage = std::map<GenericKey, Element>;

/// Calls visit(index, image) for every word, with prefix products shared.
/// Words must be nonempty; they need not be sorted.
void for_each_generic_image(const StructureAlgebra& a, std::span<const Monomial> words,
                            const std::function<void(std::size_t, const GenericImage&)>& visit);

/// Generic image of f. f is an identity of A iff this is empty.
GenericImage generic_evaluate(const Polynomial& f, const StructureAlgebra& a);

/// Columns indexed by enumerate_monomials(d); rows by (t-monomial, output
/// basis index) pairs that occur, in sorted order. f in F<X>^(d) is an
/// identity of A iff its coefficient vector is in the nullspace.
Matrix generic_evaluation_matrix(const StructureAlgebra& a, const MultiDegree& d);

}  // namespace freepi
