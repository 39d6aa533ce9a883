#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "freepi/scalar.hpp"

namespace freepi {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws DimensionMismatch on ragged input.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, each of length rows.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Appends a row of length cols(). An empty matrix adopts the row's width.
  void append_row(std::span<const Scalar> row);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vector operator*(const Matrix& m, std::span<const Scalar> v);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination over Q.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of ker(m): one vector per free column, with a 1 in
/// that free position and the pivot entries solved from the RREF.
Matrix nullspace(const Matrix& m);

/// Incrementally maintained row space: each added row is reduced against
/// the rows kept so far and stored only if it is independent of them.
class RowReducer {
 public:
  explicit RowReducer(std::size_t width) : width_(width) {}

  /// Returns true when the row increased the rank.
  bool add(Vector row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  /// Kept rows; each has a leading 1 at pivots()[i] that is zero in all
  /// other kept rows.
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Whether v lies in the column span of basis.
bool in_column_span(const Matrix& basis, std::span<const Scalar> v);

// ---------------------------------------------------------------------------
// Linear programming

enum class Relation { LessEqual, Equal, GreaterEqual };

/// minimize objective . x  subject to  row_i(A) . x (rel_i) rhs_i,  x >= 0.
struct LpProblem {
  Vector objective;
  Matrix constraints;
  std::vector<Relation> relations;
  Vector rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Scalar value;
  Vector point;
};

/// Two-phase dense tableau simplex with Bland's rule. Exact, so it never
/// cycles and never needs tolerances. Throws DimensionMismatch on an
/// inconsistent problem.
LpSolution lp_solve(const LpProblem& p);

struct L1Distance {
  Scalar distance;
  /// z with ||v - B z||_1 == distance.
  Vector coefficients;
};

/// min over z of ||v - B z||_1 where B's columns span the subspace. A basis
/// with zero columns is the zero subspace. Throws DimensionMismatch when
/// v.size() != B.rows().
L1Distance l1_distance_to_subspace(std::span<const Scalar> v, const Matrix& basis);

Scalar l1_norm(std::span<const Scalar> v);

}  // namespace freepi
