#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qdc/rational.hpp"

namespace qdc {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  std::vector<Vector> columns() const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& v) const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of the null space, one per free column of the RREF.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Linearly independent subset of the columns spanning the column space.
std::vector<Vector> image_basis(const Matrix& m);
/// Indices of a maximal independent subset of the given vectors, greedy in order.
std::vector<std::size_t> independent_subset(std::size_t length, const std::vector<Vector>& vectors);

/// Solves basis * X = targets where `basis` has independent columns. Returns
/// std::nullopt-like empty result via `ok == false` when some target column
/// is outside the span; `failed_column` names the first such column.
struct SpanSolution {
  bool ok = true;
  std::size_t failed_column = 0;
  Matrix coefficients;
};
SpanSolution solve_in_span(const Matrix& basis, const Matrix& targets);

/// True when span(a) == span(b), vectors given as columns of equal length.
bool same_span(std::size_t length, const std::vector<Vector>& a, const std::vector<Vector>& b);
/// True when every vector of `inner` lies in span(outer).
bool span_contains(std::size_t length, const std::vector<Vector>& outer, const std::vector<Vector>& inner);

/// Sparse matrix stored by columns; used for operators on coordinate spaces.
class SparseMatrix {
 public:
  using Column = std::vector<std::pair<int, Rational>>;  // sorted by row

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Column& column(int j) const { return columns_[j]; }
  /// Replaces column j; entries need not be sorted or combined.
  void set_column(int j, Column entries);

  Vector apply(const Vector& v) const;
  Matrix apply(const Matrix& m) const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator*=(const Rational& c);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator*(SparseMatrix a, const Rational& c) { return a *= c; }
  SparseMatrix operator-(const SparseMatrix& other) const;
  /// this + c * identity
  SparseMatrix shifted(const Rational& c) const;
  Matrix to_dense() const;
  /// Restriction to the given rows/cols (positions into this matrix).
  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Column> columns_;
};

/// Exact rank by sparse column elimination (pivot = topmost nonzero row).
std::size_t rank(const SparseMatrix& m);

}  // namespace qdc
