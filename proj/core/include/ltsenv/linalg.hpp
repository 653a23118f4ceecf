#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ltsenv/scalar.hpp"

namespace ltsenv {

/// Sparse rational matrix stored row-wise; zero entries are never stored.
class Matrix {
 public:
  using Row = std::map<std::size_t, Scalar>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<Vector>& rows);
  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void add_to(std::size_t r, std::size_t c, const Scalar& value);
  const Row& row(std::size_t r) const { return data_.at(r); }

  Vector column(std::size_t c) const;
  Vector apply(const Vector& x) const;
  Matrix transpose() const;
  std::vector<Vector> to_dense() const;
  /// Row-major flattening, used to treat matrices as vectors.
  Vector flatten() const;

  bool is_zero() const;
  std::size_t nonzeros() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned k);
bool is_nilpotent(const Matrix& m);

/// Reduced row echelon form, computed by fraction-free elimination with the
/// leftmost available pivot taken from the lowest-index remaining row.
struct EchelonForm {
  Matrix reduced;                    // rank rows, pivots normalised to 1
  std::vector<std::size_t> pivots;   // pivot column of each row
};

EchelonForm row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some x with m x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Kernel basis: one vector per free column (ascending), with a 1 in that
/// column and zeros in the other free columns.
std::vector<Vector> nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Determinant of a square matrix by exact elimination.
Scalar determinant(const Matrix& m);

/// Incrementally maintained reduced echelon basis of a subspace of F^n.
/// The stored basis is canonical: two RowEchelon objects spanning the same
/// subspace hold identical rows.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when v was not already in the span.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  Vector reduce(const Vector& v) const;
  /// Coordinates of v against basis(), or nullopt when v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ltsenv
