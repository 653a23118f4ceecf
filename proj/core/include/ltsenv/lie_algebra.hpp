#pragma once

#include <string>
#include <vector>

#include "ltsenv/linalg.hpp"
#include "ltsenv/triple_system.hpp"

namespace ltsenv {

/// Finite-dimensional Lie algebra by structure constants
/// [g_i, g_j] = sum_l bracket(i, j)[l] g_l, with an optional Z/2 grading
/// (+1 even, -1 odd) per basis vector.
class LieAlgebraTable {
 public:
  LieAlgebraTable() = default;
  explicit LieAlgebraTable(std::size_t dim, std::vector<std::string> names = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(std::size_t i) const;

  /// Sets [g_i, g_j] = value and [g_j, g_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  const Vector& bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  const std::vector<int>& grading() const { return grading_; }
  void set_grading(std::vector<int> grading);

  friend bool operator==(const LieAlgebraTable&, const LieAlgebraTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Vector> table_;  // dim^2 slots, empty == zero
  std::vector<int> grading_;
  Vector zero_;
};

/// Antisymmetry and the Jacobi identity on all basis pairs/triples.
AxiomReport check_lie(const LieAlgebraTable& l);

/// Lie envelope span<D_{a,b}> + V of a Lie triple system, where
/// D_{a,b}(c) = scale * [a,b,c]. Basis order: the chosen D_{e_i,e_j}
/// (first independent ones in (i,j) order, i < j), then e_0, ..., e_{n-1}.
struct LieEnvelope {
  LieAlgebraTable algebra;
  std::size_t even_dim = 0;
  Scalar scale = 1;
  /// Operator matrices of the even basis elements, acting on V.
  std::vector<Matrix> even_operators;
  /// (i, j) such that even basis element k is D_{e_i, e_j}.
  std::vector<std::pair<std::size_t, std::size_t>> even_labels;

  std::size_t odd_dim() const { return algebra.dim() - even_dim; }
  std::size_t v_index(std::size_t i) const { return even_dim + i; }
  /// Image of a V-vector in envelope coordinates.
  Vector embed(const Vector& v) const;
  /// Coordinates of an even-part operator in the chosen D basis.
  std::optional<Vector> even_coordinates(const Matrix& op) const;
};

LieEnvelope lie_envelope(const TernarySystem& t, const Scalar& scale = 1);

}  // namespace ltsenv
