#include "ltsenv/lie_algebra.hpp"

#include <stdexcept>

namespace ltsenv {

LieAlgebraTable::LieAlgebraTable(std::size_t dim, std::vector<std::string> names)
    : dim_(dim), names_(std::move(names)), table_(dim * dim), zero_(dim) {
  if (!names_.empty() && names_.size() != dim) throw std::invalid_argument("basis name count != dim");
}

std::string LieAlgebraTable::name(std::size_t i) const {
  if (i >= dim_) throw std::out_of_range("generator index");
  return names_.empty() ? "g" + std::to_string(i) : names_[i];
}

void LieAlgebraTable::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("generator index");
  if (value.size() != dim_) throw std::invalid_argument("structure vector length != dim");
  if (i == j && !is_zero(value)) throw std::invalid_argument("[x,x] must vanish");
  table_[i * dim_ + j] = is_zero(value) ? Vector{} : value;
  table_[j * dim_ + i] = is_zero(value) ? Vector{} : scale(-1, value);
}

const Vector& LieAlgebraTable::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("generator index");
  const auto& slot = table_[i * dim_ + j];
  return slot.empty() ? zero_ : slot;
}

Vector LieAlgebraTable::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const auto& slot = table_[i * dim_ + j];
      if (!slot.empty()) axpy(out, x[i] * y[j], slot);
    }
  }
  return out;
}

void LieAlgebraTable::set_grading(std::vector<int> grading) {
  if (!grading.empty() && grading.size() != dim_) throw std::invalid_argument("grading length != dim");
  grading_ = std::move(grading);
}

AxiomReport check_lie(const LieAlgebraTable& l) {
  AxiomReport report;
  const std::size_t n = l.dim();
  AxiomCheck anti{"[x,y] = -[y,x]", true, {}};
  for (std::size_t i = 0; i < n && anti.pass; ++i) {
    for (std::size_t j = 0; j < n && anti.pass; ++j) {
      if (!is_zero(add(l.bracket(i, j), l.bracket(j, i)))) anti = {anti.name, false, {i, j}};
    }
  }
  report.checks.push_back(anti);
  AxiomCheck jacobi{"[[x,y],z] + [[y,z],x] + [[z,x],y] = 0", true, {}};
  for (std::size_t i = 0; i < n && jacobi.pass; ++i) {
    for (std::size_t j = 0; j < n && jacobi.pass; ++j) {
      for (std::size_t k = 0; k < n && jacobi.pass; ++k) {
        Vector s = l.bracket(l.bracket(i, j), unit_vector(n, k));
        axpy(s, 1, l.bracket(l.bracket(j, k), unit_vector(n, i)));
        axpy(s, 1, l.bracket(l.bracket(k, i), unit_vector(n, j)));
        if (!is_zero(s)) jacobi = {jacobi.name, false, {i, j, k}};
      }
    }
  }
  report.checks.push_back(jacobi);
  return report;
}

Vector LieEnvelope::embed(const Vector& v) const {
  Vector out(algebra.dim());
  for (std::size_t i = 0; i < v.size(); ++i) out[even_dim + i] = v[i];
  return out;
}

std::optional<Vector> LieEnvelope::even_coordinates(const Matrix& op) const {
  if (even_dim == 0) {
    if (op.is_zero()) return Vector{};
    return std::nullopt;
  }
  std::vector<Vector> cols;
  cols.reserve(even_operators.size());
  for (const auto& m : even_operators) cols.push_back(m.flatten());
  return solve(Matrix::from_columns(op.rows() * op.cols(), cols), op.flatten());
}

LieEnvelope lie_envelope(const TernarySystem& t, const Scalar& scale) {
  const std::size_t n = t.dim();
  auto d_matrix = [&](std::size_t i, std::size_t j) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector& col = t.ternary(i, j, k);
      for (std::size_t l = 0; l < n; ++l) {
        if (col[l] != 0) m.set(l, k, scale * col[l]);
      }
    }
    return m;
  };

  LieEnvelope env;
  env.scale = scale;
  RowEchelon span(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix d = d_matrix(i, j);
      if (span.insert(d.flatten())) {
        env.even_operators.push_back(std::move(d));
        env.even_labels.emplace_back(i, j);
      }
    }
  }
  env.even_dim = env.even_operators.size();
  const std::size_t m = env.even_dim;
  const std::size_t total = m + n;

  std::vector<std::string> names;
  for (const auto& [i, j] : env.even_labels) names.push_back("D(" + t.name(i) + "," + t.name(j) + ")");
  for (std::size_t i = 0; i < n; ++i) names.push_back(t.name(i));
  env.algebra = LieAlgebraTable(total, std::move(names));

  auto lift_even = [&](const Matrix& op) {
    auto coords = env.even_coordinates(op);
    if (!coords) throw std::invalid_argument("lie_envelope: commutator leaves span of D_{a,b}; input is not a Lie triple system");
    Vector out(total);
    for (std::size_t k = 0; k < m; ++k) out[k] = (*coords)[k];
    return out;
  };

  // [a, b] = D_{a,b}
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      env.algebra.set_bracket(m + i, m + j, lift_even(d_matrix(i, j)));
    }
  }
  // [D, c] = D(c)
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t c = 0; c < n; ++c) {
      env.algebra.set_bracket(k, m + c, env.embed(env.even_operators[k].column(c)));
    }
  }
  // [D, D'] = D D' - D' D
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = k + 1; l < m; ++l) {
      env.algebra.set_bracket(k, l, lift_even(commutator(env.even_operators[k], env.even_operators[l])));
    }
  }
  std::vector<int> grading(total, 1);
  for (std::size_t i = m; i < total; ++i) grading[i] = -1;
  env.algebra.set_grading(std::move(grading));
  return env;
}

}  // namespace ltsenv
