#include "ltsenv/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ltsenv {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_dense(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Scalar(0) : it->second;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  if (value == 0) {
    data_[r].erase(c);
  } else {
    data_[r][c] = value;
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  if (value == 0) return;
  auto [it, inserted] = data_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) data_[r].erase(it);
  }
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) {
      if (x[c] != 0) out[r] += v * x[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
  }
  return t;
}

std::vector<Vector> Matrix::to_dense() const {
  std::vector<Vector> out(rows_, Vector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  }
  return out;
}

Vector Matrix::flatten() const {
  Vector out(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out[r * cols_ + c] = v;
  }
  return out;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix out = a;
  for (std::size_t r = 0; r < b.rows_; ++r) {
    for (const auto& [c, v] : b.data_[r]) out.add_to(r, c, v);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix out = a;
  for (std::size_t r = 0; r < b.rows_; ++r) {
    for (const auto& [c, v] : b.data_[r]) out.add_to(r, c, -v);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (const auto& [k, av] : a.data_[r]) {
      for (const auto& [c, bv] : b.data_[k]) out.add_to(r, c, av * bv);
    }
  }
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix out(a.rows_, a.cols_);
  if (c == 0) return out;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (const auto& [col, v] : a.data_[r]) out.data_[r].emplace(col, c * v);
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix power(const Matrix& m, unsigned k) {
  if (!m.square()) throw std::invalid_argument("power of non-square matrix");
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("nilpotency of non-square matrix");
  return power(m, static_cast<unsigned>(m.rows())).is_zero();
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;
using RatRow = std::vector<std::pair<std::size_t, Scalar>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (row.front().second < 0) g = -g;
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const Matrix::Row& row, const Scalar* extra, std::size_t extra_col) {
  Integer lcm = 1;
  for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  if (extra && *extra != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), extra->get_den_mpz_t());
  IntRow out;
  out.reserve(row.size() + 1);
  for (const auto& [c, v] : row) {
    Integer x = lcm / v.get_den() * v.get_num();
    out.emplace_back(c, std::move(x));
  }
  if (extra && *extra != 0) out.emplace_back(extra_col, Integer(lcm / extra->get_den() * extra->get_num()));
  make_primitive(out);
  return out;
}

// target = p * target - a * pivot
IntRow eliminate(const IntRow& target, const IntRow& pivot, const Integer& p, const Integer& a) {
  IntRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.emplace_back(target[i].first, Integer(p * target[i].second));
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, Integer(-a * pivot[j].second));
      ++j;
    } else {
      Integer v = p * target[i].second - a * pivot[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

// Fraction-free forward elimination followed by rational back substitution.
// Works on integer rows that may carry one extra (augmented) column.
struct Reduction {
  std::vector<RatRow> rows;
  std::vector<std::size_t> pivots;
};

Reduction reduce_rows(std::vector<IntRow> rows, std::size_t ncols) {
  std::vector<IntRow> pivot_rows;
  std::vector<std::size_t> pivots;
  std::vector<bool> done(rows.size(), false);
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t pick = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!done[i] && !rows[i].empty() && rows[i].front().first == c) {
        pick = i;
        break;
      }
    }
    if (pick == rows.size()) continue;
    done[pick] = true;
    const Integer p = rows[pick].front().second;
    for (std::size_t i = pick + 1; i < rows.size(); ++i) {
      if (done[i] || rows[i].empty() || rows[i].front().first != c) continue;
      rows[i] = eliminate(rows[i], rows[pick], p, rows[i].front().second);
    }
    pivot_rows.push_back(std::move(rows[pick]));
    pivots.push_back(c);
  }

  Reduction out;
  out.pivots = pivots;
  out.rows.reserve(pivot_rows.size());
  for (const auto& row : pivot_rows) {
    RatRow r;
    r.reserve(row.size());
    const Integer& lead = row.front().second;
    for (const auto& [c, v] : row) r.emplace_back(c, make_scalar(v, lead));
    out.rows.push_back(std::move(r));
  }
  // Back substitution: clear each pivot column above its pivot row.
  for (std::size_t k = out.rows.size(); k-- > 0;) {
    const std::size_t pc = out.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      auto& row = out.rows[i];
      auto hit = std::lower_bound(row.begin(), row.end(), pc,
                                  [](const auto& e, std::size_t col) { return e.first < col; });
      if (hit == row.end() || hit->first != pc) continue;
      const Scalar factor = hit->second;
      RatRow merged;
      merged.reserve(row.size() + out.rows[k].size());
      std::size_t a = 0, b = 0;
      const auto& piv = out.rows[k];
      while (a < row.size() || b < piv.size()) {
        if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
          merged.push_back(row[a++]);
        } else if (a == row.size() || piv[b].first < row[a].first) {
          merged.emplace_back(piv[b].first, Scalar(-factor * piv[b].second));
          ++b;
        } else {
          Scalar v = row[a].second - factor * piv[b].second;
          if (v != 0) merged.emplace_back(row[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
    }
  }
  return out;
}

}  // namespace

EchelonForm row_reduce(const Matrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(integer_row(m.row(r), nullptr, 0));
  Reduction red = reduce_rows(std::move(rows), m.cols());
  EchelonForm out{Matrix(red.rows.size(), m.cols()), red.pivots};
  for (std::size_t r = 0; r < red.rows.size(); ++r) {
    for (const auto& [c, v] : red.rows[r]) out.reduced.set(r, c, v);
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(integer_row(m.row(r), &b[r], m.cols()));
  Reduction red = reduce_rows(std::move(rows), m.cols() + 1);
  Vector x(m.cols());
  for (std::size_t k = 0; k < red.rows.size(); ++k) {
    if (red.pivots[k] == m.cols()) return std::nullopt;
    const auto& row = red.rows[k];
    if (row.back().first == m.cols()) x[red.pivots[k]] = row.back().second;
  }
  return x;
}

std::vector<Vector> nullspace(const Matrix& m) {
  EchelonForm ef = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < ef.pivots.size(); ++k) {
      Scalar entry = ef.reduced.at(k, f);
      if (entry != 0) v[ef.pivots[k]] = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<Vector> a = m.to_dense();
  const std::size_t n = a.size();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
    aug.set(r, n + r, 1);
  }
  EchelonForm ef = row_reduce(aug);
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, v] : ef.reduced.row(r)) {
      if (c >= n) inv.set(r, c - n, v);
    }
  }
  return inv;
}

bool RowEchelon::insert(const Vector& v) {
  Vector w = reduce(v);
  auto lead = std::find_if(w.begin(), w.end(), [](const Scalar& x) { return x != 0; });
  if (lead == w.end()) return false;
  const std::size_t p = static_cast<std::size_t>(lead - w.begin());
  const Scalar inv = 1 / w[p];
  for (auto& x : w) {
    if (x != 0) x *= inv;
  }
  for (auto& row : rows_) {
    if (row[p] != 0) axpy(row, -row[p], w);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

Vector RowEchelon::reduce(const Vector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("RowEchelon: vector length mismatch");
  Vector w = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (w[pivots_[k]] != 0) axpy(w, -w[pivots_[k]], rows_[k]);
  }
  return w;
}

bool RowEchelon::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::optional<Vector> RowEchelon::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) coords[k] = v[pivots_[k]];
  return coords;
}

}  // namespace ltsenv
