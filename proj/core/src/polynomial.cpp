#include "ltsenv/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltsenv {

Polynomial::Polynomial(Vector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(Vector{c}); }

Polynomial Polynomial::monomial(unsigned degree, const Scalar& c) {
  Vector v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (1 / leading()) * *this;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  Vector d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
  if (!m.square()) throw std::invalid_argument("polynomial of non-square matrix");
  Matrix acc(m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.rows());
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * m + coeffs_[i] * id;
  return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Scalar& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i > 0) {
      if (mag != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Vector v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Vector v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vector v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Scalar& c, const Polynomial& a) {
  Vector v = a.coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  Vector rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  Vector quot(rem.size() - db);
  const Scalar inv_lead = 1 / b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Scalar q = rem[k + db] * inv_lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coefficient(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  // Extended Euclid tracking only the coefficient of a.
  Polynomial r0 = m, r1 = divmod(a, m).second;
  Polynomial s0, s1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial not invertible modulo m");
  return divmod((1 / r0.leading()) * s0, m).second;
}

Polynomial compose_mod(const Polynomial& p, const Polynomial& q, const Polynomial& m) {
  Polynomial acc;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    acc = divmod(acc * q + Polynomial::constant(p.coefficients()[i]), m).second;
  }
  return acc;
}

Polynomial min_poly(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("min_poly of non-square matrix");
  const std::size_t n = m.rows();
  // Find the first power M^k that is a combination of I, M, ..., M^{k-1}.
  std::vector<Vector> powers;
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector flat = current.flatten();
    if (!powers.empty()) {
      auto coeffs = solve(Matrix::from_columns(n * n, powers), flat);
      if (coeffs) {
        Vector p(k + 1);
        for (std::size_t i = 0; i < k; ++i) p[i] = -(*coeffs)[i];
        p[k] = 1;
        return Polynomial(std::move(p));
      }
    } else if (n == 0) {
      return Polynomial::constant(1);
    }
    powers.push_back(std::move(flat));
    current = current * m;
  }
  throw std::logic_error("min_poly: no relation found up to degree n");
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of the zero polynomial");
  const Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

JordanChevalley jordan_chevalley(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("jordan_chevalley of non-square matrix");
  const Polynomial mp = min_poly(m);
  const Polynomial sf = squarefree_part(mp);
  const Polynomial dsf = sf.derivative();
  Polynomial s = divmod(Polynomial{0, 1}, mp).second;
  // Newton iteration in Q[t]/(mp): s <- s - sf(s) / sf'(s).
  for (int iter = 0; iter < 64; ++iter) {
    const Polynomial val = compose_mod(sf, s, mp);
    if (val.is_zero()) break;
    const Polynomial dval = compose_mod(dsf, s, mp);
    s = divmod(s - val * inverse_mod(dval, mp), mp).second;
  }
  Matrix ms = s.evaluate(m);
  Matrix mn = m - ms;
  return {std::move(ms), std::move(mn), std::move(s)};
}

}  // namespace ltsenv
