#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "ltsenv/linalg.hpp"
#include "ltsenv/scalar.hpp"

namespace ltsenv {

/// Univariate polynomial over Q, dense coefficients, lowest degree first.
/// The leading coefficient is nonzero; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coefficients);
  Polynomial(std::initializer_list<Scalar> coefficients);

  static Polynomial constant(const Scalar& c);
  static Polynomial monomial(unsigned degree, const Scalar& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Vector& coefficients() const { return coeffs_; }
  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar evaluate(const Scalar& x) const;
  Matrix evaluate(const Matrix& m) const;

  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& a);

 private:
  void trim();
  Vector coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);
/// p(q(t)) reduced modulo m.
Polynomial compose_mod(const Polynomial& p, const Polynomial& q, const Polynomial& m);

/// Monic minimal polynomial of a square matrix.
Polynomial min_poly(const Matrix& m);

/// p / gcd(p, p'), made monic. Throws std::invalid_argument for p = 0.
Polynomial squarefree_part(const Polynomial& p);

struct JordanChevalley {
  Matrix semisimple;
  Matrix nilpotent;
  /// The semisimple part as a polynomial in the input matrix.
  Polynomial semisimple_poly;
};

/// Additive Jordan-Chevalley decomposition over Q. The semisimple part is
/// s(M) where s solves p(s) = 0 mod minpoly(M) by Newton iteration from s = t,
/// p being the squarefree part of the minimal polynomial.
JordanChevalley jordan_chevalley(const Matrix& m);

}  // namespace ltsenv
