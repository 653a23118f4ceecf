#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ltsenv/linalg.hpp"
#include "ltsenv/triple_system.hpp"

namespace ltsenv {

/// Raised when a ternary bracket induced on a subspace leaves it.
class InducedBracketNotClosed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by theorem_decompose when a hypothesis does not hold.
class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite-dimensional unital algebra given by its full multiplication table
/// e_i e_j = sum_k table(i, j)[k] e_k.
class FinAlgebra {
 public:
  FinAlgebra() = default;
  /// Throws std::invalid_argument on shape errors or if e_unit is not a
  /// two-sided unit.
  FinAlgebra(std::size_t dim, std::vector<Vector> table, std::size_t unit_index,
             std::vector<std::string> names = {}, std::string label = {});

  std::size_t dim() const { return dim_; }
  std::size_t unit_index() const { return unit_; }
  Vector unit() const { return unit_vector(dim_, unit_); }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(std::size_t i) const;

  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
  /// (xy)z - x(yz)
  Vector associator(const Vector& x, const Vector& y, const Vector& z) const;
  Matrix left_mult(const Vector& a) const;
  Matrix right_mult(const Vector& a) const;

  friend bool operator==(const FinAlgebra&, const FinAlgebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> table_;
  std::size_t unit_ = 0;
  std::vector<std::string> names_;
  std::string label_;
};

namespace algebras {
/// F[x]/(x^n), basis 1, x, ..., x^{n-1}
FinAlgebra truncated_polynomial(std::size_t n);
/// F x F with basis 1 = (1,1), u = (1,-1); u^2 = 1
FinAlgebra product_ff();
/// F[x]/(x^2 - x), basis 1, x
FinAlgebra idempotent();
/// 2x2 matrices, basis 1, E11, E12, E21 (E22 = 1 - E11)
FinAlgebra mat2();
/// Octonions from the Fano triples, basis 1, e1..e7
FinAlgebra octonions();
/// A 3-dimensional unital table with (e1,e1,e1) != 0
FinAlgebra nonassociative3();
/// Resolves truncated:N | FxF | idempotent | mat2 | octonions | nonassoc3
FinAlgebra by_name(const std::string& name);
std::vector<std::pair<std::string, std::string>> entries();
}  // namespace algebras

struct Nuclei {
  SubspaceBasis left, middle, right, center;
};

Nuclei nuclei(const FinAlgebra& a);

/// {a : (a,x,y) = -(x,a,y)} with the induced bracket
/// [a,b,c] = a(bc) - b(ac) - c(ab) + c(ba) in the coordinates of space.
struct LnAlt {
  SubspaceBasis space;
  TernarySystem system;
};

LnAlt ln_alt(const FinAlgebra& a);

/// {a : (a,x,y) = -(x,a,y) = (x,y,a)}
SubspaceBasis n_alt(const FinAlgebra& a);

/// Induced bracket a(bc) - b(ac) - c(ab) + c(ba).
Vector induced_bracket(const FinAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

/// The induced system on s; throws InducedBracketNotClosed.
TernarySystem induced_system(const FinAlgebra& a, const SubspaceBasis& s);

struct TernaryDerivation {
  Matrix d1, d2, d3;
};

/// d1(xy) = d2(x) y + x d3(y) on all basis pairs.
bool check_tder(const FinAlgebra& a, const TernaryDerivation& t);
/// (L_a, T_a, -L_a) in Tder(A), with T_a = L_a + R_a.
bool lnalt_membership_via_tder(const FinAlgebra& a, const Vector& x);

struct JcElement {
  Vector semisimple;
  Vector nilpotent;
};

/// a_s = (L_a)_s 1 and a_n = (L_a)_n 1. Throws std::invalid_argument if
/// a is not in LN_alt(A) and std::domain_error if L_{a_s} != (L_a)_s.
JcElement jc_element(const FinAlgebra& a, const Vector& x);

/// Subalgebra generated by s (unital adds 1).
SubspaceBasis generated_subalgebra(const FinAlgebra& a, const SubspaceBasis& s, bool unital);
/// Two-sided ideal generated by s.
SubspaceBasis generated_ideal(const FinAlgebra& a, const SubspaceBasis& s);
/// Powers B^1 = B, B^k = sum_{i+j=k} B^i B^j of the subalgebra B.
/// The chain stops at zero or at a repeat.
std::vector<SubspaceBasis> algebra_powers(const FinAlgebra& a, const SubspaceBasis& b);
bool is_nilpotent_subalgebra(const FinAlgebra& a, const SubspaceBasis& b);
/// True when every element of s commutes and associates with all of A.
bool in_center(const FinAlgebra& a, const SubspaceBasis& s);

struct NamedCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct DecompositionReport {
  SubspaceBasis v_hat;
  SubspaceBasis q;
  SubspaceBasis r;
  bool v_nilpotent = false;
  std::vector<NamedCheck> checks;
  bool verdict() const;
};

/// Constructive checker for the decomposition A = Q + R of a finite
/// dimensional unital algebra generated by a commuting subsystem V of
/// LN_alt(A). Throws PreconditionViolated naming the failed hypothesis.
DecompositionReport theorem_decompose(const FinAlgebra& a, const SubspaceBasis& v);

}  // namespace ltsenv
