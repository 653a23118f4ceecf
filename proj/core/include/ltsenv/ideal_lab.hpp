#pragma once

#include <string>
#include <vector>

#include "ltsenv/star_envelope.hpp"

namespace ltsenv {

/// All weakly increasing words over `letters` symbols of length <= max_degree,
/// in graded order.
std::vector<Word> monomials_up_to(std::size_t letters, unsigned max_degree);

enum class CentralizerMethod {
  /// Top-degree blocks first: [a, U_n] lies in U_{n-1}, so the degree n-1
  /// part of [u, a] only sees the degree n part of u. Falls back to the full
  /// system when some block has a kernel.
  split,
  /// One nullspace over all monomials of degree <= N.
  full,
};

std::string to_string(CentralizerMethod m);

struct CentralizerReport {
  std::string system;
  unsigned degree_bound = 0;
  CentralizerMethod method = CentralizerMethod::split;
  bool used_full_system = false;
  std::size_t monomial_count = 0;
  /// Kernel dimension of the top-degree block for n = 2..N (split method).
  std::vector<std::size_t> top_kernel_dims;
  /// Basis of {u in U(V)_{<=N} : ua = au for all a in V}.
  std::vector<UVElement> basis;
  /// Every basis element re-checked against all generators.
  bool sound = false;
  /// basis is contained in span(1) + V
  bool verdict = false;
  std::size_t dimension() const { return basis.size(); }
};

CentralizerReport truncated_centralizer(const EnvelopeSession& s, unsigned degree_bound,
                                        CentralizerMethod method = CentralizerMethod::split);

/// 1/2 sum_{i,j} [a, x_i, x_j] d^2 m / dx_i dx_j, computed in Sym(V) and read
/// back as right-normed monomials. Predicts a m - m a up to degree deg(m) - 2.
UVElement leading_commutator_prediction(const EnvelopeSession& s, const Vector& a, const Word& m);

struct LeadingTermCheck {
  UVElement prediction;
  UVElement actual;  // a m - m a
  bool pass = false;
};

LeadingTermCheck check_leading_term(const EnvelopeSession& s, const Vector& a, const Word& m);

struct So3Determinant {
  Matrix matrix;
  Scalar det;
  Scalar formula;
  bool equal = false;
};

/// The 3x3 system whose nonvanishing rules out degree >= 2 centralizing
/// elements of U(so3) in the basis z^n (x^p y^q), with its closed-form
/// determinant 2(n+2)(p+2)(q+2)(n+p+q+1)^2.
So3Determinant so3_condition_det(unsigned n, unsigned p, unsigned q);

struct SuiteCheck {
  std::string name;
  bool pass = true;
  std::string witness;
  std::size_t cases = 0;
};

struct SuiteReport {
  std::string system;
  unsigned bound = 0;
  std::vector<SuiteCheck> checks;
  bool ok() const;
};

/// Bounded identity checks on U(V) up to exponent or degree N:
/// [e^n, f] = n(n-1) e^{n-1} (S2 only), L_{a^p} L_{a^q} = L_{a^{p+q}},
/// the Bol-Hopf identity for primitive a, left alternativity,
/// x\1 = S(x) and sum x1\(x2 y) = eps(x) y, delta_{a,b}(c) = 1/2 [a,b,c].
SuiteReport lemma_suite(const EnvelopeSession& s, unsigned bound);

/// True when the structure constants coincide with the catalog S2 system.
bool is_s2(const TernarySystem& t);

/// Coefficient vectors of the monomials of degree <= N that lie in the left
/// (resp. middle) nucleus of U(V), tested against all pairs of monomials of
/// degree <= test_degree.
struct BoundedNuclei {
  std::vector<Word> monomials;
  SubspaceBasis left;
  SubspaceBasis middle;
};

BoundedNuclei bounded_nuclei(const EnvelopeSession& s, unsigned degree, unsigned test_degree);

/// Elements a of V with [L_a, L_b] = 0 on U(V)_{<=N} for every basis b, and
/// whether each of them commutes and associates with all monomials of
/// degree <= N.
struct CenterCheck {
  SubspaceBasis candidates;
  bool holds = true;
};

CenterCheck center_lemma_check(const EnvelopeSession& s, unsigned degree);

}  // namespace ltsenv
