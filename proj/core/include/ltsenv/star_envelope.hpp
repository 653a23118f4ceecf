#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ltsenv/lie_algebra.hpp"
#include "ltsenv/pbw.hpp"
#include "ltsenv/triple_system.hpp"

namespace ltsenv {

/// Raised by uv_normalize when an element of U(L) is not in the subalgebra
/// generated by V.
class NotInSubalgebra : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EnvelopeSession;

/// Element of U(V) in the basis of right-normed monomials
/// a_{i1}(a_{i2}(...a_{in})) with i1 <= ... <= in. Words are over V indices.
class UVElement {
 public:
  UVElement() = default;
  UVElement(const EnvelopeSession* session, Terms terms) : session_(session), terms_(std::move(terms)) {}

  const EnvelopeSession* session() const { return session_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return ltsenv::degree(terms_); }
  Scalar coefficient(const Word& w) const;

  UVElement& operator+=(const UVElement& o);
  UVElement& operator-=(const UVElement& o);
  friend UVElement operator+(UVElement a, const UVElement& b) { return a += b; }
  friend UVElement operator-(UVElement a, const UVElement& b) { return a -= b; }
  friend UVElement operator-(const UVElement& a);
  friend UVElement operator*(const Scalar& c, const UVElement& a);
  /// Product of U(V).
  friend UVElement operator*(const UVElement& a, const UVElement& b);
  friend bool operator==(const UVElement& a, const UVElement& b) { return a.terms_ == b.terms_; }

 private:
  const EnvelopeSession* session_ = nullptr;
  Terms terms_;
};

/// Element of U(V) (x) U(V); words over V indices.
struct UVTensor {
  TensorTerms terms;
  friend bool operator==(const UVTensor&, const UVTensor&) = default;
};

/// The star-product model of U(V) for a Lie triple system V. The session
/// builds the Lie envelope L of (V, 4[,,]) so that a(bc) - b(ac) = [a,b,c]
/// holds in U(V) for the original bracket, and caches r, the embedding of
/// PBW monomials of U(V) into U(L), and monomial products.
///
/// A session is not thread-safe; distinct sessions are independent.
class EnvelopeSession {
 public:
  /// Throws std::invalid_argument unless t is a Lie triple system with zero
  /// binary bracket.
  explicit EnvelopeSession(TernarySystem t);
  EnvelopeSession(const EnvelopeSession&) = delete;
  EnvelopeSession& operator=(const EnvelopeSession&) = delete;

  const TernarySystem& system() const { return system_; }
  const LieEnvelope& envelope() const { return envelope_; }
  const PbwAlgebra& pbw() const { return *pbw_; }
  std::size_t dim() const { return system_.dim(); }

  // Associative level U(L).
  AssocElement q_map(const AssocElement& x) const;
  AssocElement r_map(const AssocElement& x) const;
  /// x*y = sum r(x_(1)) y r(x_(2)).
  AssocElement star_product(const AssocElement& x, const AssocElement& y) const;
  /// Generator of L corresponding to V basis vector i.
  AssocElement v_generator(std::size_t i) const;

  // U(V) level.
  UVElement one() const;
  UVElement generator(std::size_t i) const;
  UVElement monomial(const Word& m, const Scalar& c = 1) const;
  UVElement element(Terms terms) const;
  UVElement from_vector(const Vector& v) const;

  /// Right-normed star product of the generators of m, inside U(L).
  const AssocElement& embed_uv_monomial(const Word& m) const;
  AssocElement embed(const UVElement& u) const;
  /// Coordinates of x in the embedded PBW basis; throws NotInSubalgebra.
  UVElement uv_normalize(const AssocElement& x) const;

  UVElement uv_multiply(const UVElement& u, const UVElement& v) const;
  UVTensor uv_coproduct(const UVElement& u) const;
  static Scalar uv_counit(const UVElement& u);
  UVElement s_automorphism(const UVElement& u) const;
  /// x\y = S(x) y
  UVElement left_divide(const UVElement& x, const UVElement& y) const;
  /// x\1 = S(x)
  UVElement right_unit_divide(const UVElement& x) const;
  /// delta_{x,y}(z) = sum (x_(1) y_(1)) \ (x_(2) (y_(2) z))
  UVElement delta_map(const UVElement& x, const UVElement& y, const UVElement& z) const;

  UVElement associator(const UVElement& x, const UVElement& y, const UVElement& z) const;
  UVElement commutator(const UVElement& x, const UVElement& y) const;

  /// Elements of U(V) from the left and right legs of a tensor.
  std::vector<std::pair<UVElement, UVElement>> tensor_pairs(const UVTensor& t) const;

  std::string to_string(const UVElement& u) const;
  std::string to_string(const AssocElement& x) const { return pbw_->to_string(x.terms()); }

  Word to_envelope_word(const Word& m) const;

 private:
  using SplitMap = std::map<Word, Terms, GradedOrder>;

  const Terms& r_word(const Word& w) const;
  const SplitMap& split_r(const Word& w) const;
  const Terms& monomial_product(const Word& a, const Word& b) const;
  void check_same(const UVElement& u) const;

  TernarySystem system_;
  LieEnvelope envelope_;
  std::unique_ptr<PbwAlgebra> pbw_;

  mutable std::unordered_map<Word, Terms, WordHash> r_cache_;
  mutable std::unordered_map<Word, SplitMap, WordHash> split_cache_;
  mutable std::unordered_map<Word, AssocElement, WordHash> embed_cache_;
  mutable std::unordered_map<Word, Terms, WordHash> product_cache_;
};

UVElement uv_multiply(const UVElement& u, const UVElement& v);

}  // namespace ltsenv
