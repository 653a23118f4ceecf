#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ltsenv/linalg.hpp"
#include "ltsenv/scalar.hpp"

namespace ltsenv {

/// A finite-dimensional Lie triple system, Bol algebra or Malcev algebra,
/// given by structure constants on a fixed basis e_0, ..., e_{dim-1}:
///
///   [e_i, e_j, e_k] = sum_l ternary(i, j, k)[l] e_l
///   [e_i, e_j]      = sum_l binary(i, j)[l] e_l
///
/// Unset entries are zero. A Lie triple system has an identically zero
/// binary part; a Malcev algebra (as input to malcev_to_bol) has an empty
/// ternary part.
class TernarySystem {
 public:
  TernarySystem() = default;
  explicit TernarySystem(std::size_t dim, std::vector<std::string> names = {});

  std::size_t dim() const { return dim_; }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(std::size_t i) const;

  void set_ternary(std::size_t i, std::size_t j, std::size_t k, const Vector& value);
  void add_ternary(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Scalar& c);
  void set_binary(std::size_t i, std::size_t j, const Vector& value);
  void add_binary(std::size_t i, std::size_t j, std::size_t l, const Scalar& c);

  /// Structure vector of [e_i, e_j, e_k]; a zero vector when unset.
  const Vector& ternary(std::size_t i, std::size_t j, std::size_t k) const;
  const Vector& binary(std::size_t i, std::size_t j) const;

  bool has_ternary() const;
  bool has_binary() const;

  /// Trilinear extension of the structure constants.
  Vector bracket(const Vector& a, const Vector& b, const Vector& c) const;
  /// Bilinear extension of the binary structure constants.
  Vector binary_bracket(const Vector& a, const Vector& b) const;

  /// Same space with the ternary bracket multiplied by factor.
  TernarySystem scaled(const Scalar& factor) const;

  friend bool operator==(const TernarySystem&, const TernarySystem&) = default;

 private:
  std::size_t index3(std::size_t i, std::size_t j, std::size_t k) const;
  void check_index(std::size_t i) const;

  std::size_t dim_ = 0;
  std::string label_;
  std::vector<std::string> names_;
  std::vector<Vector> ternary_;  // dim^3 slots, empty == zero
  std::vector<Vector> binary_;   // dim^2 slots, empty == zero
  Vector zero_;
};

Vector bracket_eval(const TernarySystem& t, const Vector& a, const Vector& b, const Vector& c);

enum class AxiomMode { lts, bol, malcev };

std::string to_string(AxiomMode mode);
AxiomMode parse_axiom_mode(const std::string& text);

struct AxiomCheck {
  std::string name;
  bool pass = true;
  /// Basis indices of the first failing tuple.
  std::vector<std::size_t> witness;
};

struct AxiomReport {
  AxiomMode mode = AxiomMode::lts;
  std::vector<AxiomCheck> checks;
  bool ok() const;
};

/// Checks every axiom of the chosen structure on all basis tuples. The
/// quadratic axioms ([a,a,b] = 0, anticommutativity, the Malcev identity)
/// are checked in polarised form, which is equivalent in characteristic 0.
AxiomReport check_axioms(const TernarySystem& t, AxiomMode mode);

/// Subspace of F^n stored as a reduced echelon basis, so equal subspaces
/// compare equal.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  SubspaceBasis(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static SubspaceBasis whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Vector>& vectors() const { return vectors_; }

  bool contains(const Vector& v) const;
  bool contains(const SubspaceBasis& other) const;
  /// Coordinates of v against vectors(), nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> vectors_;
};

SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis intersection(const SubspaceBasis& a, const SubspaceBasis& b);

/// span{[u, v, w] : u in a, v in b, w in c}
SubspaceBasis bracket_span(const TernarySystem& t, const SubspaceBasis& a, const SubspaceBasis& b,
                           const SubspaceBasis& c);

enum class SeriesMode { nilpotency, solvability };

struct SeriesResult {
  std::vector<SubspaceBasis> chain;  // chain[0] = V^1 (resp. V^(1))
  bool reaches_zero = false;
};

/// nilpotency:  V^1 = [V,V,V], V^{n+1} = [V^n,V,V] + [V,V,V^n]
/// solvability: V^(1) = [V,V,V], V^(n+1) = [V^(n),V^(n),V]
/// The chain stops when it reaches zero or repeats.
SeriesResult lower_central_series(const TernarySystem& t, SeriesMode mode);

/// Smallest subspace containing s and closed under [I,V,V], [V,I,V], [V,V,I].
SubspaceBasis ideal_closure(const TernarySystem& t, const SubspaceBasis& s);

/// Nonzero bracket and every single-vector ideal closure over the probe set
/// (basis vectors and pairwise sums) is the whole space. A semi-decision for
/// arbitrary input; exact for the catalog systems.
bool is_simple(const TernarySystem& t);

/// Ternary bracket [[a,b],c] - J(a,b,c)/3 of a Malcev algebra; the binary
/// bracket is kept. Throws std::invalid_argument if the input is not Malcev.
TernarySystem malcev_to_bol(const TernarySystem& m);

/// The subsystem carried by s: structure constants in the coordinates of
/// s.vectors(). Throws std::invalid_argument if s is not closed.
TernarySystem restrict_to(const TernarySystem& t, const SubspaceBasis& s);

}  // namespace ltsenv
