#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ltsenv/lie_algebra.hpp"
#include "ltsenv/scalar.hpp"

namespace ltsenv {

using Letter = std::uint16_t;
/// A PBW monomial: weakly increasing generator indices. Empty word = 1.
using Word = std::vector<Letter>;

/// Degree first, then lexicographic. Iterating a Terms map therefore visits
/// monomials by increasing filtration degree.
struct GradedOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Terms = std::map<Word, Scalar, GradedOrder>;

/// Degree of the zero element.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

void add_term(Terms& acc, const Word& w, const Scalar& c);
void add_scaled(Terms& acc, const Terms& x, const Scalar& c);
int degree(const Terms& x);
Word sorted_word(Word w);
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

/// Calls f(left, right, multiplicity) for every way of splitting the multiset
/// w into two sub-multisets; multiplicity is the number of position subsets
/// realising the split. This is the coproduct of a PBW monomial whose letters
/// are primitive.
template <typename F>
void for_each_split(const Word& w, F&& f);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

class PbwAlgebra;

/// Element of the associative enveloping algebra U(L) in the PBW basis.
class AssocElement {
 public:
  AssocElement() = default;
  AssocElement(const PbwAlgebra* algebra, Terms terms) : algebra_(algebra), terms_(std::move(terms)) {}

  const PbwAlgebra* algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  Terms& terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  AssocElement& operator+=(const AssocElement& o);
  AssocElement& operator-=(const AssocElement& o);
  friend AssocElement operator+(AssocElement a, const AssocElement& b) { return a += b; }
  friend AssocElement operator-(AssocElement a, const AssocElement& b) { return a -= b; }
  friend AssocElement operator*(const Scalar& c, const AssocElement& a);
  /// PBW product; throws std::invalid_argument on ambient mismatch.
  friend AssocElement operator*(const AssocElement& a, const AssocElement& b);
  friend bool operator==(const AssocElement& a, const AssocElement& b) { return a.terms_ == b.terms_; }

 private:
  const PbwAlgebra* algebra_ = nullptr;
  Terms terms_;
};

/// Element of U(L) (x) U(L): sparse map from pairs of PBW monomials.
using TensorTerms = std::map<std::pair<Word, Word>, Scalar>;

struct TensorElement {
  TensorTerms terms;
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// The universal enveloping algebra U(L) of a finite-dimensional Lie algebra,
/// with products normalised by the rewriting rule g_i g_j = g_j g_i + [g_i, g_j]
/// for i > j. Products of a monomial by a generator are memoised; the cache
/// is guarded so a shared algebra may be used from several threads.
class PbwAlgebra {
 public:
  explicit PbwAlgebra(LieAlgebraTable table);
  PbwAlgebra(const PbwAlgebra&) = delete;
  PbwAlgebra& operator=(const PbwAlgebra&) = delete;

  const LieAlgebraTable& table() const { return table_; }
  std::size_t dim() const { return table_.dim(); }

  AssocElement one() const;
  AssocElement generator(std::size_t i) const;
  AssocElement monomial(const Word& w, const Scalar& c = 1) const;
  AssocElement element(Terms terms) const;

  AssocElement multiply(const AssocElement& x, const AssocElement& y) const;
  Terms multiply(const Terms& x, const Terms& y) const;
  /// x * g for a generator g.
  Terms times_generator(const Terms& x, Letter g) const;
  /// Product of the ordered (not necessarily sorted) letter sequence.
  Terms product_of_letters(const Word& letters) const;

  TensorElement coproduct(const AssocElement& x) const;
  static Scalar counit(const AssocElement& x);
  static int degree(const AssocElement& x);

  std::string to_string(const Terms& x) const;

  std::size_t cache_size() const;

 private:
  void mul_word_letter_into(Terms& acc, const Word& w, Letter g, const Scalar& c) const;
  const Terms& word_times_letter(const Word& w, Letter g) const;

  LieAlgebraTable table_;
  std::vector<Terms> brackets_;  // [g_i, g_j] at index i * dim + j
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Terms, WordHash> memo_;
};

AssocElement pbw_multiply(const AssocElement& x, const AssocElement& y);
TensorElement coproduct(const AssocElement& x);
Scalar counit(const AssocElement& x);
int degree(const AssocElement& x);

template <typename F>
void for_each_split(const Word& w, F&& f) {
  // Runs of equal letters: letter, count.
  std::vector<std::pair<Letter, unsigned>> runs;
  for (Letter l : w) {
    if (!runs.empty() && runs.back().first == l) {
      ++runs.back().second;
    } else {
      runs.emplace_back(l, 1U);
    }
  }
  std::vector<unsigned> take(runs.size(), 0U);
  Word left, right;
  left.reserve(w.size());
  right.reserve(w.size());
  while (true) {
    left.clear();
    right.clear();
    Scalar mult = 1;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      left.insert(left.end(), take[r], runs[r].first);
      right.insert(right.end(), runs[r].second - take[r], runs[r].first);
      if (take[r] != 0 && take[r] != runs[r].second) mult *= binomial(runs[r].second, take[r]);
    }
    f(left, right, mult);
    std::size_t r = 0;
    while (r < runs.size()) {
      if (++take[r] <= runs[r].second) break;
      take[r] = 0;
      ++r;
    }
    if (r == runs.size()) return;
  }
}

}  // namespace ltsenv
