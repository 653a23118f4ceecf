#include "ltsenv/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltsenv {

void add_term(Terms& acc, const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

void add_scaled(Terms& acc, const Terms& x, const Scalar& c) {
  if (c == 0) return;
  for (const auto& [w, v] : x) {
    auto [it, inserted] = acc.try_emplace(w);
    if (inserted) {
      it->second = c * v;
    } else {
      it->second += c * v;
      if (it->second == 0) acc.erase(it);
    }
  }
}

int degree(const Terms& x) {
  if (x.empty()) return kZeroDegree;
  return static_cast<int>(x.rbegin()->first.size());
}

Word sorted_word(Word w) {
  std::sort(w.begin(), w.end());
  return w;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += w[i] < names.size() ? names[w[i]] : "g" + std::to_string(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : w) {
    h ^= static_cast<std::size_t>(l) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h ^ w.size();
}

Scalar AssocElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

AssocElement& AssocElement::operator+=(const AssocElement& o) {
  if (!algebra_) algebra_ = o.algebra_;
  add_scaled(terms_, o.terms_, 1);
  return *this;
}

AssocElement& AssocElement::operator-=(const AssocElement& o) {
  if (!algebra_) algebra_ = o.algebra_;
  add_scaled(terms_, o.terms_, -1);
  return *this;
}

AssocElement operator*(const Scalar& c, const AssocElement& a) {
  Terms t;
  add_scaled(t, a.terms_, c);
  return {a.algebra_, std::move(t)};
}

AssocElement operator*(const AssocElement& a, const AssocElement& b) { return pbw_multiply(a, b); }

PbwAlgebra::PbwAlgebra(LieAlgebraTable table) : table_(std::move(table)) {
  const std::size_t n = table_.dim();
  if (n > std::numeric_limits<Letter>::max()) throw std::invalid_argument("Lie algebra too large");
  brackets_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& v = table_.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (v[k] != 0) brackets_[i * n + j].emplace(Word{static_cast<Letter>(k)}, v[k]);
      }
    }
  }
}

AssocElement PbwAlgebra::one() const { return monomial(Word{}); }

AssocElement PbwAlgebra::generator(std::size_t i) const {
  if (i >= dim()) throw std::out_of_range("generator index");
  return monomial(Word{static_cast<Letter>(i)});
}

AssocElement PbwAlgebra::monomial(const Word& w, const Scalar& c) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= dim()) throw std::out_of_range("generator index");
    if (i > 0 && w[i - 1] > w[i]) throw std::invalid_argument("PBW monomial must be weakly increasing");
  }
  Terms t;
  add_term(t, w, c);
  return {this, std::move(t)};
}

AssocElement PbwAlgebra::element(Terms terms) const {
  for (auto it = terms.begin(); it != terms.end();) {
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  return {this, std::move(terms)};
}

void PbwAlgebra::mul_word_letter_into(Terms& acc, const Word& w, Letter g, const Scalar& c) const {
  if (w.empty() || w.back() <= g) {
    Word out;
    out.reserve(w.size() + 1);
    out = w;
    out.push_back(g);
    add_term(acc, out, c);
    return;
  }
  add_scaled(acc, word_times_letter(w, g), c);
}

// w * g with w.back() > g:  w' h g = (w' g) h + w' [h, g].
const Terms& PbwAlgebra::word_times_letter(const Word& w, Letter g) const {
  Word key = w;
  key.push_back(g);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const Letter h = w.back();
  const Word prefix(w.begin(), w.end() - 1);
  Terms prefix_g;
  mul_word_letter_into(prefix_g, prefix, g, 1);
  Terms result;
  for (const auto& [t, c] : prefix_g) mul_word_letter_into(result, t, h, c);
  for (const auto& [k, ck] : brackets_[static_cast<std::size_t>(h) * dim() + g]) {
    mul_word_letter_into(result, prefix, k.front(), ck);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = memo_.emplace(std::move(key), std::move(result));
  return it->second;
}

Terms PbwAlgebra::times_generator(const Terms& x, Letter g) const {
  Terms acc;
  for (const auto& [w, c] : x) mul_word_letter_into(acc, w, g, c);
  return acc;
}

Terms PbwAlgebra::multiply(const Terms& x, const Terms& y) const {
  Terms result;
  if (x.empty() || y.empty()) return result;
  for (const auto& [wy, cy] : y) {
    Terms p = x;
    for (Letter g : wy) p = times_generator(p, g);
    add_scaled(result, p, cy);
  }
  return result;
}

Terms PbwAlgebra::product_of_letters(const Word& letters) const {
  Terms p;
  p.emplace(Word{}, 1);
  for (Letter g : letters) {
    if (g >= dim()) throw std::out_of_range("generator index");
    p = times_generator(p, g);
  }
  return p;
}

AssocElement PbwAlgebra::multiply(const AssocElement& x, const AssocElement& y) const {
  return {this, multiply(x.terms(), y.terms())};
}

TensorElement PbwAlgebra::coproduct(const AssocElement& x) const {
  TensorElement out;
  for (const auto& [w, c] : x.terms()) {
    for_each_split(w, [&](const Word& l, const Word& r, const Scalar& m) {
      auto [it, inserted] = out.terms.try_emplace({l, r}, c * m);
      if (!inserted) {
        it->second += c * m;
        if (it->second == 0) out.terms.erase(it);
      }
    });
  }
  return out;
}

Scalar PbwAlgebra::counit(const AssocElement& x) { return x.coefficient(Word{}); }

int PbwAlgebra::degree(const AssocElement& x) { return ltsenv::degree(x.terms()); }

std::string PbwAlgebra::to_string(const Terms& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : x) {
    const bool neg = c < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (w.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += word_to_string(w, table_.names());
    }
  }
  return out;
}

std::size_t PbwAlgebra::cache_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

AssocElement pbw_multiply(const AssocElement& x, const AssocElement& y) {
  if (x.algebra() == nullptr || x.algebra() != y.algebra()) {
    throw std::invalid_argument("pbw_multiply: elements belong to different algebras");
  }
  return x.algebra()->multiply(x, y);
}

TensorElement coproduct(const AssocElement& x) {
  if (!x.algebra()) throw std::invalid_argument("coproduct: element has no ambient algebra");
  return x.algebra()->coproduct(x);
}

Scalar counit(const AssocElement& x) { return PbwAlgebra::counit(x); }

int degree(const AssocElement& x) { return PbwAlgebra::degree(x); }

}  // namespace ltsenv
