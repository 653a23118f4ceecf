#include "ltsenv/star_envelope.hpp"

#include <stdexcept>

namespace ltsenv {

namespace {

constexpr Letter kSeparator = std::numeric_limits<Letter>::max();

Scalar power_of_two(std::size_t n) {
  Scalar p = 1;
  mpz_mul_2exp(p.get_num_mpz_t(), p.get_num_mpz_t(), n);
  return p;
}

void add_tensor_term(TensorTerms& acc, const Word& l, const Word& r, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace({l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

}  // namespace

Scalar UVElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

UVElement& UVElement::operator+=(const UVElement& o) {
  if (!session_) session_ = o.session_;
  add_scaled(terms_, o.terms_, 1);
  return *this;
}

UVElement& UVElement::operator-=(const UVElement& o) {
  if (!session_) session_ = o.session_;
  add_scaled(terms_, o.terms_, -1);
  return *this;
}

UVElement operator-(const UVElement& a) { return Scalar(-1) * a; }

UVElement operator*(const Scalar& c, const UVElement& a) {
  Terms t;
  add_scaled(t, a.terms_, c);
  return {a.session_, std::move(t)};
}

UVElement operator*(const UVElement& a, const UVElement& b) { return uv_multiply(a, b); }

UVElement uv_multiply(const UVElement& u, const UVElement& v) {
  const EnvelopeSession* s = u.session() ? u.session() : v.session();
  if (!s) throw std::invalid_argument("uv_multiply: elements have no session");
  return s->uv_multiply(u, v);
}

EnvelopeSession::EnvelopeSession(TernarySystem t) : system_(std::move(t)) {
  if (system_.has_binary()) {
    throw std::invalid_argument("star construction requires a Lie triple system (zero binary bracket)");
  }
  const AxiomReport report = check_axioms(system_, AxiomMode::lts);
  if (!report.ok()) throw std::invalid_argument("system does not satisfy the Lie triple system axioms");
  envelope_ = lie_envelope(system_, 4);
  pbw_ = std::make_unique<PbwAlgebra>(envelope_.algebra);
}

Word EnvelopeSession::to_envelope_word(const Word& m) const {
  Word w(m);
  for (auto& l : w) {
    if (l >= dim()) throw std::out_of_range("V index");
    l = static_cast<Letter>(l + envelope_.even_dim);
  }
  return w;
}

AssocElement EnvelopeSession::v_generator(std::size_t i) const { return pbw_->generator(envelope_.v_index(i)); }

AssocElement EnvelopeSession::q_map(const AssocElement& x) const {
  Terms out;
  for (const auto& [w, c] : x.terms()) {
    for_each_split(w, [&](const Word& l, const Word& r, const Scalar& m) {
      Terms lt{{l, 1}};
      Terms rt{{r, 1}};
      add_scaled(out, pbw_->multiply(lt, rt), c * m);
    });
  }
  return pbw_->element(std::move(out));
}

// r(w) = 2^-n (w - r(q(w) - 2^n w)); q(w) - 2^n w has lower degree.
const Terms& EnvelopeSession::r_word(const Word& w) const {
  if (auto it = r_cache_.find(w); it != r_cache_.end()) return it->second;
  Terms result;
  if (w.size() <= 1) {
    result.emplace(w, w.empty() ? Scalar(1) : Scalar(1, 2));
  } else {
    Terms lower;
    for_each_split(w, [&](const Word& l, const Word& r, const Scalar& m) {
      if (l.empty() || r.empty()) return;
      Terms lt{{l, 1}};
      Terms rt{{r, 1}};
      add_scaled(lower, pbw_->multiply(lt, rt), m);
    });
    const Scalar two_n = power_of_two(w.size());
    add_term(lower, w, -(two_n - 2));
    const Scalar inv = 1 / two_n;
    result.emplace(w, inv);
    for (const auto& [v, c] : lower) add_scaled(result, r_word(v), -c * inv);
  }
  return r_cache_.emplace(w, std::move(result)).first->second;
}

AssocElement EnvelopeSession::r_map(const AssocElement& x) const {
  Terms out;
  for (const auto& [w, c] : x.terms()) add_scaled(out, r_word(w), c);
  return pbw_->element(std::move(out));
}

// (r (x) r) Delta(w), grouped by the PBW word of the right leg.
const EnvelopeSession::SplitMap& EnvelopeSession::split_r(const Word& w) const {
  if (auto it = split_cache_.find(w); it != split_cache_.end()) return it->second;
  SplitMap out;
  for_each_split(w, [&](const Word& l, const Word& r, const Scalar& m) {
    const Terms& rl = r_word(l);
    for (const auto& [s, cs] : r_word(r)) {
      Terms& slot = out[s];
      add_scaled(slot, rl, m * cs);
    }
  });
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return split_cache_.emplace(w, std::move(out)).first->second;
}

AssocElement EnvelopeSession::star_product(const AssocElement& x, const AssocElement& y) const {
  if ((x.algebra() && x.algebra() != pbw_.get()) || (y.algebra() && y.algebra() != pbw_.get())) {
    throw std::invalid_argument("star_product: element from another session");
  }
  // Collect sum_s T_s (x) s over all terms of x, then form sum_s T_s y s.
  SplitMap grouped;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& [s, p] : split_r(w)) add_scaled(grouped[s], p, c);
  }
  Terms out;
  for (const auto& [s, t] : grouped) {
    if (t.empty()) continue;
    Terms ys = y.terms();
    for (Letter g : s) ys = pbw_->times_generator(ys, g);
    add_scaled(out, pbw_->multiply(t, ys), 1);
  }
  return pbw_->element(std::move(out));
}

UVElement EnvelopeSession::one() const { return monomial(Word{}); }

UVElement EnvelopeSession::generator(std::size_t i) const {
  if (i >= dim()) throw std::out_of_range("V index");
  return monomial(Word{static_cast<Letter>(i)});
}

UVElement EnvelopeSession::monomial(const Word& m, const Scalar& c) const {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= dim()) throw std::out_of_range("V index");
    if (i > 0 && m[i - 1] > m[i]) throw std::invalid_argument("U(V) monomial must be weakly increasing");
  }
  Terms t;
  add_term(t, m, c);
  return {this, std::move(t)};
}

UVElement EnvelopeSession::element(Terms terms) const {
  for (const auto& [w, c] : terms) monomial(w, c);
  for (auto it = terms.begin(); it != terms.end();) it = it->second == 0 ? terms.erase(it) : std::next(it);
  return {this, std::move(terms)};
}

UVElement EnvelopeSession::from_vector(const Vector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("vector length != dim V");
  Terms t;
  for (std::size_t i = 0; i < v.size(); ++i) add_term(t, Word{static_cast<Letter>(i)}, v[i]);
  return {this, std::move(t)};
}

// embed(i . rest) = a_i * embed(rest) = (g E + E g) / 2.
const AssocElement& EnvelopeSession::embed_uv_monomial(const Word& m) const {
  if (auto it = embed_cache_.find(m); it != embed_cache_.end()) return it->second;
  AssocElement result;
  if (m.empty()) {
    result = pbw_->one();
  } else {
    if (m.front() >= dim()) throw std::out_of_range("V index");
    const Word rest(m.begin() + 1, m.end());
    const AssocElement& e = embed_uv_monomial(rest);
    const auto g = static_cast<Letter>(envelope_.v_index(m.front()));
    Terms t = pbw_->times_generator(e.terms(), g);
    Terms ge = pbw_->product_of_letters(Word{g});
    ge = pbw_->multiply(ge, e.terms());
    add_scaled(t, ge, 1);
    Terms half;
    add_scaled(half, t, Scalar(1, 2));
    result = pbw_->element(std::move(half));
  }
  return embed_cache_.emplace(m, std::move(result)).first->second;
}

AssocElement EnvelopeSession::embed(const UVElement& u) const {
  check_same(u);
  Terms out;
  for (const auto& [m, c] : u.terms()) add_scaled(out, embed_uv_monomial(m).terms(), c);
  return pbw_->element(std::move(out));
}

// Leading-term elimination: the top-degree part of embed(m) is the envelope
// word of m, so coordinates are read off from the top down.
UVElement EnvelopeSession::uv_normalize(const AssocElement& x) const {
  if (x.algebra() && x.algebra() != pbw_.get()) throw std::invalid_argument("uv_normalize: foreign element");
  const auto shift = static_cast<Letter>(envelope_.even_dim);
  Terms rest = x.terms();
  Terms out;
  while (!rest.empty()) {
    const auto last = std::prev(rest.end());
    const Word w = last->first;
    const Scalar c = last->second;
    Word m(w);
    for (auto& l : m) {
      if (l < shift) throw NotInSubalgebra("element is not in the subalgebra generated by V: term " +
                                           pbw_->to_string(Terms{{w, c}}));
      l = static_cast<Letter>(l - shift);
    }
    add_term(out, m, c);
    add_scaled(rest, embed_uv_monomial(m).terms(), -c);
  }
  return {this, std::move(out)};
}

const Terms& EnvelopeSession::monomial_product(const Word& a, const Word& b) const {
  Word key(a);
  key.push_back(kSeparator);
  key.insert(key.end(), b.begin(), b.end());
  if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;
  Terms result;
  if (a.empty()) {
    result.emplace(b, 1);
  } else if (b.empty()) {
    result.emplace(a, 1);
  } else {
    const AssocElement p = star_product(embed_uv_monomial(a), embed_uv_monomial(b));
    result = uv_normalize(p).terms();
  }
  return product_cache_.emplace(std::move(key), std::move(result)).first->second;
}

UVElement EnvelopeSession::uv_multiply(const UVElement& u, const UVElement& v) const {
  check_same(u);
  check_same(v);
  Terms out;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) add_scaled(out, monomial_product(a, b), ca * cb);
  }
  return {this, std::move(out)};
}

UVTensor EnvelopeSession::uv_coproduct(const UVElement& u) const {
  check_same(u);
  const TensorElement d = pbw_->coproduct(embed(u));
  // Left legs grouped by the right PBW word lie in Q.
  std::map<Word, Terms, GradedOrder> by_right;
  for (const auto& [key, c] : d.terms) add_term(by_right[key.second], key.first, c);
  std::map<Word, Terms, GradedOrder> by_left;
  for (const auto& [s, left] : by_right) {
    const UVElement l = uv_normalize(pbw_->element(left));
    for (const auto& [m, c] : l.terms()) add_term(by_left[m], s, c);
  }
  UVTensor out;
  for (const auto& [m, right] : by_left) {
    const UVElement r = uv_normalize(pbw_->element(right));
    for (const auto& [n, c] : r.terms()) add_tensor_term(out.terms, m, n, c);
  }
  return out;
}

Scalar EnvelopeSession::uv_counit(const UVElement& u) { return u.coefficient(Word{}); }

UVElement EnvelopeSession::s_automorphism(const UVElement& u) const {
  check_same(u);
  Terms out = u.terms();
  for (auto& [w, c] : out) {
    if (w.size() % 2 == 1) c = -c;
  }
  return {this, std::move(out)};
}

UVElement EnvelopeSession::left_divide(const UVElement& x, const UVElement& y) const {
  return uv_multiply(s_automorphism(x), y);
}

UVElement EnvelopeSession::right_unit_divide(const UVElement& x) const { return s_automorphism(x); }

UVElement EnvelopeSession::delta_map(const UVElement& x, const UVElement& y, const UVElement& z) const {
  const auto xs = tensor_pairs(uv_coproduct(x));
  const auto ys = tensor_pairs(uv_coproduct(y));
  UVElement out(this, {});
  for (const auto& [x1, x2] : xs) {
    for (const auto& [y1, y2] : ys) {
      out += left_divide(uv_multiply(x1, y1), uv_multiply(x2, uv_multiply(y2, z)));
    }
  }
  return out;
}

UVElement EnvelopeSession::associator(const UVElement& x, const UVElement& y, const UVElement& z) const {
  return uv_multiply(uv_multiply(x, y), z) - uv_multiply(x, uv_multiply(y, z));
}

UVElement EnvelopeSession::commutator(const UVElement& x, const UVElement& y) const {
  return uv_multiply(x, y) - uv_multiply(y, x);
}

std::vector<std::pair<UVElement, UVElement>> EnvelopeSession::tensor_pairs(const UVTensor& t) const {
  std::vector<std::pair<UVElement, UVElement>> out;
  out.reserve(t.terms.size());
  for (const auto& [key, c] : t.terms) out.emplace_back(monomial(key.first, c), monomial(key.second));
  return out;
}

std::string EnvelopeSession::to_string(const UVElement& u) const {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : u.terms()) {
    const bool neg = c < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (w.empty()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    // right-normed: a*(b*c)
    std::string mono = system_.name(w.back());
    for (std::size_t i = w.size() - 1; i-- > 0;) {
      mono = system_.name(w[i]) + "*" + (i + 2 == w.size() ? mono : "(" + mono + ")");
    }
    out += mono;
  }
  return out;
}

void EnvelopeSession::check_same(const UVElement& u) const {
  if (u.session() && u.session() != this) throw std::invalid_argument("element belongs to another session");
}

}  // namespace ltsenv
