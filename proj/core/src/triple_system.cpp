#include "ltsenv/triple_system.hpp"

#include <stdexcept>

namespace ltsenv {

TernarySystem::TernarySystem(std::size_t dim, std::vector<std::string> names)
    : dim_(dim), names_(std::move(names)), ternary_(dim * dim * dim), binary_(dim * dim), zero_(dim) {
  if (!names_.empty() && names_.size() != dim) throw std::invalid_argument("basis name count != dim");
}

std::string TernarySystem::name(std::size_t i) const {
  check_index(i);
  return names_.empty() ? "e" + std::to_string(i) : names_[i];
}

void TernarySystem::check_index(std::size_t i) const {
  if (i >= dim_) throw std::out_of_range("basis index " + std::to_string(i) + " out of range");
}

std::size_t TernarySystem::index3(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  return (i * dim_ + j) * dim_ + k;
}

void TernarySystem::set_ternary(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
  if (value.size() != dim_) throw std::invalid_argument("structure vector length != dim");
  ternary_[index3(i, j, k)] = is_zero(value) ? Vector{} : value;
}

void TernarySystem::add_ternary(std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                                const Scalar& c) {
  check_index(l);
  auto& slot = ternary_[index3(i, j, k)];
  if (slot.empty()) slot.assign(dim_, Scalar(0));
  slot[l] += c;
  if (is_zero(slot)) slot.clear();
}

void TernarySystem::set_binary(std::size_t i, std::size_t j, const Vector& value) {
  check_index(i);
  check_index(j);
  if (value.size() != dim_) throw std::invalid_argument("structure vector length != dim");
  binary_[i * dim_ + j] = is_zero(value) ? Vector{} : value;
}

void TernarySystem::add_binary(std::size_t i, std::size_t j, std::size_t l, const Scalar& c) {
  check_index(i);
  check_index(j);
  check_index(l);
  auto& slot = binary_[i * dim_ + j];
  if (slot.empty()) slot.assign(dim_, Scalar(0));
  slot[l] += c;
  if (is_zero(slot)) slot.clear();
}

const Vector& TernarySystem::ternary(std::size_t i, std::size_t j, std::size_t k) const {
  const auto& slot = ternary_[index3(i, j, k)];
  return slot.empty() ? zero_ : slot;
}

const Vector& TernarySystem::binary(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  const auto& slot = binary_[i * dim_ + j];
  return slot.empty() ? zero_ : slot;
}

bool TernarySystem::has_ternary() const {
  for (const auto& s : ternary_) {
    if (!s.empty()) return true;
  }
  return false;
}

bool TernarySystem::has_binary() const {
  for (const auto& s : binary_) {
    if (!s.empty()) return true;
  }
  return false;
}

Vector TernarySystem::bracket(const Vector& a, const Vector& b, const Vector& c) const {
  if (a.size() != dim_ || b.size() != dim_ || c.size() != dim_) {
    throw std::invalid_argument("bracket argument length != dim");
  }
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c[k] == 0) continue;
        const auto& slot = ternary_[(i * dim_ + j) * dim_ + k];
        if (!slot.empty()) axpy(out, ab * c[k], slot);
      }
    }
  }
  return out;
}

Vector TernarySystem::binary_bracket(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("bracket argument length != dim");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const auto& slot = binary_[i * dim_ + j];
      if (!slot.empty()) axpy(out, a[i] * b[j], slot);
    }
  }
  return out;
}

TernarySystem TernarySystem::scaled(const Scalar& factor) const {
  TernarySystem out = *this;
  for (auto& slot : out.ternary_) {
    if (slot.empty()) continue;
    if (factor == 0) {
      slot.clear();
    } else {
      for (auto& x : slot) x *= factor;
    }
  }
  return out;
}

Vector bracket_eval(const TernarySystem& t, const Vector& a, const Vector& b, const Vector& c) {
  return t.bracket(a, b, c);
}

std::string to_string(AxiomMode mode) {
  switch (mode) {
    case AxiomMode::lts: return "lts";
    case AxiomMode::bol: return "bol";
    case AxiomMode::malcev: return "malcev";
  }
  return "?";
}

AxiomMode parse_axiom_mode(const std::string& text) {
  if (text == "lts") return AxiomMode::lts;
  if (text == "bol") return AxiomMode::bol;
  if (text == "malcev") return AxiomMode::malcev;
  throw std::invalid_argument("unknown axiom mode '" + text + "'");
}

bool AxiomReport::ok() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

// Runs pred over every index tuple of the given arity; records the first
// failing tuple as the witness.
template <std::size_t Arity, typename Pred>
AxiomCheck run_check(std::string name, std::size_t dim, Pred&& pred) {
  AxiomCheck check{std::move(name), true, {}};
  std::array<std::size_t, Arity> idx{};
  if (dim == 0) return check;
  while (true) {
    if (!pred(idx)) {
      check.pass = false;
      check.witness.assign(idx.begin(), idx.end());
      return check;
    }
    std::size_t pos = Arity;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < dim) break;
      idx[pos] = 0;
      if (pos == 0) return check;
    }
  }
}

void check_ternary_axioms(const TernarySystem& t, AxiomReport& report) {
  const std::size_t n = t.dim();
  auto e = [n](std::size_t i) { return unit_vector(n, i); };

  report.checks.push_back(run_check<3>("[a,a,b] = 0", n, [&](const auto& ix) {
    return is_zero(add(t.ternary(ix[0], ix[1], ix[2]), t.ternary(ix[1], ix[0], ix[2])));
  }));

  report.checks.push_back(run_check<3>("[a,b,c] + [b,c,a] + [c,a,b] = 0", n, [&](const auto& ix) {
    Vector s = add(t.ternary(ix[0], ix[1], ix[2]), t.ternary(ix[1], ix[2], ix[0]));
    return is_zero(add(s, t.ternary(ix[2], ix[0], ix[1])));
  }));

  report.checks.push_back(
      run_check<5>("[x,y,[a,b,c]] = [[x,y,a],b,c] + [a,[x,y,b],c] + [a,b,[x,y,c]]", n, [&](const auto& ix) {
        const Vector x = e(ix[0]), y = e(ix[1]), a = e(ix[2]), b = e(ix[3]), c = e(ix[4]);
        Vector lhs = t.bracket(x, y, t.ternary(ix[2], ix[3], ix[4]));
        Vector rhs = t.bracket(t.ternary(ix[0], ix[1], ix[2]), b, c);
        axpy(rhs, 1, t.bracket(a, t.ternary(ix[0], ix[1], ix[3]), c));
        axpy(rhs, 1, t.bracket(a, b, t.ternary(ix[0], ix[1], ix[4])));
        return lhs == rhs;
      }));
}

void check_binary_skew(const TernarySystem& t, AxiomReport& report) {
  report.checks.push_back(run_check<2>("[a,b] = -[b,a]", t.dim(), [&](const auto& ix) {
    return is_zero(add(t.binary(ix[0], ix[1]), t.binary(ix[1], ix[0])));
  }));
}

Vector jacobian(const TernarySystem& t, const Vector& a, const Vector& b, const Vector& c) {
  Vector j = t.binary_bracket(t.binary_bracket(a, b), c);
  axpy(j, 1, t.binary_bracket(t.binary_bracket(b, c), a));
  axpy(j, 1, t.binary_bracket(t.binary_bracket(c, a), b));
  return j;
}

}  // namespace

AxiomReport check_axioms(const TernarySystem& t, AxiomMode mode) {
  AxiomReport report;
  report.mode = mode;
  const std::size_t n = t.dim();
  auto e = [n](std::size_t i) { return unit_vector(n, i); };

  switch (mode) {
    case AxiomMode::lts:
      check_ternary_axioms(t, report);
      report.checks.push_back(run_check<2>("[a,b] = 0", n, [&](const auto& ix) {
        return is_zero(t.binary(ix[0], ix[1]));
      }));
      break;
    case AxiomMode::bol:
      check_ternary_axioms(t, report);
      check_binary_skew(t, report);
      report.checks.push_back(run_check<4>(
          "[a,b,[x,y]] = [[a,b,x],y] + [x,[a,b,y]] + [x,y,[a,b]] + [[a,b],[x,y]]", n, [&](const auto& ix) {
            const Vector a = e(ix[0]), b = e(ix[1]), x = e(ix[2]), y = e(ix[3]);
            const Vector& xy = t.binary(ix[2], ix[3]);
            const Vector& ab = t.binary(ix[0], ix[1]);
            Vector lhs = t.bracket(a, b, xy);
            Vector rhs = t.binary_bracket(t.ternary(ix[0], ix[1], ix[2]), y);
            axpy(rhs, 1, t.binary_bracket(x, t.ternary(ix[0], ix[1], ix[3])));
            axpy(rhs, 1, t.bracket(x, y, ab));
            axpy(rhs, 1, t.binary_bracket(ab, xy));
            return lhs == rhs;
          }));
      break;
    case AxiomMode::malcev:
      if (t.has_ternary()) throw std::invalid_argument("malcev mode requires an empty ternary part");
      check_binary_skew(t, report);
      // f(a1,a2) = [J(a1,b,c),a2] - J(a1,b,[a2,c]); check f(a1,a2) + f(a2,a1) = 0.
      report.checks.push_back(run_check<4>("[J(a,b,c),a] = J(a,b,[a,c])", n, [&](const auto& ix) {
        const Vector a1 = e(ix[0]), a2 = e(ix[1]), b = e(ix[2]), c = e(ix[3]);
        auto f = [&](const Vector& p, const Vector& q) {
          Vector v = t.binary_bracket(jacobian(t, p, b, c), q);
          axpy(v, -1, jacobian(t, p, b, t.binary_bracket(q, c)));
          return v;
        };
        return is_zero(add(f(a1, a2), f(a2, a1)));
      }));
      break;
  }
  return report;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : ambient_dim_(ambient_dim) {
  RowEchelon ech(ambient_dim);
  for (const auto& v : spanning) ech.insert(v);
  vectors_ = ech.basis();
}

SubspaceBasis SubspaceBasis::whole(std::size_t n) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(unit_vector(n, i));
  return SubspaceBasis(n, vs);
}

bool SubspaceBasis::contains(const Vector& v) const {
  RowEchelon ech(ambient_dim_);
  for (const auto& b : vectors_) ech.insert(b);
  return ech.contains(v);
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  RowEchelon ech(ambient_dim_);
  for (const auto& b : vectors_) ech.insert(b);
  for (const auto& v : other.vectors()) {
    if (!ech.contains(v)) return false;
  }
  return true;
}

std::optional<Vector> SubspaceBasis::coordinates(const Vector& v) const {
  RowEchelon ech(ambient_dim_);
  for (const auto& b : vectors_) ech.insert(b);
  // vectors_ is already reduced, so the echelon rows coincide with it.
  return ech.coordinates(v);
}

SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  std::vector<Vector> all = a.vectors();
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  return SubspaceBasis(a.ambient_dim(), all);
}

SubspaceBasis intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
  // Solve sum x_i a_i - sum y_j b_j = 0 and map the kernel through a.
  const std::size_t n = a.ambient_dim();
  std::vector<Vector> cols = a.vectors();
  for (const auto& v : b.vectors()) cols.push_back(scale(-1, v));
  if (cols.empty()) return SubspaceBasis(n);
  std::vector<Vector> out;
  for (const auto& k : nullspace(Matrix::from_columns(n, cols))) {
    Vector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(v, k[i], a.vectors()[i]);
    out.push_back(std::move(v));
  }
  return SubspaceBasis(n, out);
}

SubspaceBasis bracket_span(const TernarySystem& t, const SubspaceBasis& a, const SubspaceBasis& b,
                           const SubspaceBasis& c) {
  RowEchelon ech(t.dim());
  for (const auto& u : a.vectors()) {
    for (const auto& v : b.vectors()) {
      for (const auto& w : c.vectors()) ech.insert(t.bracket(u, v, w));
    }
  }
  return SubspaceBasis(t.dim(), ech.basis());
}

SeriesResult lower_central_series(const TernarySystem& t, SeriesMode mode) {
  const SubspaceBasis whole = SubspaceBasis::whole(t.dim());
  SeriesResult result;
  SubspaceBasis current = bracket_span(t, whole, whole, whole);
  result.chain.push_back(current);
  while (!current.empty()) {
    SubspaceBasis next = mode == SeriesMode::nilpotency
                             ? span_sum(bracket_span(t, current, whole, whole),
                                        bracket_span(t, whole, whole, current))
                             : bracket_span(t, current, current, whole);
    if (next == current) break;
    current = std::move(next);
    result.chain.push_back(current);
  }
  result.reaches_zero = current.empty();
  return result;
}

SubspaceBasis ideal_closure(const TernarySystem& t, const SubspaceBasis& s) {
  const std::size_t n = t.dim();
  RowEchelon ech(n);
  std::vector<Vector> work;
  for (const auto& v : s.vectors()) {
    if (ech.insert(v)) work.push_back(v);
  }
  while (!work.empty()) {
    Vector u = std::move(work.back());
    work.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = unit_vector(n, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ek = unit_vector(n, k);
        for (Vector w : {t.bracket(u, ej, ek), t.bracket(ej, u, ek), t.bracket(ej, ek, u)}) {
          if (ech.insert(w)) work.push_back(std::move(w));
        }
      }
    }
  }
  return SubspaceBasis(n, ech.basis());
}

bool is_simple(const TernarySystem& t) {
  const std::size_t n = t.dim();
  if (!t.has_ternary()) return false;
  std::vector<Vector> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) probes.push_back(add(unit_vector(n, i), unit_vector(n, j)));
  }
  for (const auto& p : probes) {
    if (ideal_closure(t, SubspaceBasis(n, {p})).dim() != n) return false;
  }
  return true;
}

TernarySystem malcev_to_bol(const TernarySystem& m) {
  if (!check_axioms(m, AxiomMode::malcev).ok()) {
    throw std::invalid_argument("malcev_to_bol: input is not a Malcev algebra");
  }
  const std::size_t n = m.dim();
  TernarySystem out(n, m.names());
  out.set_label(m.label().empty() ? std::string{} : m.label() + "-bol");
  const Scalar third = make_scalar(1, 3);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector a = unit_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector b = unit_vector(n, j);
      out.set_binary(i, j, m.binary(i, j));
      for (std::size_t k = 0; k < n; ++k) {
        const Vector c = unit_vector(n, k);
        Vector v = m.binary_bracket(m.binary(i, j), c);
        axpy(v, -third, jacobian(m, a, b, c));
        out.set_ternary(i, j, k, v);
      }
    }
  }
  return out;
}

TernarySystem restrict_to(const TernarySystem& t, const SubspaceBasis& s) {
  const std::size_t k = s.dim();
  TernarySystem out(k);
  out.set_label(t.label().empty() ? std::string{} : t.label() + "|sub");
  const auto& vs = s.vectors();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        auto coords = s.coordinates(t.bracket(vs[i], vs[j], vs[l]));
        if (!coords) throw std::invalid_argument("restrict_to: subspace not closed under the bracket");
        out.set_ternary(i, j, l, *coords);
      }
      auto bin = s.coordinates(t.binary_bracket(vs[i], vs[j]));
      if (!bin) throw std::invalid_argument("restrict_to: subspace not closed under the binary bracket");
      out.set_binary(i, j, *bin);
    }
  }
  return out;
}

}  // namespace ltsenv
