#include "ltsenv/nucleus_lab.hpp"

#include <array>
#include <functional>

#include "ltsenv/polynomial.hpp"

namespace ltsenv {

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

// Kernel of the linear map x -> conditions(x), given by its values on the
// standard basis.
SubspaceBasis solve_conditions(std::size_t n, const std::function<Vector(const Vector&)>& conditions) {
  std::vector<Vector> columns;
  columns.reserve(n);
  for (std::size_t i = 0; i < n; ++i) columns.push_back(conditions(e(n, i)));
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  return SubspaceBasis(n, nullspace(Matrix::from_columns(rows, columns)));
}

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

SubspaceBasis products(const FinAlgebra& a, const SubspaceBasis& x, const SubspaceBasis& y) {
  std::vector<Vector> out;
  for (const auto& u : x.vectors()) {
    for (const auto& v : y.vectors()) out.push_back(a.multiply(u, v));
  }
  return SubspaceBasis(a.dim(), out);
}

bool commutes(const FinAlgebra& a, const SubspaceBasis& s) {
  for (const auto& u : s.vectors()) {
    for (const auto& v : s.vectors()) {
      if (a.multiply(u, v) != a.multiply(v, u)) return false;
    }
  }
  return true;
}

bool subsystem_closed(const FinAlgebra& a, const SubspaceBasis& s) {
  try {
    induced_system(a, s);
    return true;
  } catch (const InducedBracketNotClosed&) {
    return false;
  }
}

std::string dims(const SubspaceBasis& s) { return "dim " + std::to_string(s.dim()); }

}  // namespace

FinAlgebra::FinAlgebra(std::size_t dim, std::vector<Vector> table, std::size_t unit_index,
                       std::vector<std::string> names, std::string label)
    : dim_(dim), table_(std::move(table)), unit_(unit_index), names_(std::move(names)), label_(std::move(label)) {
  if (dim_ == 0) throw std::invalid_argument("algebra dimension must be positive");
  if (table_.size() != dim_ * dim_) throw std::invalid_argument("multiplication table must have dim^2 entries");
  for (const auto& v : table_) {
    if (v.size() != dim_) throw std::invalid_argument("product vector length != dim");
  }
  if (unit_ >= dim_) throw std::invalid_argument("unit index out of range");
  if (!names_.empty() && names_.size() != dim_) throw std::invalid_argument("basis name count != dim");
  for (std::size_t i = 0; i < dim_; ++i) {
    if (product(unit_, i) != e(dim_, i) || product(i, unit_) != e(dim_, i)) {
      throw std::invalid_argument("basis vector " + std::to_string(unit_) + " is not a two-sided unit (fails on " +
                                  name(i) + ")");
    }
  }
}

std::string FinAlgebra::name(std::size_t i) const {
  if (i >= dim_) throw std::out_of_range("basis index");
  return names_.empty() ? "e" + std::to_string(i) : names_[i];
}

Vector FinAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] != 0) axpy(out, x[i] * y[j], product(i, j));
    }
  }
  return out;
}

Vector FinAlgebra::associator(const Vector& x, const Vector& y, const Vector& z) const {
  return sub(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
}

Matrix FinAlgebra::left_mult(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(a, e(dim_, j)));
  return Matrix::from_columns(dim_, cols);
}

Matrix FinAlgebra::right_mult(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(e(dim_, j), a));
  return Matrix::from_columns(dim_, cols);
}

namespace algebras {

namespace {

struct Builder {
  std::size_t n;
  std::vector<Vector> table;
  explicit Builder(std::size_t dim) : n(dim), table(dim * dim, Vector(dim)) {
    for (std::size_t i = 0; i < n; ++i) {
      table[i] = e(n, i);
      table[i * n] = e(n, i);
    }
  }
  void set(std::size_t i, std::size_t j, Vector v) { table[i * n + j] = std::move(v); }
};

}  // namespace

FinAlgebra truncated_polynomial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("truncated polynomial needs n >= 1");
  Builder b(n);
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < n; ++i) names.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) b.set(i, j, i + j < n ? e(n, i + j) : Vector(n));
  }
  return FinAlgebra(n, b.table, 0, names, "truncated:" + std::to_string(n));
}

FinAlgebra product_ff() {
  Builder b(2);
  b.set(1, 1, {1, 0});
  return FinAlgebra(2, b.table, 0, {"1", "u"}, "FxF");
}

FinAlgebra idempotent() {
  Builder b(2);
  b.set(1, 1, {0, 1});
  return FinAlgebra(2, b.table, 0, {"1", "x"}, "idempotent");
}

FinAlgebra mat2() {
  // 1, E11, E12, E21 with E22 = 1 - E11
  Builder b(4);
  b.set(1, 1, {0, 1, 0, 0});
  b.set(1, 2, {0, 0, 1, 0});
  b.set(1, 3, {0, 0, 0, 0});
  b.set(2, 1, {0, 0, 0, 0});
  b.set(2, 2, {0, 0, 0, 0});
  b.set(2, 3, {0, 1, 0, 0});
  b.set(3, 1, {0, 0, 0, 1});
  b.set(3, 2, {1, -1, 0, 0});
  b.set(3, 3, {0, 0, 0, 0});
  return FinAlgebra(4, b.table, 0, {"1", "E11", "E12", "E21"}, "mat2");
}

FinAlgebra octonions() {
  static constexpr std::array<std::array<std::size_t, 3>, 7> kTriples{{
      {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};
  Builder b(8);
  for (std::size_t i = 1; i < 8; ++i) b.set(i, i, scale(-1, e(8, 0)));
  for (const auto& t : kTriples) {
    for (std::size_t r = 0; r < 3; ++r) {
      const std::size_t i = t[r], j = t[(r + 1) % 3], k = t[(r + 2) % 3];
      b.set(i, j, e(8, k));
      b.set(j, i, scale(-1, e(8, k)));
    }
  }
  return FinAlgebra(8, b.table, 0, {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"}, "octonions");
}

FinAlgebra nonassociative3() {
  Builder b(3);
  b.set(1, 1, {0, 0, 1});
  b.set(1, 2, {0, 0, 0});
  b.set(2, 1, {0, 1, 0});
  b.set(2, 2, {0, 0, 0});
  return FinAlgebra(3, b.table, 0, {"1", "e1", "e2"}, "nonassoc3");
}

FinAlgebra by_name(const std::string& name) {
  if (name == "FxF") return product_ff();
  if (name == "idempotent") return idempotent();
  if (name == "mat2") return mat2();
  if (name == "octonions") return octonions();
  if (name == "nonassoc3") return nonassociative3();
  const std::string prefix = "truncated:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string arg = name.substr(prefix.size());
    if (!arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos) {
      return truncated_polynomial(std::stoul(arg));
    }
  }
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> entries() {
  return {
      {"truncated:N", "F[x]/(x^N), basis 1, x, ..., x^(N-1)"},
      {"FxF", "F x F, basis 1 = (1,1), u = (1,-1)"},
      {"idempotent", "F[x]/(x^2 - x)"},
      {"mat2", "2x2 matrices, basis 1, E11, E12, E21"},
      {"octonions", "octonions with e_i^2 = -1 and Fano-plane products, basis 1, e1..e7"},
      {"nonassoc3", "3-dim unital table with e1 e1 = e2, e2 e1 = e1"},
  };
}

}  // namespace algebras

Nuclei nuclei(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  auto over_pairs = [&](auto&& assoc) {
    return [&, assoc](const Vector& x) {
      Vector out;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) append(out, assoc(x, e(n, j), e(n, k)));
      }
      return out;
    };
  };
  Nuclei r;
  r.left = solve_conditions(n, over_pairs([&](const Vector& x, const Vector& y, const Vector& z) {
                              return a.associator(x, y, z);
                            }));
  r.middle = solve_conditions(n, over_pairs([&](const Vector& x, const Vector& y, const Vector& z) {
                                return a.associator(y, x, z);
                              }));
  r.right = solve_conditions(n, over_pairs([&](const Vector& x, const Vector& y, const Vector& z) {
                               return a.associator(y, z, x);
                             }));
  const SubspaceBasis commuting = solve_conditions(n, [&](const Vector& x) {
    Vector out;
    for (std::size_t j = 0; j < n; ++j) append(out, sub(a.multiply(x, e(n, j)), a.multiply(e(n, j), x)));
    return out;
  });
  r.center = intersection(intersection(commuting, r.left), intersection(r.middle, r.right));
  return r;
}

Vector induced_bracket(const FinAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  Vector out = a.multiply(x, a.multiply(y, z));
  axpy(out, -1, a.multiply(y, a.multiply(x, z)));
  axpy(out, -1, a.multiply(z, a.multiply(x, y)));
  axpy(out, 1, a.multiply(z, a.multiply(y, x)));
  return out;
}

TernarySystem induced_system(const FinAlgebra& a, const SubspaceBasis& s) {
  const auto& basis = s.vectors();
  const std::size_t m = basis.size();
  TernarySystem t(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Vector v = induced_bracket(a, basis[i], basis[j], basis[k]);
        auto coords = s.coordinates(v);
        if (!coords) {
          throw InducedBracketNotClosed("induced bracket of basis vectors " + std::to_string(i) + ", " +
                                        std::to_string(j) + ", " + std::to_string(k) + " leaves the subspace");
        }
        t.set_ternary(i, j, k, *coords);
      }
    }
  }
  return t;
}

LnAlt ln_alt(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  LnAlt r;
  r.space = solve_conditions(n, [&](const Vector& x) {
    Vector out;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) append(out, add(a.associator(x, e(n, j), e(n, k)), a.associator(e(n, j), x, e(n, k))));
    }
    return out;
  });
  r.system = induced_system(a, r.space);
  r.system.set_label("LN_alt(" + a.label() + ")");
  return r;
}

SubspaceBasis n_alt(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  return solve_conditions(n, [&](const Vector& x) {
    Vector out;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector first = a.associator(x, e(n, j), e(n, k));
        append(out, add(first, a.associator(e(n, j), x, e(n, k))));
        append(out, sub(first, a.associator(e(n, j), e(n, k), x)));
      }
    }
    return out;
  });
}

bool check_tder(const FinAlgebra& a, const TernaryDerivation& t) {
  const std::size_t n = a.dim();
  for (const Matrix* m : {&t.d1, &t.d2, &t.d3}) {
    if (m->rows() != n || m->cols() != n) throw std::invalid_argument("ternary derivation components must be dim x dim");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = e(n, i), y = e(n, j);
      const Vector lhs = t.d1.apply(a.multiply(x, y));
      const Vector rhs = add(a.multiply(t.d2.apply(x), y), a.multiply(x, t.d3.apply(y)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool lnalt_membership_via_tder(const FinAlgebra& a, const Vector& x) {
  const Matrix l = a.left_mult(x);
  return check_tder(a, {l, l + a.right_mult(x), Scalar(-1) * l});
}

JcElement jc_element(const FinAlgebra& a, const Vector& x) {
  if (!lnalt_membership_via_tder(a, x)) throw std::invalid_argument("jc_element: element is not in LN_alt(A)");
  const auto jc = jordan_chevalley(a.left_mult(x));
  JcElement r{jc.semisimple.apply(a.unit()), jc.nilpotent.apply(a.unit())};
  if (a.left_mult(r.semisimple) != jc.semisimple || a.left_mult(r.nilpotent) != jc.nilpotent) {
    throw std::domain_error("jc_element: semisimple part of L_a is not a left multiplication");
  }
  if (!lnalt_membership_via_tder(a, r.semisimple) || !lnalt_membership_via_tder(a, r.nilpotent)) {
    throw std::domain_error("jc_element: Jordan-Chevalley parts left LN_alt(A)");
  }
  return r;
}

SubspaceBasis generated_subalgebra(const FinAlgebra& a, const SubspaceBasis& s, bool unital) {
  SubspaceBasis cur = s;
  if (unital) cur = span_sum(cur, SubspaceBasis(a.dim(), {a.unit()}));
  while (true) {
    SubspaceBasis next = span_sum(cur, products(a, cur, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

SubspaceBasis generated_ideal(const FinAlgebra& a, const SubspaceBasis& s) {
  const SubspaceBasis all = SubspaceBasis::whole(a.dim());
  SubspaceBasis cur = s;
  while (true) {
    SubspaceBasis next = span_sum(cur, span_sum(products(a, all, cur), products(a, cur, all)));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<SubspaceBasis> algebra_powers(const FinAlgebra& a, const SubspaceBasis& b) {
  std::vector<SubspaceBasis> p{b};
  while (!p.back().empty()) {
    const std::size_t k = p.size() + 1;
    SubspaceBasis next(a.dim());
    for (std::size_t i = 1; i < k; ++i) next = span_sum(next, products(a, p[i - 1], p[k - i - 1]));
    if (next == p.back()) break;
    p.push_back(std::move(next));
  }
  return p;
}

bool is_nilpotent_subalgebra(const FinAlgebra& a, const SubspaceBasis& b) { return algebra_powers(a, b).back().empty(); }

bool in_center(const FinAlgebra& a, const SubspaceBasis& s) {
  const std::size_t n = a.dim();
  for (const auto& u : s.vectors()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a.multiply(u, e(n, i)) != a.multiply(e(n, i), u)) return false;
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(a.associator(u, e(n, i), e(n, j))) || !is_zero(a.associator(e(n, i), u, e(n, j))) ||
            !is_zero(a.associator(e(n, i), e(n, j), u))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool DecompositionReport::verdict() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

DecompositionReport theorem_decompose(const FinAlgebra& a, const SubspaceBasis& v) {
  const std::size_t n = a.dim();
  if (v.ambient_dim() != n) throw PreconditionViolated("V must be a subspace of A");
  const LnAlt ln = ln_alt(a);
  if (!ln.space.contains(v)) throw PreconditionViolated("V is not contained in LN_alt(A)");
  if (!subsystem_closed(a, v)) throw PreconditionViolated("V is not closed under the induced ternary bracket");
  if (!commutes(a, v)) throw PreconditionViolated("ab != ba for some a, b in V");
  if (generated_subalgebra(a, v, true) != SubspaceBasis::whole(n)) {
    throw PreconditionViolated("V does not generate A as a unital algebra");
  }

  DecompositionReport rep;
  auto check = [&rep](std::string name, bool pass, std::string detail = {}) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const TernarySystem vs = induced_system(a, v);
  rep.v_nilpotent = lower_central_series(vs, SeriesMode::nilpotency).reaches_zero;
  check("V is nilpotent", rep.v_nilpotent,
        rep.v_nilpotent ? "" : "a non-nilpotent V cannot satisfy all hypotheses at once");

  // JC parts of the basis of V.
  std::vector<Vector> semis, nils;
  bool l36 = true;
  std::string l36_detail;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Vector& x = v.vectors()[i];
    JcElement p;
    try {
      p = jc_element(a, x);
    } catch (const std::exception& ex) {
      l36 = false;
      l36_detail = ex.what();
      continue;
    }
    const bool ok = add(p.semisimple, p.nilpotent) == x &&
                    commutator(a.left_mult(p.semisimple), a.left_mult(p.nilpotent)).is_zero() &&
                    ln.space.contains(p.semisimple) && ln.space.contains(p.nilpotent);
    if (!ok && l36) l36_detail = "basis vector " + std::to_string(i);
    l36 = l36 && ok;
    semis.push_back(p.semisimple);
    nils.push_back(p.nilpotent);
  }
  check("JC parts: a = a_s + a_n, L_{a_s} = (L_a)_s, parts in LN_alt", l36, l36_detail);

  // V_hat = {a_s + b_n}.
  std::vector<Vector> hat_span = semis;
  hat_span.insert(hat_span.end(), nils.begin(), nils.end());
  rep.v_hat = SubspaceBasis(n, hat_span);
  const SubspaceBasis& vh = rep.v_hat;
  check("V_hat contains V", vh.contains(v), dims(vh));
  check("V_hat in LN_alt(A)", ln.space.contains(vh));
  const bool vh_closed = subsystem_closed(a, vh);
  check("V_hat is a subsystem", vh_closed);
  check("V_hat commutative", commutes(a, vh));
  if (vh_closed) {
    check("V_hat nilpotent",
          lower_central_series(induced_system(a, vh), SeriesMode::nilpotency).reaches_zero);
  }
  bool parts_inside = true, semis_central = true;
  std::vector<Vector> hat_nils;
  for (const auto& x : vh.vectors()) {
    try {
      const JcElement p = jc_element(a, x);
      parts_inside = parts_inside && vh.contains(p.semisimple) && vh.contains(p.nilpotent);
      semis_central = semis_central && in_center(a, SubspaceBasis(n, {p.semisimple}));
      hat_nils.push_back(p.nilpotent);
    } catch (const std::exception&) {
      parts_inside = false;
    }
  }
  check("V_hat contains a_s and a_n of its elements", parts_inside);
  check("a_s in Z(A) for a in V_hat", semis_central);
  const SubspaceBasis nil_part(n, hat_nils);
  bool nil_ideal = vh.contains(nil_part);
  for (const auto& x : nil_part.vectors()) {
    for (const auto& y : vh.vectors()) {
      for (const auto& z : vh.vectors()) {
        nil_ideal = nil_ideal && nil_part.contains(induced_bracket(a, x, y, z)) &&
                    nil_part.contains(induced_bracket(a, y, x, z)) && nil_part.contains(induced_bracket(a, y, z, x));
      }
    }
  }
  check("{a_n} is an ideal of V_hat", nil_ideal, dims(nil_part));

  // Nilpotent parts generate a nilpotent subalgebra.
  bool all_nil = true;
  for (const auto& x : nil_part.vectors()) {
    try {
      all_nil = all_nil && is_zero(jc_element(a, x).semisimple);
    } catch (const std::exception&) {
      all_nil = false;
    }
  }
  const bool hyp38 = all_nil && commutes(a, nil_part) && subsystem_closed(a, nil_part);
  const SubspaceBasis nil_alg = generated_subalgebra(a, nil_part, false);
  check("alg<a_n> is nilpotent", hyp38 && is_nilpotent_subalgebra(a, nil_alg),
        hyp38 ? dims(nil_alg) : "hypotheses a = a_n, [a,b] = 0 fail");

  // Decomposition.
  rep.q = generated_subalgebra(a, SubspaceBasis(n, semis), true);
  rep.r = generated_ideal(a, SubspaceBasis(n, nils));
  check("A = Q + R", span_sum(rep.q, rep.r) == SubspaceBasis::whole(n), dims(rep.q) + ", " + dims(rep.r));
  check("Q and R intersect in 0", intersection(rep.q, rep.r).empty());
  check("R is a nilpotent ideal", generated_ideal(a, rep.r) == rep.r && is_nilpotent_subalgebra(a, rep.r));
  check("Q is central", in_center(a, rep.q));
  // Reduced commutative algebras in characteristic 0 are exactly those with
  // a nondegenerate trace form.
  const auto& qb = rep.q.vectors();
  Matrix trace_form(qb.size(), qb.size());
  for (std::size_t i = 0; i < qb.size(); ++i) {
    for (std::size_t j = 0; j < qb.size(); ++j) {
      const Matrix m = a.left_mult(qb[i]) * a.left_mult(qb[j]);
      Scalar tr = 0;
      for (std::size_t k = 0; k < n; ++k) tr += m.at(k, k);
      trace_form.set(i, j, tr);
    }
  }
  check("Q has no nonzero nilpotent elements", rank(trace_form) == qb.size());
  return rep;
}

}  // namespace ltsenv
