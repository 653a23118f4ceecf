#include "ltsenv/ideal_lab.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "ltsenv/catalog.hpp"

namespace ltsenv {

namespace {

using RowKey = std::pair<std::size_t, Word>;

// Columns given as sparse maps from row keys; rows are numbered in key order.
class SparseSystem {
 public:
  void add_column(std::map<RowKey, Scalar> col) { cols_.push_back(std::move(col)); }

  Matrix matrix() const {
    std::map<RowKey, std::size_t> index;
    for (const auto& col : cols_) {
      for (const auto& kv : col) index.emplace(kv.first, 0);
    }
    std::size_t next = 0;
    for (auto& kv : index) kv.second = next++;
    Matrix m(index.size(), cols_.size());
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      for (const auto& [k, c] : cols_[j]) m.set(index.at(k), j, c);
    }
    return m;
  }

 private:
  std::vector<std::map<RowKey, Scalar>> cols_;
};

void put(std::map<RowKey, Scalar>& col, std::size_t tag, const UVElement& u, int only_degree = -1) {
  for (const auto& [w, c] : u.terms()) {
    if (only_degree >= 0 && static_cast<int>(w.size()) != only_degree) continue;
    col[{tag, w}] += c;
  }
}

UVElement combine(const EnvelopeSession& s, const std::vector<Word>& monos, const Vector& coeffs) {
  Terms t;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (coeffs[i] != 0) add_term(t, monos[i], coeffs[i]);
  }
  return s.element(std::move(t));
}

std::vector<Letter> exponents(const Word& m, std::size_t n) {
  std::vector<Letter> e(n, 0);
  for (Letter l : m) ++e[l];
  return e;
}

Word from_exponents(const std::vector<Letter>& e) {
  Word w;
  for (std::size_t i = 0; i < e.size(); ++i) w.insert(w.end(), e[i], static_cast<Letter>(i));
  return w;
}

std::string word_name(const EnvelopeSession& s, const Word& w) { return s.to_string(s.monomial(w)); }

template <typename F>
UVElement sum_pairs(const EnvelopeSession& s, const UVTensor& t, F&& f) {
  UVElement acc(&s, {});
  for (const auto& [l, r] : s.tensor_pairs(t)) acc += f(l, r);
  return acc;
}

SuiteCheck named(std::string name) {
  SuiteCheck c;
  c.name = std::move(name);
  return c;
}

void fail(SuiteCheck& c, const std::string& witness) {
  if (c.pass) {
    c.pass = false;
    c.witness = witness;
  }
}

}  // namespace

std::vector<Word> monomials_up_to(std::size_t letters, unsigned max_degree) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (unsigned d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      const Letter start = w.empty() ? 0 : w.back();
      for (std::size_t l = start; l < letters; ++l) {
        Word v = w;
        v.push_back(static_cast<Letter>(l));
        next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string to_string(CentralizerMethod m) { return m == CentralizerMethod::split ? "split" : "full"; }

CentralizerReport truncated_centralizer(const EnvelopeSession& s, unsigned degree_bound, CentralizerMethod method) {
  if (degree_bound < 1) throw std::invalid_argument("truncated_centralizer: degree bound must be >= 1");
  const std::size_t n = s.dim();
  CentralizerReport rep;
  rep.system = s.system().label();
  rep.degree_bound = degree_bound;
  rep.method = method;

  const auto all = monomials_up_to(n, degree_bound);
  rep.monomial_count = all.size();

  // commutators [m, a] for every monomial, computed once
  std::vector<std::vector<UVElement>> comm(all.size());
  for (std::size_t j = 0; j < all.size(); ++j) {
    const auto m = s.monomial(all[j]);
    for (std::size_t g = 0; g < n; ++g) comm[j].push_back(s.commutator(m, s.generator(g)));
  }

  auto solve_on = [&](const std::vector<std::size_t>& cols) {
    SparseSystem sys;
    for (std::size_t j : cols) {
      std::map<RowKey, Scalar> col;
      for (std::size_t g = 0; g < n; ++g) put(col, g, comm[j][g]);
      sys.add_column(std::move(col));
    }
    std::vector<Word> monos;
    for (std::size_t j : cols) monos.push_back(all[j]);
    Matrix m = sys.matrix();
    if (m.rows() == 0) m = Matrix(1, cols.size());
    for (const auto& v : nullspace(m)) rep.basis.push_back(combine(s, monos, v));
  };

  bool need_full = method == CentralizerMethod::full;
  if (!need_full) {
    for (unsigned d = 2; d <= degree_bound; ++d) {
      SparseSystem top;
      std::size_t count = 0;
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (all[j].size() != d) continue;
        std::map<RowKey, Scalar> col;
        for (std::size_t g = 0; g < n; ++g) put(col, g, comm[j][g], static_cast<int>(d) - 1);
        top.add_column(std::move(col));
        ++count;
      }
      Matrix m = top.matrix();
      std::size_t k = m.rows() == 0 ? count : count - rank(m);
      rep.top_kernel_dims.push_back(k);
      if (k != 0) need_full = true;
    }
  }
  rep.used_full_system = need_full;

  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < all.size(); ++j) {
    if (need_full || all[j].size() <= 1) cols.push_back(j);
  }
  solve_on(cols);

  rep.sound = true;
  rep.verdict = true;
  for (const auto& u : rep.basis) {
    for (std::size_t g = 0; g < n; ++g) {
      const auto a = s.generator(g);
      if (!(uv_multiply(u, a) == uv_multiply(a, u))) rep.sound = false;
    }
    if (u.degree() > 1) rep.verdict = false;
  }
  return rep;
}

UVElement leading_commutator_prediction(const EnvelopeSession& s, const Vector& a, const Word& m) {
  const std::size_t n = s.dim();
  const auto alpha = exponents(m, n);
  Terms out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto e = alpha;
      Scalar c;
      if (i == j) {
        if (e[i] < 2) continue;
        c = Scalar(e[i]) * Scalar(e[i] - 1);
        e[i] -= 2;
      } else {
        if (e[i] < 1 || e[j] < 1) continue;
        c = Scalar(e[i]) * Scalar(e[j]);
        --e[i];
        --e[j];
      }
      const Vector br = s.system().bracket(a, unit_vector(n, i), unit_vector(n, j));
      for (std::size_t l = 0; l < n; ++l) {
        if (br[l] == 0) continue;
        auto f = e;
        ++f[l];
        add_term(out, from_exponents(f), Scalar(1, 2) * c * br[l]);
      }
    }
  }
  return s.element(std::move(out));
}

LeadingTermCheck check_leading_term(const EnvelopeSession& s, const Vector& a, const Word& m) {
  LeadingTermCheck r;
  r.prediction = leading_commutator_prediction(s, a, m);
  const auto av = s.from_vector(a);
  const auto mv = s.monomial(m);
  r.actual = av * mv - mv * av;
  const auto diff = r.actual - r.prediction;
  r.pass = diff.is_zero() || diff.degree() <= static_cast<int>(m.size()) - 2;
  return r;
}

So3Determinant so3_condition_det(unsigned n, unsigned p, unsigned q) {
  const Scalar N(n), P(p), Q(q);
  So3Determinant r;
  r.matrix = Matrix::from_dense({
      {-(P + Q) * (N + 2), (P + 1) * (P + 2), (Q + 1) * (Q + 2)},
      {(N + 1) * (N + 2), -(N + Q) * (P + 2), (Q + 1) * (Q + 2)},
      {(N + 1) * (N + 2), (P + 1) * (P + 2), -(N + P) * (Q + 2)},
  });
  r.det = determinant(r.matrix);
  const Scalar s = N + P + Q + 1;
  r.formula = 2 * (N + 2) * (P + 2) * (Q + 2) * s * s;
  r.equal = r.det == r.formula;
  return r;
}

bool SuiteReport::ok() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

bool is_s2(const TernarySystem& t) {
  const auto ref = catalog::s2();
  if (t.dim() != ref.dim() || t.has_binary()) return false;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        const auto a = unit_vector(2, i), b = unit_vector(2, j), c = unit_vector(2, k);
        if (t.bracket(a, b, c) != ref.bracket(a, b, c)) return false;
      }
    }
  }
  return true;
}

SuiteReport lemma_suite(const EnvelopeSession& s, unsigned bound) {
  SuiteReport rep;
  rep.system = s.system().label();
  rep.bound = bound;
  const std::size_t n = s.dim();
  const auto small = monomials_up_to(n, std::min(bound, 2u));
  const auto tiny = monomials_up_to(n, 1);

  if (is_s2(s.system())) {
    auto c = named("[e^n, f] = n(n-1) e^(n-1)");
    const auto f = s.generator(1);
    for (unsigned k = 1; k <= bound; ++k) {
      const auto en = s.monomial(Word(k, 0));
      const auto lhs = en * f - f * en;
      const auto rhs = s.monomial(Word(k - 1, 0), Scalar(k) * Scalar(k - 1));
      ++c.cases;
      if (!(lhs == rhs)) fail(c, "n=" + std::to_string(k) + ": " + s.to_string(lhs) + " vs " + s.to_string(rhs));
    }
    rep.checks.push_back(c);
  }

  {
    auto c = named("L_{a^p} L_{a^q} = L_{a^(p+q)}");
    for (std::size_t g = 0; g < n; ++g) {
      const auto a = s.generator(g);
      std::vector<UVElement> pw{s.one()};
      for (unsigned k = 1; k <= bound; ++k) pw.push_back(a * pw.back());
      for (const auto& w : small) {
        const auto x = s.monomial(w);
        for (unsigned p = 0; p <= bound; ++p) {
          for (unsigned q = 0; p + q <= bound; ++q) {
            ++c.cases;
            if (!(pw[p] * (pw[q] * x) == pw[p + q] * x)) {
              fail(c, "a=" + s.system().name(g) + " p=" + std::to_string(p) + " q=" + std::to_string(q) +
                          " x=" + word_name(s, w));
            }
          }
        }
      }
    }
    rep.checks.push_back(c);
  }

  {
    auto bol = named("Bol-Hopf: sum a1(y(a2 z)) = sum (a1(y a2)) z");
    auto alt = named("left alternative: (a,y,z) = -(y,a,z)");
    auto lowers = named("[a, U_n] in U_(n-1)");
    for (std::size_t g = 0; g < n; ++g) {
      const auto a = s.generator(g);
      const auto da = s.uv_coproduct(a);
      for (const auto& wy : small) {
        const auto y = s.monomial(wy);
        const auto cm = s.commutator(a, y);
        ++lowers.cases;
        if (!cm.is_zero() && cm.degree() > static_cast<int>(wy.size()) - 1) {
          fail(lowers, "a=" + s.system().name(g) + " m=" + word_name(s, wy));
        }
        for (const auto& wz : small) {
          const auto z = s.monomial(wz);
          const std::string tag = "a=" + s.system().name(g) + " y=" + word_name(s, wy) + " z=" + word_name(s, wz);
          const auto lhs = sum_pairs(s, da, [&](const UVElement& a1, const UVElement& a2) { return a1 * (y * (a2 * z)); });
          const auto rhs = sum_pairs(s, da, [&](const UVElement& a1, const UVElement& a2) { return (a1 * (y * a2)) * z; });
          ++bol.cases;
          if (!(lhs == rhs)) fail(bol, tag);
          ++alt.cases;
          if (!(s.associator(a, y, z) == -s.associator(y, a, z))) fail(alt, tag);
        }
      }
    }
    rep.checks.push_back(bol);
    rep.checks.push_back(alt);
    rep.checks.push_back(lowers);
  }

  {
    auto unit = named("x\\1 = S(x)");
    auto div = named("sum x1\\(x2 y) = eps(x) y");
    for (const auto& wx : small) {
      const auto x = s.monomial(wx);
      ++unit.cases;
      if (!(s.left_divide(x, s.one()) == s.s_automorphism(x))) fail(unit, "x=" + word_name(s, wx));
      const auto dx = s.uv_coproduct(x);
      for (const auto& wy : tiny) {
        const auto y = s.monomial(wy);
        const auto lhs = sum_pairs(s, dx, [&](const UVElement& a, const UVElement& b) { return s.left_divide(a, b * y); });
        ++div.cases;
        if (!(lhs == EnvelopeSession::uv_counit(x) * y)) fail(div, "x=" + word_name(s, wx) + " y=" + word_name(s, wy));
      }
    }
    rep.checks.push_back(unit);
    rep.checks.push_back(div);
  }

  {
    auto c = named("delta_{a,b}(c) = 1/2 [a,b,c]");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t k = 0; k < n; ++k) {
          const Vector br = s.system().bracket(unit_vector(n, a), unit_vector(n, b), unit_vector(n, k));
          ++c.cases;
          if (!(s.delta_map(s.generator(a), s.generator(b), s.generator(k)) == s.from_vector(scale(Scalar(1, 2), br)))) {
            fail(c, s.system().name(a) + "," + s.system().name(b) + "," + s.system().name(k));
          }
        }
      }
    }
    rep.checks.push_back(c);
  }
  return rep;
}

BoundedNuclei bounded_nuclei(const EnvelopeSession& s, unsigned degree, unsigned test_degree) {
  BoundedNuclei out;
  out.monomials = monomials_up_to(s.dim(), degree);
  const auto tests = monomials_up_to(s.dim(), test_degree);
  SparseSystem left, middle;
  for (const auto& w : out.monomials) {
    const auto u = s.monomial(w);
    std::map<RowKey, Scalar> lc, mc;
    std::size_t tag = 0;
    for (const auto& wy : tests) {
      for (const auto& wz : tests) {
        const auto y = s.monomial(wy), z = s.monomial(wz);
        put(lc, tag, s.associator(u, y, z));
        put(mc, tag, s.associator(y, u, z));
        ++tag;
      }
    }
    left.add_column(std::move(lc));
    middle.add_column(std::move(mc));
  }
  const std::size_t cols = out.monomials.size();
  auto kernel = [&](const SparseSystem& sys) {
    Matrix m = sys.matrix();
    if (m.rows() == 0) m = Matrix(1, cols);
    return SubspaceBasis(cols, nullspace(m));
  };
  out.left = kernel(left);
  out.middle = kernel(middle);
  return out;
}

CenterCheck center_lemma_check(const EnvelopeSession& s, unsigned degree) {
  const std::size_t n = s.dim();
  const auto monos = monomials_up_to(n, degree);
  SparseSystem sys;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = s.generator(i);
    std::map<RowKey, Scalar> col;
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = s.generator(j);
      for (std::size_t k = 0; k < monos.size(); ++k) {
        const auto x = s.monomial(monos[k]);
        put(col, j * monos.size() + k, a * (b * x) - b * (a * x));
      }
    }
    sys.add_column(std::move(col));
  }
  Matrix m = sys.matrix();
  if (m.rows() == 0) m = Matrix(1, n);
  CenterCheck out;
  out.candidates = SubspaceBasis(n, nullspace(m));
  for (const auto& v : out.candidates.vectors()) {
    const auto a = s.from_vector(v);
    for (const auto& wx : monos) {
      const auto x = s.monomial(wx);
      if (!s.commutator(a, x).is_zero()) out.holds = false;
      for (const auto& wy : monos) {
        const auto y = s.monomial(wy);
        if (!s.associator(a, x, y).is_zero() || !s.associator(x, a, y).is_zero() || !s.associator(x, y, a).is_zero()) {
          out.holds = false;
        }
      }
    }
  }
  return out;
}

}  // namespace ltsenv
