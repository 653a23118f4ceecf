#include "ltsenv/catalog.hpp"

#include <array>
#include <stdexcept>

namespace ltsenv::catalog {

namespace {

// Sets [e_i,e_j,e_k] = v and [e_j,e_i,e_k] = -v.
void set_skew(TernarySystem& t, std::size_t i, std::size_t j, std::size_t k, const Vector& v) {
  t.set_ternary(i, j, k, v);
  t.set_ternary(j, i, k, scale(-1, v));
}

// [a,b,c] = [[a,b],c] from a Lie bracket table.
TernarySystem from_lie(const TernarySystem& lie) {
  const std::size_t n = lie.dim();
  TernarySystem t(n, lie.names());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        t.set_ternary(i, j, k, lie.binary_bracket(lie.binary(i, j), unit_vector(n, k)));
      }
    }
  }
  return t;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("catalog: bad " + what + " '" + text + "'");
  }
  return std::stoul(text);
}

}  // namespace

TernarySystem s2() {
  TernarySystem t(2, {"e", "f"});
  t.set_label("S2");
  set_skew(t, 0, 1, 0, {2, 0});
  set_skew(t, 0, 1, 1, {0, -2});
  return t;
}

TernarySystem s2_tilde() {
  TernarySystem t(2, {"x", "y"});
  t.set_label("S2tilde");
  set_skew(t, 0, 1, 0, {0, 1});
  set_skew(t, 0, 1, 1, {-1, 0});
  return t;
}

TernarySystem r2() {
  TernarySystem t(2, {"a", "b"});
  t.set_label("R2");
  set_skew(t, 0, 1, 0, {0, -1});
  return t;
}

TernarySystem so3_lie() {
  TernarySystem lie(3, {"x", "y", "z"});
  lie.set_label("so3-lie");
  lie.set_binary(0, 1, {0, 0, 1});
  lie.set_binary(1, 0, {0, 0, -1});
  lie.set_binary(1, 2, {1, 0, 0});
  lie.set_binary(2, 1, {-1, 0, 0});
  lie.set_binary(2, 0, {0, 1, 0});
  lie.set_binary(0, 2, {0, -1, 0});
  return lie;
}

TernarySystem so3() {
  TernarySystem t = from_lie(so3_lie());
  t.set_label("so3");
  return t;
}

TernarySystem bilinear(const std::vector<Vector>& gram) {
  const std::size_t n = gram.size();
  for (const auto& row : gram) {
    if (row.size() != n) throw std::invalid_argument("bilinear: Gram matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("bilinear: Gram matrix must be symmetric");
    }
  }
  if (n == 0 || rank(Matrix::from_dense(gram)) != n) {
    throw std::invalid_argument("bilinear: form must be nondegenerate");
  }
  TernarySystem t(n);
  t.set_label("bilinear:" + std::to_string(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Vector v(n);
        v[b] += gram[a][c];
        v[a] -= gram[b][c];
        t.set_ternary(a, b, c, v);
      }
    }
  }
  return t;
}

TernarySystem bilinear_identity(std::size_t n) {
  std::vector<Vector> g(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return bilinear(g);
}

TernarySystem abelian(std::size_t n) {
  TernarySystem t(n);
  t.set_label("abelian:" + std::to_string(n));
  return t;
}

TernarySystem direct_sum(const TernarySystem& a, const TernarySystem& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < a.dim(); ++i) names.push_back(a.name(i));
  for (std::size_t i = 0; i < b.dim(); ++i) {
    std::string nm = b.name(i);
    for (const auto& existing : names) {
      if (existing == nm) {
        nm += "'";
        break;
      }
    }
    names.push_back(nm);
  }
  TernarySystem t(n, names);
  t.set_label(a.label() + "+" + b.label());
  auto place = [n](const Vector& v, std::size_t offset) {
    Vector out(n);
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
  };
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) t.set_ternary(i, j, k, place(a.ternary(i, j, k), 0));
      t.set_binary(i, j, place(a.binary(i, j), 0));
    }
  }
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      for (std::size_t k = 0; k < b.dim(); ++k) t.set_ternary(o + i, o + j, o + k, place(b.ternary(i, j, k), o));
      t.set_binary(o + i, o + j, place(b.binary(i, j), o));
    }
  }
  return t;
}

TernarySystem octonion_malcev() {
  // Fano-plane triples (i, j, k) with e_i e_j = e_k, indices 1..7.
  static constexpr std::array<std::array<int, 3>, 7> kTriples{{
      {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};
  TernarySystem t(7, {"e1", "e2", "e3", "e4", "e5", "e6", "e7"});
  t.set_label("octonion-malcev");
  for (const auto& tri : kTriples) {
    for (int r = 0; r < 3; ++r) {
      const auto i = static_cast<std::size_t>(tri[r] - 1);
      const auto j = static_cast<std::size_t>(tri[(r + 1) % 3] - 1);
      const auto k = static_cast<std::size_t>(tri[(r + 2) % 3] - 1);
      // e_i e_j = e_k and e_j e_i = -e_k, so [e_i, e_j] = 2 e_k.
      t.add_binary(i, j, k, 2);
      t.add_binary(j, i, k, -2);
    }
  }
  return t;
}

TernarySystem by_name(const std::string& name) {
  const auto plus = name.find('+');
  if (plus != std::string::npos) {
    return direct_sum(by_name(name.substr(0, plus)), by_name(name.substr(plus + 1)));
  }
  if (name == "S2") return s2();
  if (name == "S2tilde") return s2_tilde();
  if (name == "R2") return r2();
  if (name == "so3") return so3();
  if (name == "so3-lie") return so3_lie();
  if (name == "octonion-malcev") return octonion_malcev();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    const std::string arg = name.substr(colon + 1);
    if (head == "abelian") return abelian(parse_count(arg, "dimension"));
    if (head == "bilinear") return bilinear_identity(parse_count(arg, "dimension"));
    if (head == "bilinear-diag") {
      Vector diag;
      std::size_t start = 0;
      while (start <= arg.size()) {
        const auto comma = arg.find(',', start);
        diag.push_back(parse_scalar(arg.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      std::vector<Vector> g(diag.size(), Vector(diag.size()));
      for (std::size_t i = 0; i < diag.size(); ++i) g[i][i] = diag[i];
      TernarySystem t = bilinear(g);
      t.set_label(name);
      return t;
    }
  }
  throw std::invalid_argument("unknown catalog system '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> entries() {
  return {
      {"S2", "[e,f,e] = 2e, [e,f,f] = -2f (simple, dim 2)"},
      {"S2tilde", "span{x,y} in so(3): [x,y,x] = y, [x,y,y] = -x (simple, dim 2)"},
      {"R2", "[a,b,a] = -b, [a,b,b] = 0 (solvable, not nilpotent)"},
      {"so3", "so(3) with [a,b,c] = [[a,b],c] (simple, dim 3)"},
      {"abelian:N", "zero bracket on F^N"},
      {"bilinear:N", "[a,b,c] = (a,c)b - (b,c)a for the identity form on F^N"},
      {"bilinear-diag:d1,...,dN", "same with the diagonal form diag(d1,...,dN)"},
      {"so3-lie", "so(3) as a Malcev (Lie) algebra, binary bracket only"},
      {"octonion-malcev", "imaginary octonions with the commutator bracket"},
      {"A+B", "direct sum of two catalog systems"},
  };
}

std::vector<TernarySystem> standard_lts() {
  return {s2(), s2_tilde(), r2(), so3(), bilinear_identity(2), bilinear_identity(3), abelian(2)};
}

}  // namespace ltsenv::catalog
