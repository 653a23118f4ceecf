#include <algorithm>
#include <functional>
#include <random>

#include "commands.hpp"
#include "ltsenv/catalog.hpp"
#include "ltsenv/ideal_lab.hpp"
#include "ltsenv/json_io.hpp"
#include "ltsenv/star_envelope.hpp"

namespace ltsenv::cli {

using nlohmann::json;

namespace {

// mt19937_64 output is fixed by the standard; the reduction below avoids the
// library-specific distributions so reports match across toolchains.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Scalar scalar() {
    Scalar s(uniform(-4, 4), uniform(1, 3));
    s.canonicalize();
    return s;
  }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = scalar();
    return v;
  }

  UVElement uv(const EnvelopeSession& s, unsigned max_degree, std::size_t count = 3) {
    Terms t;
    for (std::size_t i = 0; i < count; ++i) {
      Word w(static_cast<std::size_t>(uniform(0, max_degree)));
      for (auto& l : w) l = static_cast<Letter>(uniform(0, static_cast<long>(s.dim()) - 1));
      std::sort(w.begin(), w.end());
      Scalar c = 0;
      while (c == 0) c = scalar();
      add_term(t, w, c);
    }
    return s.element(std::move(t));
  }

 private:
  std::mt19937_64 gen_;
};

template <typename F>
UVElement sum_pairs(const EnvelopeSession& s, const UVTensor& t, F&& f) {
  UVElement acc(&s, {});
  for (const auto& [l, r] : s.tensor_pairs(t)) acc += f(l, r);
  return acc;
}

// Counts cases and keeps the first failure.
struct Tally {
  std::size_t cases = 0;
  bool pass = true;
  json witness = nullptr;

  void record(bool ok, const std::function<json()>& describe) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      witness = describe();
    }
  }
  json summary() const { return pass ? json{{"cases", cases}} : witness; }
};

std::vector<std::string> systems_or(const Options& o, std::vector<std::string> defaults) {
  if (!o.system.empty()) return {o.system};
  return defaults;
}

std::vector<std::string> standard_names() {
  std::vector<std::string> out;
  for (const auto& t : catalog::standard_lts()) out.push_back(t.label());
  return out;
}

TernarySystem named_system(const std::string& name) {
  try {
    return catalog::by_name(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string joined(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

void commutator_s2(const Options& o, Report& r) {
  const unsigned max_n = o.max_n ? o.max_n : 8;
  r.system = "S2";
  EnvelopeSession s(catalog::s2());
  const auto f = s.generator(1);
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto en = s.monomial(Word(n, 0));
    const auto lhs = en * f - f * en;
    const auto rhs = s.monomial(Word(n - 1, 0), Scalar(n) * Scalar(n - 1));
    r.add("[e^n, f] = n(n-1) e^(n-1), n = " + std::to_string(n), lhs == rhs,
          {{"n", n}, {"lhs", s.to_string(lhs)}, {"rhs", s.to_string(rhs)}});
  }
}

void leftmult(const Options& o, Report& r) {
  const unsigned max_n = o.max_n ? o.max_n : 6;
  const unsigned cases = o.cases ? o.cases : 10;
  const auto names = systems_or(o, standard_names());
  r.system = joined(names);
  Sampler rng(o.seed);
  for (const auto& name : names) {
    EnvelopeSession s(named_system(name));
    Tally t;
    for (std::size_t g = 0; g < s.dim(); ++g) {
      const auto a = s.generator(g);
      std::vector<UVElement> pw{s.one()};
      for (unsigned k = 1; k <= max_n; ++k) pw.push_back(a * pw.back());
      for (unsigned c = 0; c < cases; ++c) {
        const auto x = rng.uv(s, 3);
        for (unsigned p = 0; p <= max_n; ++p) {
          for (unsigned q = 0; p + q <= max_n; ++q) {
            t.record(pw[p] * (pw[q] * x) == pw[p + q] * x, [&] {
              return json{{"a", s.system().name(g)}, {"n", p}, {"m", q}, {"x", s.to_string(x)}};
            });
          }
        }
      }
    }
    r.add("L_{a^n} L_{a^m} = L_{a^(n+m)} on " + name, t.pass, t.summary());
  }
}

void bol_hopf(const Options& o, Report& r) {
  const unsigned cases = o.cases ? o.cases : 50;
  const auto names = systems_or(o, {"S2", "so3"});
  r.system = joined(names);
  Sampler rng(o.seed);
  for (const auto& name : names) {
    EnvelopeSession s(named_system(name));
    Tally bol, alt;
    for (unsigned c = 0; c < cases; ++c) {
      const auto y = rng.uv(s, 3), z = rng.uv(s, 3);
      for (std::size_t g = 0; g < s.dim(); ++g) {
        const auto a = s.generator(g);
        const auto da = s.uv_coproduct(a);
        const auto describe = [&] {
          return json{{"a", s.system().name(g)}, {"y", s.to_string(y)}, {"z", s.to_string(z)}};
        };
        const auto lhs = sum_pairs(s, da, [&](const UVElement& a1, const UVElement& a2) { return a1 * (y * (a2 * z)); });
        const auto rhs = sum_pairs(s, da, [&](const UVElement& a1, const UVElement& a2) { return (a1 * (y * a2)) * z; });
        bol.record(lhs == rhs, describe);
        alt.record(s.associator(a, y, z) == -s.associator(y, a, z), describe);
      }
    }
    r.add("Bol-Hopf identity sum a1(y(a2 z)) = sum (a1(y a2))z on " + name, bol.pass, bol.summary());
    r.add("left alternative (a,y,z) = -(y,a,z) on " + name, alt.pass, alt.summary());
  }
}

void kloop_division(const Options& o, Report& r) {
  const unsigned cases = o.cases ? o.cases : 50;
  const auto names = systems_or(o, {"S2", "so3"});
  r.system = joined(names);
  Sampler rng(o.seed);
  for (const auto& name : names) {
    EnvelopeSession s(named_system(name));
    Tally unit, left, mid, inv;
    for (unsigned c = 0; c < cases; ++c) {
      const auto x = rng.uv(s, 3), y = rng.uv(s, 3);
      const auto describe = [&] { return json{{"x", s.to_string(x)}, {"y", s.to_string(y)}}; };
      const auto sx = s.s_automorphism(x);
      unit.record(s.left_divide(x, s.one()) == sx && s.right_unit_divide(x) == sx, describe);
      const auto dx = s.uv_coproduct(x);
      const auto ey = EnvelopeSession::uv_counit(x) * y;
      left.record(sum_pairs(s, dx, [&](const UVElement& a, const UVElement& b) { return s.left_divide(a, b * y); }) == ey,
                  describe);
      mid.record(sum_pairs(s, dx, [&](const UVElement& a, const UVElement& b) { return a * s.left_divide(b, y); }) == ey,
                 describe);
      inv.record(s.s_automorphism(sx) == x, describe);
    }
    r.add("x\\1 = S(x) on " + name, unit.pass, unit.summary());
    r.add("sum x1\\(x2 y) = eps(x) y on " + name, left.pass, left.summary());
    r.add("sum x1(x2\\y) = eps(x) y on " + name, mid.pass, mid.summary());
    r.add("S(S(x)) = x on " + name, inv.pass, inv.summary());
  }
}

void delta_bracket(const Options& o, Report& r) {
  const unsigned cases = o.cases ? o.cases : 10;
  const auto names = systems_or(o, standard_names());
  r.system = joined(names);
  Sampler rng(o.seed);
  for (const auto& name : names) {
    EnvelopeSession s(named_system(name));
    const auto& t = s.system();
    const std::size_t n = s.dim();
    Tally basis, assoc, eq7;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          const Vector br = t.bracket(unit_vector(n, a), unit_vector(n, b), unit_vector(n, c));
          basis.record(s.delta_map(s.generator(a), s.generator(b), s.generator(c)) ==
                           s.from_vector(scale(Scalar(1, 2), br)),
                       [&] { return json{t.name(a), t.name(b), t.name(c)}; });
        }
      }
    }
    for (unsigned k = 0; k < cases; ++k) {
      const auto x = rng.uv(s, 3);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const auto ga = s.generator(a), gb = s.generator(b);
          assoc.record(s.delta_map(ga, gb, x) == -s.associator(ga, gb, x),
                       [&] { return json{{"a", t.name(a)}, {"b", t.name(b)}, {"x", s.to_string(x)}}; });
        }
      }
      const auto u = rng.uv(s, 2, 2), v = rng.uv(s, 2, 2), z = rng.uv(s, 2, 2);
      UVElement lhs(&s, {});
      const auto us = s.tensor_pairs(s.uv_coproduct(u)), vs = s.tensor_pairs(s.uv_coproduct(v));
      for (const auto& [u1, u2] : us) {
        for (const auto& [v1, v2] : vs) lhs += (u1 * v1) * s.delta_map(u2, v2, z);
      }
      eq7.record(lhs == u * (v * z),
                 [&] { return json{{"x", s.to_string(u)}, {"y", s.to_string(v)}, {"z", s.to_string(z)}}; });
    }
    r.add("delta_{a,b}(c) = 1/2 [a,b,c] on basis triples of " + name, basis.pass, basis.summary());
    r.add("delta_{a,b}(x) = -(a,b,x) on " + name, assoc.pass, assoc.summary());
    r.add("sum (x1 y1) delta_{x2,y2}(z) = x(yz) on " + name, eq7.pass, eq7.summary());
  }
}

void so3_determinant(const Options& o, Report& r) {
  const unsigned max_n = o.max_n ? o.max_n : 8;
  r.system = "so3";
  Tally t;
  json values = json::array();
  for (unsigned n = 0; n <= max_n; ++n) {
    for (unsigned p = 0; n + p <= max_n; ++p) {
      for (unsigned q = 0; n + p + q <= max_n; ++q) {
        const auto d = so3_condition_det(n, p, q);
        values.push_back({n, p, q, scalar_to_json(d.det)});
        t.record(d.equal, [&] {
          return json{{"n", n}, {"p", p}, {"q", q}, {"det", scalar_to_json(d.det)}, {"formula", scalar_to_json(d.formula)}};
        });
      }
    }
  }
  r.fields["values"] = values;
  r.add("det = 2(n+2)(p+2)(q+2)(n+p+q+1)^2 for n+p+q <= " + std::to_string(max_n), t.pass, t.summary());
}

void centralizer_conjecture(const Options& o, Report& r) {
  const unsigned degree = o.degree ? o.degree : 5;
  const auto names = systems_or(o, {"so3", "S2tilde", "S2", "bilinear:2", "bilinear:3", "bilinear:4"});
  r.system = joined(names);
  r.fields["evidence"] = "bounded-degree, not a proof";
  for (const auto& name : names) {
    EnvelopeSession s(named_system(name));
    for (unsigned n = std::min(2u, degree); n <= degree; ++n) {
      const auto rep = truncated_centralizer(s, n);
      r.add("centralizer of V in U(V)_{<=" + std::to_string(n) + "} = span(1) + V on " + name,
            rep.verdict && rep.sound && rep.dimension() == 1 + s.dim(),
            {{"dim", rep.dimension()}, {"expected", 1 + s.dim()}, {"sound", rep.sound}});
    }
  }
}

void partial_derivative_leading(const Options& o, Report& r) {
  const unsigned degree = o.degree ? o.degree : 5;
  const auto names = systems_or(o, {"S2", "so3"});
  r.system = joined(names);
  for (const auto& name : names) {
    EnvelopeSession s(named_system(name));
    Tally t;
    for (const auto& m : monomials_up_to(s.dim(), degree)) {
      for (std::size_t g = 0; g < s.dim(); ++g) {
        const auto chk = check_leading_term(s, unit_vector(s.dim(), g), m);
        t.record(chk.pass, [&] {
          return json{{"a", s.system().name(g)},
                      {"m", s.to_string(s.monomial(m))},
                      {"actual", s.to_string(chk.actual)},
                      {"prediction", s.to_string(chk.prediction)}};
        });
      }
    }
    r.add("am - ma = 1/2 sum [a,x_i,x_j] d_i d_j m + O(deg m - 2) on " + name, t.pass, t.summary());
  }
}

const std::vector<std::pair<std::string, void (*)(const Options&, Report&)>> kVerifiers = {
    {"commutator-s2", commutator_s2},
    {"leftmult", leftmult},
    {"bol-hopf", bol_hopf},
    {"kloop-division", kloop_division},
    {"delta-bracket", delta_bracket},
    {"so3-determinant", so3_determinant},
    {"centralizer-conjecture", centralizer_conjecture},
    {"partial-derivative-leading", partial_derivative_leading},
};

}  // namespace

Report run_verify(const Options& o) {
  for (const auto& [id, fn] : kVerifiers) {
    if (id != o.id) continue;
    Report r;
    r.command = "verify";
    r.fields["id"] = id;
    fn(o, r);
    return r;
  }
  std::string known;
  for (const auto& [id, fn] : kVerifiers) known += " " + id;
  throw UsageError("unknown verify id '" + o.id + "'; known:" + known);
}

}  // namespace ltsenv::cli
