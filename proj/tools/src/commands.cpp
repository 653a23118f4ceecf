#include "commands.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ltsenv/catalog.hpp"
#include "ltsenv/ideal_lab.hpp"
#include "ltsenv/json_io.hpp"
#include "ltsenv/star_envelope.hpp"

namespace ltsenv::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json subspace_json(const SubspaceBasis& s) {
  json basis = json::array();
  for (const auto& v : s.vectors()) basis.push_back(vector_to_json(v));
  return {{"dim", s.dim()}, {"basis", basis}};
}

std::string system_id(const Options& o, const TernarySystem& t) {
  if (!o.system.empty()) return o.system;
  return t.label().empty() ? o.file : t.label();
}

std::string algebra_id(const Options& o, const FinAlgebra& a) {
  if (!o.algebra.empty()) return o.algebra;
  return a.label().empty() ? o.file : a.label();
}

Vector parse_entry_vector(const json& row, std::size_t dim, const std::string& where) {
  if (!row.is_array() || row.size() != dim) {
    throw InputError(where + ": expected a vector of length " + std::to_string(dim));
  }
  Vector v;
  for (const auto& e : row) {
    if (e.is_number_integer()) {
      v.emplace_back(std::to_string(e.get<std::int64_t>()));
    } else if (e.is_string()) {
      try {
        v.push_back(parse_scalar(e.get<std::string>()));
      } catch (const std::exception& ex) {
        throw InputError(where + ": " + ex.what());
      }
    } else if (e.is_array()) {
      v.push_back(scalar_from_json(e));
    } else {
      throw InputError(where + ": entries are integers, \"p/q\" strings or [num, den]");
    }
  }
  return v;
}

// Right-normed product a1*(a2*(...*an)) of named generators, "1", or the
// JSON element format.
UVElement parse_element(const EnvelopeSession& s, const std::string& text, const std::string& flag) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string::npos) throw UsageError(flag + ": empty element");
  if (text[first] == '[') return uv_element_from_json(s, parse_json_text(text, flag));
  std::map<std::string, std::size_t> by_name;
  for (std::size_t i = 0; i < s.dim(); ++i) by_name[s.system().name(i)] = i;
  std::vector<std::size_t> letters;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token != "1") {
      const auto it = by_name.find(token);
      if (it == by_name.end()) throw UsageError(flag + ": unknown generator '" + token + "'");
      letters.push_back(it->second);
    }
    token.clear();
  };
  for (char c : text) {
    if (c == '*' || c == ' ' || c == '(' || c == ')') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  UVElement u = s.one();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) u = s.generator(*it) * u;
  return u;
}

SubspaceBasis parse_subspace(const std::string& text, std::size_t dim) {
  const json j = parse_json_text(text, "--subspace");
  if (!j.is_array()) throw InputError("--subspace: expected a JSON array of vectors");
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    vs.push_back(parse_entry_vector(j[i], dim, "--subspace[" + std::to_string(i) + "]"));
  }
  return SubspaceBasis(dim, vs);
}

}  // namespace

TernarySystem load_system(const Options& o) {
  if (!o.system.empty() && !o.file.empty()) throw UsageError("give exactly one of --system and --file");
  if (o.system.empty() && o.file.empty()) throw UsageError("an input is required: --system NAME or --file PATH");
  if (!o.system.empty()) {
    try {
      return catalog::by_name(o.system);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const json j = parse_json_text(read_file(o.file), o.file);
  try {
    return ternary_system_from_json(j);
  } catch (const InputError& e) {
    throw InputError(o.file + ": " + e.what());
  }
}

FinAlgebra load_algebra(const Options& o) {
  if (!o.algebra.empty() && !o.file.empty()) throw UsageError("give exactly one of --algebra and --file");
  if (o.algebra.empty() && o.file.empty()) throw UsageError("an input is required: --algebra NAME or --file PATH");
  if (!o.algebra.empty()) {
    try {
      return algebras::by_name(o.algebra);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const json j = parse_json_text(read_file(o.file), o.file);
  try {
    return fin_algebra_from_json(j);
  } catch (const InputError& e) {
    throw InputError(o.file + ": " + e.what());
  }
}

Report run_catalog(const Options&) {
  Report r;
  r.command = "catalog";
  json sys = json::array(), alg = json::array();
  for (const auto& [name, desc] : catalog::entries()) sys.push_back({{"name", name}, {"description", desc}});
  for (const auto& [name, desc] : algebras::entries()) alg.push_back({{"name", name}, {"description", desc}});
  r.fields["systems"] = sys;
  r.fields["algebras"] = alg;
  return r;
}

Report run_axioms(const Options& o) {
  const TernarySystem t = load_system(o);
  AxiomMode mode;
  try {
    mode = parse_axiom_mode(o.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Report r;
  r.command = "axioms";
  r.system = system_id(o, t);
  r.fields["mode"] = to_string(mode);
  r.fields["dim"] = t.dim();
  for (const auto& c : check_axioms(t, mode).checks) {
    json w = nullptr;
    if (!c.pass) {
      json names = json::array();
      for (auto i : c.witness) names.push_back(t.name(i));
      w = {{"indices", c.witness}, {"names", names}};
    }
    r.add(c.name, c.pass, w);
  }
  return r;
}

Report run_envelope(const Options& o) {
  const TernarySystem t = load_system(o);
  Scalar scale;
  try {
    scale = parse_scalar(o.scale);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--scale: ") + e.what());
  }
  if (scale == 0) throw UsageError("--scale must be nonzero");
  const unsigned degree = o.degree ? o.degree : 3;
  Report r;
  r.command = "envelope";
  r.system = system_id(o, t);
  const LieEnvelope env = lie_envelope(t, scale);
  r.fields["scale"] = scalar_to_json(scale);
  r.fields["envelope_dim"] = env.algebra.dim();
  r.fields["even_dim"] = env.even_dim;
  r.fields["odd_dim"] = env.odd_dim();
  json labels = json::array();
  for (const auto& [i, j] : env.even_labels) labels.push_back("D(" + t.name(i) + "," + t.name(j) + ")");
  r.fields["even_basis"] = labels;
  r.add("Jacobi identity on the envelope", check_lie(env.algebra).ok());

  EnvelopeSession s(t);
  const std::size_t d = s.dim();
  json counts = json::array();
  for (unsigned n = 0; n <= degree; ++n) {
    std::vector<Word> monos;
    for (const auto& w : monomials_up_to(d, n)) {
      if (w.size() == n) monos.push_back(w);
    }
    std::map<Word, std::size_t, GradedOrder> cols;
    for (const auto& m : monos) {
      for (const auto& [w, c] : s.embed_uv_monomial(m).terms()) {
        if (w.size() == n) cols.emplace(w, cols.size());
      }
    }
    Matrix top(monos.size(), cols.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
      for (const auto& [w, c] : s.embed_uv_monomial(monos[i]).terms()) {
        if (w.size() == n) top.set(i, cols.at(w), c);
      }
    }
    const std::size_t rk = monos.empty() ? 0 : rank(top);
    const std::size_t expect = static_cast<std::size_t>(binomial(static_cast<unsigned>(d + n - 1), n).get_num().get_ui());
    counts.push_back({{"degree", n}, {"dim", rk}});
    r.add("dim of degree " + std::to_string(n) + " part of gr U(V) = C(dim V + n - 1, n)",
          rk == expect && monos.size() == expect, {{"rank", rk}, {"expected", expect}});
  }
  r.fields["graded_dims"] = counts;

  bool recovered = true;
  json witness = nullptr;
  for (std::size_t a = 0; a < d && recovered; ++a) {
    for (std::size_t b = 0; b < d && recovered; ++b) {
      for (std::size_t c = 0; c < d && recovered; ++c) {
        const auto ga = s.generator(a), gb = s.generator(b), gc = s.generator(c);
        const Vector br = t.bracket(unit_vector(d, a), unit_vector(d, b), unit_vector(d, c));
        if (!(ga * (gb * gc) - gb * (ga * gc) == s.from_vector(br))) {
          recovered = false;
          witness = {t.name(a), t.name(b), t.name(c)};
        }
      }
    }
  }
  r.add("a(bc) - b(ac) = [a,b,c] on basis triples", recovered, witness);
  return r;
}

Report run_mul(const Options& o) {
  const TernarySystem t = load_system(o);
  if (o.left.empty() || o.right.empty()) throw UsageError("mul needs --left and --right");
  EnvelopeSession s(t);
  const auto x = parse_element(s, o.left, "--left");
  const auto y = parse_element(s, o.right, "--right");
  const auto p = x * y;
  Report r;
  r.command = "mul";
  r.system = system_id(o, t);
  r.fields["left"] = s.to_string(x);
  r.fields["right"] = s.to_string(y);
  r.fields["product"] = to_json(p);
  r.fields["product_text"] = s.to_string(p);
  return r;
}

Report run_centralizer(const Options& o) {
  const TernarySystem t = load_system(o);
  const unsigned degree = o.degree ? o.degree : 3;
  CentralizerMethod method;
  if (o.method == "split") {
    method = CentralizerMethod::split;
  } else if (o.method == "full") {
    method = CentralizerMethod::full;
  } else {
    throw UsageError("--method must be split or full");
  }
  EnvelopeSession s(t);
  const auto rep = truncated_centralizer(s, degree, method);
  Report r;
  r.command = "centralizer";
  r.system = system_id(o, t);
  r.fields["degree"] = degree;
  r.fields["method"] = to_string(method);
  r.fields["used_full_system"] = rep.used_full_system;
  r.fields["monomials"] = rep.monomial_count;
  r.fields["top_kernel_dims"] = rep.top_kernel_dims;
  r.fields["dim"] = rep.dimension();
  r.fields["verdict"] = rep.verdict;
  r.fields["evidence"] = "bounded-degree, not a proof";
  json basis = json::array();
  for (const auto& u : rep.basis) basis.push_back({{"element", to_json(u)}, {"text", s.to_string(u)}});
  r.fields["basis"] = basis;
  r.add("every basis element commutes with every generator", rep.sound);
  r.add("centralizer = span(1) + V up to degree " + std::to_string(degree), rep.verdict,
        {{"dim", rep.dimension()}, {"expected", 1 + t.dim()}});
  return r;
}

Report run_nuclei(const Options& o) {
  const FinAlgebra a = load_algebra(o);
  Report r;
  r.command = "nuclei";
  r.system = algebra_id(o, a);
  r.fields["dim"] = a.dim();
  const Nuclei nu = nuclei(a);
  r.fields["left"] = subspace_json(nu.left);
  r.fields["middle"] = subspace_json(nu.middle);
  r.fields["right"] = subspace_json(nu.right);
  r.fields["center"] = subspace_json(nu.center);
  r.fields["n_alt"] = subspace_json(n_alt(a));
  try {
    const LnAlt ln = ln_alt(a);
    r.fields["ln_alt"] = subspace_json(ln.space);
    const auto ax = check_axioms(ln.system, AxiomMode::lts);
    json failed = nullptr;
    for (const auto& c : ax.checks) {
      if (!c.pass) failed = {{"axiom", c.name}, {"indices", c.witness}};
    }
    r.add("LN_alt(A) with the induced bracket is a Lie triple system", ax.ok(), failed);
    bool tder = true;
    for (const auto& v : ln.space.vectors()) tder = tder && lnalt_membership_via_tder(a, v);
    r.add("(L_a, L_a + R_a, -L_a) is a ternary derivation for a in LN_alt(A)", tder);
  } catch (const InducedBracketNotClosed& e) {
    r.add("LN_alt(A) is closed under the induced bracket", false, e.what());
  }
  r.add("Z(A) lies in every nucleus",
        nu.left.contains(nu.center) && nu.middle.contains(nu.center) && nu.right.contains(nu.center));
  return r;
}

Report run_decompose(const Options& o) {
  const FinAlgebra a = load_algebra(o);
  if (o.subspace.empty()) throw UsageError("decompose needs --subspace '[[...], ...]'");
  const SubspaceBasis v = parse_subspace(o.subspace, a.dim());
  DecompositionReport rep;
  try {
    rep = theorem_decompose(a, v);
  } catch (const PreconditionViolated& e) {
    throw InputError(std::string("precondition failed: ") + e.what());
  }
  Report r;
  r.command = "decompose";
  r.system = algebra_id(o, a);
  r.fields["v"] = subspace_json(v);
  r.fields["v_hat"] = subspace_json(rep.v_hat);
  r.fields["q"] = subspace_json(rep.q);
  r.fields["r"] = subspace_json(rep.r);
  r.fields["v_nilpotent"] = rep.v_nilpotent;
  r.fields["verdict"] = rep.verdict();
  for (const auto& c : rep.checks) r.add(c.name, c.pass, c.detail.empty() ? json(nullptr) : json(c.detail));
  return r;
}

}  // namespace ltsenv::cli
