#include "ltsenv/json_io.hpp"

#include <limits>
#include <set>

namespace ltsenv {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) { throw InputError(where + ": " + msg); }

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t)) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      bad(where, "expected an integer, got \"" + s + "\"");
    }
    return Integer(s);
  }
  bad(where, "expected an integer");
}

std::size_t index_from_json(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) bad(where, "expected a basis index");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= dim) {
    bad(where, "index " + std::to_string(v) + " out of range for dim " + std::to_string(dim));
  }
  return static_cast<std::size_t>(v);
}

Scalar fraction(const json& num, const json& den, const std::string& where) {
  const Integer n = integer_from_json(num, where + "[num]");
  const Integer d = integer_from_json(den, where + "[den]");
  if (d == 0) bad(where, "zero denominator");
  return make_scalar(n, d);
}

std::size_t read_dim(const json& j) {
  if (!j.is_object()) bad("$", "expected an object");
  if (!j.contains("dim")) bad("$", "missing \"dim\"");
  const auto& d = j.at("dim");
  if (!d.is_number_integer() && !d.is_number_unsigned()) bad("$.dim", "expected a nonnegative integer");
  const auto v = d.get<std::int64_t>();
  if (v < 0 || v > 4096) bad("$.dim", "dimension out of range");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> read_names(const json& j, std::size_t dim) {
  if (!j.contains("names")) return {};
  const auto& n = j.at("names");
  if (!n.is_array() || n.size() != dim) bad("$.names", "expected an array of " + std::to_string(dim) + " strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!n[i].is_string()) bad("$.names[" + std::to_string(i) + "]", "expected a string");
    out.push_back(n[i].get<std::string>());
  }
  return out;
}

std::string read_label(const json& j) {
  if (!j.contains("label")) return {};
  if (!j.at("label").is_string()) bad("$.label", "expected a string");
  return j.at("label").get<std::string>();
}

const json& entry_list(const json& j, const char* key) {
  static const json empty = json::array();
  if (!j.contains(key)) return empty;
  const auto& a = j.at(key);
  if (!a.is_array()) bad(std::string("$.") + key, "expected an array");
  return a;
}

}  // namespace

json scalar_to_json(const Scalar& s) {
  return json::array({integer_to_json(s.get_num()), integer_to_json(s.get_den())});
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("scalar", "expected [num, den]");
  return fraction(j[0], j[1], "scalar");
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(scalar_to_json(c));
  return out;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

TernarySystem ternary_system_from_json(const json& j) {
  const std::size_t dim = read_dim(j);
  TernarySystem t(dim, read_names(j, dim));
  t.set_label(read_label(j));
  std::set<std::vector<std::size_t>> seen;
  const auto& tern = entry_list(j, "ternary");
  for (std::size_t e = 0; e < tern.size(); ++e) {
    const std::string where = "$.ternary[" + std::to_string(e) + "]";
    const auto& r = tern[e];
    if (!r.is_array() || r.size() != 6) bad(where, "expected [i, j, k, l, num, den]");
    std::vector<std::size_t> key;
    for (int p = 0; p < 4; ++p) key.push_back(index_from_json(r[p], dim, where));
    if (!seen.insert(key).second) bad(where, "repeated entry");
    t.add_ternary(key[0], key[1], key[2], key[3], fraction(r[4], r[5], where));
  }
  seen.clear();
  const auto& bin = entry_list(j, "binary");
  for (std::size_t e = 0; e < bin.size(); ++e) {
    const std::string where = "$.binary[" + std::to_string(e) + "]";
    const auto& r = bin[e];
    if (!r.is_array() || r.size() != 5) bad(where, "expected [i, j, l, num, den]");
    std::vector<std::size_t> key;
    for (int p = 0; p < 3; ++p) key.push_back(index_from_json(r[p], dim, where));
    if (!seen.insert(key).second) bad(where, "repeated entry");
    t.add_binary(key[0], key[1], key[2], fraction(r[3], r[4], where));
  }
  return t;
}

json to_json(const TernarySystem& t) {
  const std::size_t n = t.dim();
  json out = {{"dim", n}};
  if (!t.label().empty()) out["label"] = t.label();
  if (!t.names().empty()) out["names"] = t.names();
  json tern = json::array(), bin = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& v = t.ternary(i, j, k);
        for (std::size_t l = 0; l < v.size(); ++l) {
          if (v[l] == 0) continue;
          const auto q = scalar_to_json(v[l]);
          tern.push_back({i, j, k, l, q[0], q[1]});
        }
      }
      const auto& b = t.binary(i, j);
      for (std::size_t l = 0; l < b.size(); ++l) {
        if (b[l] == 0) continue;
        const auto q = scalar_to_json(b[l]);
        bin.push_back({i, j, l, q[0], q[1]});
      }
    }
  }
  out["ternary"] = tern;
  out["binary"] = bin;
  return out;
}

FinAlgebra fin_algebra_from_json(const json& j) {
  const std::size_t dim = read_dim(j);
  if (dim == 0) bad("$.dim", "an algebra needs dim >= 1");
  if (!j.contains("unit")) bad("$", "missing \"unit\"");
  const std::size_t unit = index_from_json(j.at("unit"), dim, "$.unit");
  std::vector<Vector> table(dim * dim, zero_vector(dim));
  std::set<std::vector<std::size_t>> seen;
  const auto& tab = entry_list(j, "table");
  for (std::size_t e = 0; e < tab.size(); ++e) {
    const std::string where = "$.table[" + std::to_string(e) + "]";
    const auto& r = tab[e];
    if (!r.is_array() || r.size() != 5) bad(where, "expected [i, j, k, num, den]");
    std::vector<std::size_t> key;
    for (int p = 0; p < 3; ++p) key.push_back(index_from_json(r[p], dim, where));
    if (!seen.insert(key).second) bad(where, "repeated entry");
    table[key[0] * dim + key[1]][key[2]] += fraction(r[3], r[4], where);
  }
  try {
    return FinAlgebra(dim, std::move(table), unit, read_names(j, dim), read_label(j));
  } catch (const std::invalid_argument& e) {
    bad("$", e.what());
  }
}

json to_json(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  json out = {{"dim", n}, {"unit", a.unit_index()}};
  if (!a.label().empty()) out["label"] = a.label();
  if (!a.names().empty()) out["names"] = a.names();
  json tab = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = a.product(i, j);
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        const auto q = scalar_to_json(v[k]);
        tab.push_back({i, j, k, q[0], q[1]});
      }
    }
  }
  out["table"] = tab;
  return out;
}

json to_json(const UVElement& u) {
  json out = json::array();
  for (const auto& [w, c] : u.terms()) {
    json word = json::array();
    for (Letter l : w) word.push_back(l);
    out.push_back({word, scalar_to_json(c)});
  }
  return out;
}

UVElement uv_element_from_json(const EnvelopeSession& s, const json& j) {
  if (!j.is_array()) bad("element", "expected [[word, [num, den]], ...]");
  Terms t;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string where = "element[" + std::to_string(e) + "]";
    const auto& r = j[e];
    if (!r.is_array() || r.size() != 2 || !r[0].is_array()) bad(where, "expected [word, [num, den]]");
    Word w;
    for (const auto& l : r[0]) w.push_back(static_cast<Letter>(index_from_json(l, s.dim(), where)));
    if (!r[1].is_array() || r[1].size() != 2) bad(where, "expected [num, den]");
    if (sorted_word(w) != w) bad(where, "word indices must be weakly increasing");
    add_term(t, w, fraction(r[1][0], r[1][1], where));
  }
  return s.element(std::move(t));
}

}  // namespace ltsenv
