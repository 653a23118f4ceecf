#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "ltsenv/nucleus_lab.hpp"
#include "ltsenv/scalar.hpp"
#include "ltsenv/star_envelope.hpp"
#include "ltsenv/triple_system.hpp"

namespace ltsenv {

/// Malformed or schema-violating input. what() carries the location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [num, den]; each part is a JSON integer when it fits in 64 bits and a
/// decimal string otherwise.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Vector& v);

/// Parses text as JSON; syntax errors report the byte offset.
nlohmann::json parse_json_text(const std::string& text, const std::string& source);

/// {"dim": n, "ternary": [[i,j,k,l,num,den], ...], "binary": [[i,j,l,num,den], ...]}
/// with optional "names" and "label". Omitted entries are zero; repeated
/// entries are an error.
TernarySystem ternary_system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TernarySystem& t);

/// {"dim": n, "unit": u, "table": [[i,j,k,num,den], ...]} with optional
/// "names" and "label".
FinAlgebra fin_algebra_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FinAlgebra& a);

/// [[word, [num, den]], ...] in graded order; a word is a list of indices.
nlohmann::json to_json(const UVElement& u);
/// Inverse of the above; words must be weakly increasing and in range.
UVElement uv_element_from_json(const EnvelopeSession& s, const nlohmann::json& j);

}  // namespace ltsenv
