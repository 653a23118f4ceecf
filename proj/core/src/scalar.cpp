#include "ltsenv/scalar.hpp"

#include <stdexcept>

namespace ltsenv {

Scalar make_scalar(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

Scalar make_scalar(std::int64_t num, std::int64_t den) {
  return make_scalar(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  const auto slash = text.find('/');
  auto parse_int = [](const std::string& digits) {
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (start == digits.size()) throw std::invalid_argument("malformed integer '" + digits + "'");
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') {
        throw std::invalid_argument("malformed integer '" + digits + "'");
      }
    }
    return Integer(digits[0] == '+' ? digits.substr(1) : digits);
  };
  if (slash == std::string::npos) return Scalar(parse_int(text));
  return make_scalar(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const Scalar& s) { return s.get_str(); }

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

void axpy(Vector& a, const Scalar& c, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) a[i] += c * b[i];
  }
}

Scalar binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(r);
}

}  // namespace ltsenv
