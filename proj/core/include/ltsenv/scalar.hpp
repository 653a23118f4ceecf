#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ltsenv {

// Exact rationals. mpq_class keeps values canonical after every arithmetic
// operation; values built from a raw numerator/denominator pair must go
// through make_scalar so the lowest-terms invariant holds.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Dense coordinate vector.
using Vector = std::vector<Scalar>;

Scalar make_scalar(const Integer& num, const Integer& den);
Scalar make_scalar(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Scalar parse_scalar(const std::string& text);

std::string to_string(const Scalar& s);
std::string to_string(const Vector& v);

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
/// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);

Scalar binomial(unsigned n, unsigned k);

}  // namespace ltsenv
