#pragma once

// Exact scalar arithmetic. Integers and rationals are GMP-backed; mpq_class
// keeps every value canonical (coprime, positive denominator).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace ratrec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Number of bits in the larger of |numerator| and denominator.
std::size_t bit_size(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace ratrec
