#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace injwords {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// lcm of the denominators; 1 for an empty range.
template <class Range>
Integer common_denominator(const Range& values) {
  Integer d = 1;
  for (const Rational& q : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

}  // namespace injwords
