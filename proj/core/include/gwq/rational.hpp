#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gwq {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise; always in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Parses "p" or "p/q" (optional leading '-'). Throws ParameterError.
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);

}  // namespace gwq
