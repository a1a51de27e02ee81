#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace trinomia {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

/// Parses "7", "-3/2", " 4/6 " (reduced on the way in).
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

/// Exact q^e for any integer e; q must be nonzero when e < 0.
BigRational rational_pow(const BigRational& q, long e);
BigInt int_pow(const BigInt& b, unsigned long e);

/// Natural log of |q| without overflowing a double; q must be nonzero.
double log_abs(const BigRational& q);

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

}  // namespace trinomia
