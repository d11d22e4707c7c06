#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cb {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws InvalidInput on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// "3", "-3/2".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "n" or "n/d" with optional sign.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// 2^e for any integer e, as an exact rational.
Rational pow2(long e);

}  // namespace cb
