#ifndef CMTRIG_RATIONAL_HPP
#define CMTRIG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cmtrig
{

// Exact integers and rationals are GMP values. mpq_class keeps itself in
// lowest terms with a positive denominator as long as every constructor
// from a (num, den) pair is followed by canonicalize(); make_rational()
// does that.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt &num, const BigInt &den);
Rational make_rational(long num, long den = 1);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational &q);
std::string to_string(const BigInt &z);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else
// or on a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace cmtrig

#endif
