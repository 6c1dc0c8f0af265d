#ifndef HV_RATIONAL_HPP
#define HV_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hv {

// Exact rational scalar. mpq_class keeps values canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Everything in this library that is "a number" is one
// of these; there is no floating point anywhere.
using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q" (decimal). Rejects anything else, including a
// zero denominator. The result is canonicalized.
std::optional<Rational> parse_rational(const std::string& text);

// Renders as "p/q", with the "/q" omitted when q = 1.
std::string rational_str(const Rational& r);

// r^e by exact integer powering of numerator and denominator.
Rational rational_pow(const Rational& r, unsigned long e);

}  // namespace hv

#endif
