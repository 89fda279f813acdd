#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace folcalc {

/// Arbitrary-precision fraction, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

/// Lowest-terms "p/q" string, or "p" for integers.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q". Throws Error(kParse) on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Converts an integral Rational known to fit; throws otherwise.
std::int64_t to_int64(const Rational& r);
std::int64_t to_int64(const Integer& z);

}  // namespace folcalc
