#include "folcalc/rational.hpp"

#include <cctype>
#include <limits>

#include "folcalc/error.hpp"

namespace folcalc {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer{std::string{s}, 10};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!valid_integer_text(num_text)) {
    throw Error(ErrorCode::kParse, "malformed rational '" + std::string{text} + "'");
  }
  Integer den{1};
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!valid_integer_text(den_text)) {
      throw Error(ErrorCode::kParse, "malformed rational '" + std::string{text} + "'");
    }
    den = parse_integer(den_text);
    if (den == 0) {
      throw Error(ErrorCode::kParse, "zero denominator in '" + std::string{text} + "'");
    }
  }
  Rational r{parse_integer(num_text), den};
  r.canonicalize();
  return r;
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw Error(ErrorCode::kInvalidArgument, "integer " + z.get_str() + " out of range");
  }
  return z.get_si();
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) {
    throw Error(ErrorCode::kInvalidArgument, "expected an integer, got " + to_string(r));
  }
  return to_int64(r.get_num());
}

}  // namespace folcalc
