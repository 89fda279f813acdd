#pragma once

#include <cstdint>
#include <vector>

#include "folcalc/lattice.hpp"
#include "folcalc/rational.hpp"

namespace folcalc {

/// Cyclic quotient singularity of type (1/n)(1, q).
class CyclicType {
 public:
  /// Throws Error(kInvalidArgument) unless n >= 2, 1 <= q < n, gcd(n, q) = 1.
  CyclicType(std::int64_t n, std::int64_t q);

  std::int64_t n() const { return n_; }
  std::int64_t q() const { return q_; }

  /// The representative c in [1, n] of q c = -1 (mod n).
  std::int64_t c() const { return c_; }

  bool operator==(const CyclicType&) const = default;
  auto operator<=>(const CyclicType&) const = default;

 private:
  std::int64_t n_;
  std::int64_t q_;
  std::int64_t c_;
};

struct HJExpansion {
  std::vector<std::int64_t> entries;  // b_1, ..., b_r, each >= 2

  std::size_t length() const { return entries.size(); }
  /// -b_1, ..., -b_r
  std::vector<std::int64_t> self_intersections() const;
  /// b_1 - 1/(b_2 - 1/(... - 1/b_r))
  Rational evaluate() const;
};

HJExpansion hj_expansion(const CyclicType& t);

/// Minimal resolution string of t as a chain graph "C1".."Cr".
GraphPtr hj_string(const CyclicType& t);

struct WunramDegrees {
  std::vector<std::int64_t> s;  // s_0 = n, s_1 = q, ..., s_r = 1
  std::vector<std::int64_t> d;  // d_1..d_r
  std::vector<std::int64_t> t;  // t_1..t_r
};

enum class ResidueMode { kStrict, kReduce };

/// Digits of i in the Wunram basis s_1 > s_2 > ... > s_r = 1. Throws
/// Error(kInvalidArgument) if i is outside [0, n-1] in strict mode.
WunramDegrees wunram_degrees(const CyclicType& t, std::int64_t i,
                             ResidueMode mode = ResidueMode::kStrict);

/// Degrees (-1, 0, ..., 0) of K_F on the F-chain of t.
IntersectionProfile fchain_profile(const CyclicType& t);

/// Profile of K_X on the resolution: K_X . C_j = b_j - 2.
IntersectionProfile canonical_profile(const CyclicType& t);

inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace folcalc
