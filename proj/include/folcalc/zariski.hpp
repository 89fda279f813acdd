#pragma once

#include <cstddef>
#include <vector>

#include "folcalc/lattice.hpp"
#include "folcalc/rational.hpp"

namespace folcalc {

struct ZariskiResult {
  QDivisor positive;                  // P
  QDivisor negative;                  // N
  std::vector<std::size_t> support;   // curve indices of N, ascending
  /// Support after each pass; each entry contains the previous one.
  std::vector<std::vector<std::size_t>> passes;
};

/// D = P + N relative to the listed curves: P . C >= 0 for every curve,
/// N > 0 exactly on a negative definite support, P . N_i = 0 there.
///
/// Starts from an empty support and, on each pass, solves (D - N) . C_i = 0
/// over the current support, then adds every curve meeting D - N negatively.
/// Throws Error(kNotPseudoeffective) if a candidate support stops being
/// negative definite or the final N is not strictly positive on its support.
ZariskiResult zariski_decompose(const QDivisor& d);

/// beta = 2 D1.D2 / D1^2 + alpha, the coefficient making beta D1 - D2
/// pseudoeffective when D1 is nef and big and D2 + alpha D1 is nef.
Rational pseudo_threshold(const Rational& d1_sq, const Rational& d1_d2, const Rational& alpha);

}  // namespace folcalc
