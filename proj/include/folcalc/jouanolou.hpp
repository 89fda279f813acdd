#pragma once

#include <cstdint>
#include <vector>

#include "folcalc/rational.hpp"

namespace folcalc {

/// Degree-d Jouanolou foliation modulo its automorphism group.
struct JouanolouEntry {
  std::int64_t d = 2;
  Rational volume;          // (d-1)^2 / (d^2 + d + 1)
  std::int64_t aut_order = 0;  // 3 (d^2 + d + 1)
  /// Terminal points on the quotient; their (n, q) types are not recorded.
  static constexpr int kTerminalPoints = 3;

  Rational gap() const { return 1 - volume; }
};

JouanolouEntry jouanolou_entry(std::int64_t d);

struct AccumulationReport {
  std::vector<JouanolouEntry> entries;
  bool strictly_increasing = false;
  bool all_below_one = false;
  Rational minimum;
  /// 1 - volume(d_max) < 3 / d_max
  bool convergence_witness = false;
  /// 1 - volume(d) == 3d / (d^2 + d + 1) for every row.
  bool gap_identity = false;
};

AccumulationReport accumulation_report(std::int64_t d_max);

}  // namespace folcalc
