#include "folcalc/jouanolou.hpp"

#include "folcalc/error.hpp"

namespace folcalc {

JouanolouEntry jouanolou_entry(std::int64_t d) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "d must be at least 2");
  const std::int64_t denom = d * d + d + 1;
  JouanolouEntry e;
  e.d = d;
  e.volume = make_rational((d - 1) * (d - 1), denom);
  e.aut_order = 3 * denom;
  return e;
}

AccumulationReport accumulation_report(std::int64_t d_max) {
  if (d_max < 2) throw Error(ErrorCode::kInvalidArgument, "d_max must be at least 2");
  AccumulationReport r;
  r.strictly_increasing = true;
  r.all_below_one = true;
  r.gap_identity = true;
  r.entries.reserve(static_cast<std::size_t>(d_max - 1));
  for (std::int64_t d = 2; d <= d_max; ++d) {
    auto e = jouanolou_entry(d);
    if (!r.entries.empty() && !(r.entries.back().volume < e.volume)) r.strictly_increasing = false;
    if (!(e.volume < 1)) r.all_below_one = false;
    if (e.gap() != make_rational(3 * d, d * d + d + 1)) r.gap_identity = false;
    if (r.entries.empty() || e.volume < r.minimum) r.minimum = e.volume;
    r.entries.push_back(std::move(e));
  }
  r.convergence_witness = r.entries.back().gap() < make_rational(3, d_max);
  return r;
}

}  // namespace folcalc
