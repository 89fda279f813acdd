#include "folcalc/cyclic.hpp"

#include <numeric>
#include <string>

#include "folcalc/error.hpp"

namespace folcalc {

CyclicType::CyclicType(std::int64_t n, std::int64_t q) : n_(n), q_(q), c_(0) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "n must be at least 2");
  if (q < 1 || q >= n) throw Error(ErrorCode::kInvalidArgument, "q must satisfy 1 <= q < n");
  if (std::gcd(n, q) != 1) throw Error(ErrorCode::kInvalidArgument, "gcd(n,q) must be 1");
  for (std::int64_t c = 1; c <= n; ++c) {
    if (mod_floor(q * c + 1, n) == 0) {
      c_ = c;
      break;
    }
  }
}

std::vector<std::int64_t> HJExpansion::self_intersections() const {
  std::vector<std::int64_t> out;
  out.reserve(entries.size());
  for (auto b : entries) out.push_back(-b);
  return out;
}

Rational HJExpansion::evaluate() const {
  Rational acc{entries.back()};
  for (std::size_t k = entries.size() - 1; k-- > 0;) acc = Rational{entries[k]} - 1 / acc;
  return acc;
}

HJExpansion hj_expansion(const CyclicType& t) {
  HJExpansion out;
  std::int64_t num = t.n();
  std::int64_t den = t.q();
  // num/den = b - (b*den - num)/den with b = ceil(num/den); remainder in [0, den).
  while (den != 0) {
    const std::int64_t b = (num + den - 1) / den;
    out.entries.push_back(b);
    const std::int64_t rem = b * den - num;
    num = den;
    den = rem;
  }
  return out;
}

GraphPtr hj_string(const CyclicType& t) {
  const auto self = hj_expansion(t).self_intersections();
  return std::make_shared<const DualGraph>(DualGraph::chain(self));
}

WunramDegrees wunram_degrees(const CyclicType& t, std::int64_t i, ResidueMode mode) {
  if (mode == ResidueMode::kReduce) i = mod_floor(i, t.n());
  if (i < 0 || i >= t.n()) {
    throw Error(ErrorCode::kInvalidArgument,
                "i must lie in [0, " + std::to_string(t.n() - 1) + "]");
  }
  const auto b = hj_expansion(t).entries;
  const std::size_t r = b.size();

  WunramDegrees out;
  out.s.reserve(r + 1);
  out.s.push_back(t.n());
  out.s.push_back(t.q());
  for (std::size_t j = 2; j <= r; ++j) out.s.push_back(b[j - 2] * out.s[j - 1] - out.s[j - 2]);

  std::int64_t rest = i;
  for (std::size_t j = 1; j <= r; ++j) {
    out.d.push_back(rest / out.s[j]);
    rest %= out.s[j];
    out.t.push_back(rest);
  }
  return out;
}

IntersectionProfile fchain_profile(const CyclicType& t) {
  auto graph = hj_string(t);
  std::vector<Rational> degrees(graph->size());
  degrees[0] = -1;
  return IntersectionProfile(std::move(graph), std::move(degrees));
}

IntersectionProfile canonical_profile(const CyclicType& t) {
  auto graph = hj_string(t);
  std::vector<Rational> degrees;
  for (std::size_t j = 0; j < graph->size(); ++j) degrees.emplace_back(-graph->curve(j).self_intersection - 2);
  return IntersectionProfile(std::move(graph), std::move(degrees));
}

}  // namespace folcalc
