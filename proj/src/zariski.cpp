#include "folcalc/zariski.hpp"

#include <algorithm>

#include "folcalc/error.hpp"

namespace folcalc {

namespace {

[[noreturn]] void not_pseudoeffective(const std::string& why) {
  throw Error(ErrorCode::kNotPseudoeffective, "not pseudoeffective relative to configuration: " + why);
}

// N supported on `support` with (d - N) . C_i = 0 for i in support.
QDivisor solve_negative_part(const QDivisor& d, const std::vector<std::size_t>& support) {
  const auto& graph = d.graph();
  IntMatrix a(support.size(), support.size());
  std::vector<Rational> rhs(support.size());
  for (std::size_t r = 0; r < support.size(); ++r) {
    for (std::size_t c = 0; c < support.size(); ++c)
      a(r, c) = static_cast<long>(graph.intersection(support[r], support[c]));
    rhs[r] = d.dot_curve(support[r]);
  }
  auto x = linalg::solve(a, rhs);
  if (!x) not_pseudoeffective("singular pairing on candidate support");
  QDivisor n(d.graph_ptr());
  for (std::size_t r = 0; r < support.size(); ++r) n[support[r]] = (*x)[r];
  return n;
}

}  // namespace

ZariskiResult zariski_decompose(const QDivisor& d) {
  const auto& graph = d.graph();
  std::vector<std::size_t> support;
  QDivisor negative(d.graph_ptr());
  std::vector<std::vector<std::size_t>> passes;

  while (true) {
    const QDivisor positive = d - negative;
    std::vector<std::size_t> added;
    for (std::size_t j = 0; j < graph.size(); ++j) {
      if (sgn(positive.dot_curve(j)) < 0) added.push_back(j);
    }
    if (added.empty()) {
      for (auto i : support) {
        if (sgn(negative[i]) <= 0) not_pseudoeffective("negative part is not effective on its support");
      }
      return ZariskiResult{positive, negative, support, std::move(passes)};
    }
    for (auto j : added) {
      // Curves already in the support meet P trivially, so they never reappear.
      support.push_back(j);
    }
    std::sort(support.begin(), support.end());
    if (!is_negative_definite(graph, std::span<const std::size_t>{support})) {
      not_pseudoeffective("candidate support is not negative definite");
    }
    negative = solve_negative_part(d, support);
    passes.push_back(support);
  }
}

Rational pseudo_threshold(const Rational& d1_sq, const Rational& d1_d2, const Rational& alpha) {
  if (sgn(d1_sq) <= 0) throw Error(ErrorCode::kInvalidArgument, "D1^2 must be positive");
  if (sgn(alpha) < 0) throw Error(ErrorCode::kInvalidArgument, "alpha must be nonnegative");
  Rational beta = 2 * d1_d2 / d1_sq + alpha;
  beta.canonicalize();
  return beta;
}

}  // namespace folcalc
