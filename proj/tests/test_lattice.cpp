#include <doctest.h>

#include <random>

#include "folcalc/cyclic.hpp"
#include "folcalc/error.hpp"
#include "folcalc/lattice.hpp"
#include "folcalc/local_rr.hpp"
#include "synthetic.hpp"

using namespace folcalc;
using folcalc::testing::brute_negative_definite;
using folcalc::testing::rand_int;
using folcalc::testing::random_graph;

namespace {

GraphPtr share(DualGraph g) { return std::make_shared<const DualGraph>(std::move(g)); }

GraphPtr cusp_cycle() {
  return share(DualGraph({{"A", -2}, {"B", -2}, {"C", -2}}, {{"A", "B", 1}, {"B", "C", 1}, {"C", "A", 1}}));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("intersection matrix of small configurations") {
  const auto g = hj_string(CyclicType(3, 2));
  const auto m = intersection_matrix(*g);
  CHECK(m(0, 0) == -2);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 1);
  CHECK(m(1, 1) == -2);

  const std::vector<std::int64_t> one{-1};
  const auto single = DualGraph::chain(one);
  CHECK(intersection_matrix(single)(0, 0) == -1);

  const auto cyc = cusp_cycle();
  CHECK(cyc->intersection(0, 2) == 1);
  CHECK(cyc->intersection(2, 0) == 1);
}

TEST_CASE("graph construction is validated") {
  CHECK(code_of([] { DualGraph({{"A", -2}, {"A", -3}}, {}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { DualGraph({{"A", -2}}, {{"A", "B", 1}}); }) == ErrorCode::kUnknownLabel);
  CHECK(code_of([] { DualGraph({{"A", -2}, {"B", -2}}, {{"A", "B", -1}}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { DualGraph({{"A", -2}}, {{"A", "A", 1}}); }) == ErrorCode::kInvalidArgument);
  const auto g = hj_string(CyclicType(5, 2));
  CHECK(code_of([&] { g->index_of("nope"); }) == ErrorCode::kUnknownLabel);
}

TEST_CASE("negative definiteness") {
  for (std::int64_t n = 2; n <= 60; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const auto g = hj_string(CyclicType(n, q));
      std::vector<std::size_t> all(g->size());
      std::iota(all.begin(), all.end(), 0);
      CHECK(is_negative_definite(*g, all));
    }

  const auto cyc = cusp_cycle();
  const std::vector<std::string> abc{"A", "B", "C"};
  CHECK_FALSE(is_negative_definite(*cyc, abc));
  const std::vector<std::string> ab{"A", "B"};
  CHECK(is_negative_definite(*cyc, ab));

  const std::vector<std::int64_t> zero{0};
  const auto flat = DualGraph::chain(zero);
  const std::vector<std::size_t> first{0};
  CHECK_FALSE(is_negative_definite(flat, first));

  CHECK(code_of([&] { is_negative_definite(*cyc, std::span<const std::size_t>{}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("negative definiteness agrees with Leibniz minors on every subset") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t size = static_cast<std::size_t>(rand_int(rng, 1, trial < 8 ? 8 : 6));
    const auto g = random_graph(rng, size, -5, 1, 2);
    for (std::uint32_t mask = 1; mask < (1u << size); ++mask) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < size; ++i)
        if (mask & (1u << i)) support.push_back(i);
      CAPTURE(trial);
      CAPTURE(mask);
      CHECK(is_negative_definite(g, support) == brute_negative_definite(g, support));
    }
  }
}

TEST_CASE("pull-back on cyclic quotient strings") {
  for (std::int64_t n = 2; n <= 100; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const CyclicType t(n, q);
      const auto z = solve_pullback(fchain_profile(t));
      const auto x = solve_pullback(canonical_profile(t));
      CAPTURE(n);
      CAPTURE(q);
      // y_1 = q/n and the canonical discrepancy x_1 = -1 + (q+1)/n
      CHECK(z[0] == make_rational(q, n));
      CHECK(x[0] == make_rational(q + 1, n) - 1);
      CHECK(pair(z, z) == -make_rational(q, n));
      CHECK(z.dot_curve(0) == -1);
    }
}

TEST_CASE("pull-back round trip on random invertible graphs") {
  std::mt19937_64 rng(5);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = share(random_graph(rng, static_cast<std::size_t>(rand_int(rng, 1, 7)), -6, -1, 2));
    std::vector<Rational> degrees(g->size());
    for (auto& d : degrees) d = make_rational(rand_int(rng, -9, 9), rand_int(rng, 1, 4));
    const IntersectionProfile profile(g, degrees);
    IntMatrix m(g->size(), g->size());
    for (std::size_t i = 0; i < g->size(); ++i)
      for (std::size_t j = 0; j < g->size(); ++j) m(i, j) = g->intersection(i, j);
    if (linalg::determinant(m) == 0) {
      CHECK(code_of([&] { solve_pullback(profile); }) == ErrorCode::kDegenerateConfiguration);
      continue;
    }
    ++solved;
    const auto z = solve_pullback(profile);
    for (std::size_t j = 0; j < g->size(); ++j) CHECK(z.dot_curve(j) == degrees[j]);
  }
  CHECK(solved > 100);
}

TEST_CASE("zero profile and degenerate cycle") {
  const auto g = hj_string(CyclicType(7, 3));
  const IntersectionProfile zero(g, std::vector<Rational>(g->size()));
  CHECK(solve_pullback(zero).is_zero());

  const auto cyc = cusp_cycle();
  const IntersectionProfile p(cyc, {make_rational(-1), 0, 0});
  CHECK(code_of([&] { solve_pullback(p); }) == ErrorCode::kDegenerateConfiguration);
}

TEST_CASE("negative definite strings satisfy the maximum principle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = folcalc::testing::random_cyclic(rng, 2, 150);
    const auto g = hj_string(t);
    std::vector<Rational> deg(g->size());
    for (auto& d : deg) d = -rand_int(rng, 0, 5);
    const auto z = solve_pullback(IntersectionProfile(g, deg));
    for (auto c : z.coefficients()) CHECK(c >= 0);
  }
}

TEST_CASE("pairing is symmetric and bilinear") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = share(random_graph(rng, static_cast<std::size_t>(rand_int(rng, 1, 6)), -4, 2, 3));
    auto rnd = [&] {
      std::vector<Rational> c(g->size());
      for (auto& v : c) v = make_rational(rand_int(rng, -6, 6), rand_int(rng, 1, 5));
      return QDivisor(g, c);
    };
    const auto a = rnd(), b = rnd(), c = rnd();
    const auto s = make_rational(rand_int(rng, -5, 5), rand_int(rng, 1, 3));
    CHECK(pair(a, b) == pair(b, a));
    CHECK(pair(a + s * b, c) == pair(a, c) + s * pair(b, c));
    CHECK(pair(a, QDivisor(g)) == 0);
  }
  const auto g = hj_string(CyclicType(3, 2));
  const auto c1 = QDivisor::from_labels(g, {{"C1", 1}});
  const auto c2 = QDivisor::from_labels(g, {{"C2", 1}});
  CHECK(pair(c1, c2) == 1);
  CHECK(pair(c1, c1) == -2);

  const auto other = hj_string(CyclicType(3, 2));
  CHECK(code_of([&] { pair(c1, QDivisor::from_labels(hj_string(CyclicType(5, 2)), {{"C1", 1}})); }) ==
        ErrorCode::kMismatchedGraphs);
  (void)other;
}

TEST_CASE("Hodge index examples") {
  const auto hyp = share(DualGraph({{"H", 1, false}, {"E", -1, false}}, {}));
  const auto h = QDivisor::from_labels(hyp, {{"H", 1}});
  const auto e = QDivisor::from_labels(hyp, {{"E", 1}});

  const auto same = hodge_inequality_check(h, h, 3);
  CHECK(same.hypothesis_holds);
  CHECK(same.inequality_holds);
  CHECK(same.equality);
  REQUIRE(same.trivial_combination);
  CHECK(same.trivial_combination->first * h + same.trivial_combination->second * h == QDivisor(hyp));
  CHECK(same.trivial_combination->first != 0);

  const auto mixed = hodge_inequality_check(h, e, 3);
  CHECK(mixed.hypothesis_holds);
  CHECK(mixed.inequality_holds);
  CHECK_FALSE(mixed.equality);
  REQUIRE(mixed.witness);
  const auto [a, b] = *mixed.witness;
  const auto w = Rational{a} * h + Rational{b} * e;
  CHECK(pair(w, w) > 0);

  const auto neg = hodge_inequality_check(e, e, 3);
  CHECK_FALSE(neg.hypothesis_holds);
}

TEST_CASE("Hodge inequality never fails on a hyperbolic lattice") {
  const auto g = share(DualGraph({{"H", 1, false}, {"E1", -1, false}, {"E2", -1, false}}, {}));
  std::mt19937_64 rng(21);
  int hypotheses = 0;
  for (int trial = 0; trial < 600; ++trial) {
    auto rnd = [&] {
      std::vector<Rational> c(3);
      for (auto& v : c) v = make_rational(rand_int(rng, -5, 5), rand_int(rng, 1, 3));
      return QDivisor(g, c);
    };
    const auto d1 = rnd(), d2 = rnd();
    const auto r = hodge_inequality_check(d1, d2, 5);
    if (r.hypothesis_holds) {
      ++hypotheses;
      CHECK(r.inequality_holds);
      CHECK(pair(d1, d1) * pair(d2, d2) <= pair(d1, d2) * pair(d1, d2));
    }
  }
  CHECK(hypotheses > 100);
}

TEST_CASE("chi additivity along composite resolutions") {
  CHECK(chi_additivity_check({{0}, {0}, {0}}));
  CHECK_FALSE(chi_additivity_check({{1}, {0}, {0}}));
  CHECK_FALSE(chi_additivity_check({{-1}, {1}, {0}}));
  CHECK(chi_additivity_check({{1, 2}, {3}, {6}}));

  // Two 1/2(1,1) points over a dihedral point: each F-chain is a single -2 curve.
  const CyclicType half(2, 1);
  const auto g = hj_string(half);
  const auto z = solve_pullback(fchain_profile(half));
  const auto x = solve_pullback(canonical_profile(half));
  for (std::int64_t m = 0; m <= 12; ++m) {
    const Rational shift = (m * m * pair(z, z) - m * pair(z, x)) / 2;
    const Rational chi_point = a_terminal(half, m) - shift;
    REQUIRE(is_integer(chi_point));
    CHECK(chi_point == chi_fchain(half, m));
    const Rational chi_composite = a_dihedral(m) - 2 * shift;
    REQUIRE(is_integer(chi_composite));
    const auto g_part = chi_partial_crepant(SingularityDatum::dihedral(DihedralPoint{}), m);
    const ChiChain chain{{to_int64(chi_point), to_int64(chi_point)}, {g_part}, {to_int64(chi_composite)}};
    CAPTURE(m);
    CHECK(chi_additivity_check(chain));
  }
}
