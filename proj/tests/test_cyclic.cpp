#include <doctest.h>

#include <map>
#include <numeric>

#include "folcalc/cyclic.hpp"
#include "folcalc/error.hpp"

using namespace folcalc;

namespace {

// Continued fraction b_1 - 1/(b_2 - 1/(...)) evaluated from the tail.
Rational evaluate_tail(const std::vector<std::int64_t>& b) {
  Rational v = b.back();
  for (std::size_t k = b.size() - 1; k-- > 0;) v = Rational{b[k]} - 1 / v;
  return v;
}

}  // namespace

TEST_CASE("Hirzebruch-Jung expansions") {
  CHECK(hj_expansion(CyclicType(2, 1)).entries == std::vector<std::int64_t>{2});
  CHECK(hj_expansion(CyclicType(3, 2)).entries == std::vector<std::int64_t>{2, 2});
  CHECK(hj_expansion(CyclicType(12, 5)).entries == std::vector<std::int64_t>{3, 2, 3});
  CHECK(hj_expansion(CyclicType(7, 1)).entries == std::vector<std::int64_t>{7});
  CHECK(hj_expansion(CyclicType(5, 4)).entries == std::vector<std::int64_t>{2, 2, 2, 2});
  CHECK(hj_expansion(CyclicType(12, 5)).self_intersections() == std::vector<std::int64_t>{-3, -2, -3});
}

TEST_CASE("expansion reproduces n/q") {
  for (std::int64_t n = 2; n <= 200; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const auto e = hj_expansion(CyclicType(n, q));
      CAPTURE(n);
      CAPTURE(q);
      for (auto b : e.entries) CHECK(b >= 2);
      CHECK(evaluate_tail(e.entries) == make_rational(n, q));
      CHECK(e.evaluate() == make_rational(n, q));
      const auto g = hj_string(CyclicType(n, q));
      REQUIRE(g->size() == e.length());
      for (std::size_t j = 0; j < g->size(); ++j) {
        CHECK(g->curve(j).self_intersection == -e.entries[j]);
        CHECK(g->curve(j).label == "C" + std::to_string(j + 1));
      }
    }
}

TEST_CASE("invalid cyclic types") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 2}, {1, 0}, {5, 0}, {5, 5}, {6, 9}, {0, 1}}) {
    CAPTURE(n);
    CAPTURE(q);
    try {
      CyclicType(n, q);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidArgument);
    }
  }
}

TEST_CASE("c solves qc = -1 mod n") {
  for (std::int64_t n = 2; n <= 100; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const CyclicType t(n, q);
      CHECK(t.c() >= 1);
      CHECK(t.c() <= n);
      CHECK(mod_floor(q * t.c() + 1, n) == 0);
    }
}

TEST_CASE("Wunram degrees examples") {
  const CyclicType t(5, 2);
  const auto w2 = wunram_degrees(t, 2);
  CHECK(w2.s == std::vector<std::int64_t>{5, 2, 1});
  CHECK(w2.d == std::vector<std::int64_t>{1, 0});
  CHECK(w2.t == std::vector<std::int64_t>{0, 0});
  const auto w3 = wunram_degrees(t, 3);
  CHECK(w3.d == std::vector<std::int64_t>{1, 1});
  CHECK(w3.t == std::vector<std::int64_t>{1, 0});
  CHECK(wunram_degrees(t, 1).d == std::vector<std::int64_t>{0, 1});

  try {
    wunram_degrees(t, 5);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
  CHECK(wunram_degrees(t, 7, ResidueMode::kReduce).d == w2.d);
  CHECK(wunram_degrees(t, -2, ResidueMode::kReduce).d == w3.d);
}

TEST_CASE("Wunram decomposition is injective and reconstructs i") {
  for (std::int64_t n = 2; n <= 60; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const CyclicType t(n, q);
      std::map<std::vector<std::int64_t>, std::int64_t> seen;
      for (std::int64_t i = 0; i < n; ++i) {
        const auto w = wunram_degrees(t, i);
        REQUIRE(w.s.size() == w.d.size() + 1);
        CHECK(w.s.front() == n);
        CHECK(w.s.back() == 1);
        CHECK(w.s[1] == q);
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < w.d.size(); ++j) {
          CHECK(w.d[j] >= 0);
          sum += w.d[j] * w.s[j + 1];
        }
        CHECK(sum == i);
        CHECK(seen.emplace(w.d, i).second);
      }
      const auto at_q = wunram_degrees(t, q);
      CHECK(at_q.d.front() == 1);
      CHECK(std::accumulate(at_q.d.begin(), at_q.d.end(), std::int64_t{0}) == 1);
    }
}

TEST_CASE("F-chain and canonical profiles") {
  const CyclicType t(12, 5);
  const auto f = fchain_profile(t);
  CHECK(f.degrees()[0] == -1);
  CHECK(f.degrees()[1] == 0);
  CHECK(f.degrees()[2] == 0);
  const auto k = canonical_profile(t);
  CHECK(k.degrees()[0] == 1);
  CHECK(k.degrees()[1] == 0);
  CHECK(k.degrees()[2] == 1);
}
