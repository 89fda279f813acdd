#include "folcalc/matrix.hpp"

#include <utility>

namespace folcalc::linalg {

std::vector<Integer> leading_principal_minors(IntMatrix a) {
  const std::size_t n = a.rows();
  std::vector<Integer> minors;
  minors.reserve(n);
  Integer prev{1};
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a(k, k));
    if (a(k, k) == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return minors;
}

bool is_negative_definite(const IntMatrix& a) {
  IntMatrix neg = a;
  for (std::size_t i = 0; i < neg.rows(); ++i)
    for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
  const auto minors = leading_principal_minors(std::move(neg));
  if (minors.size() != a.rows()) return false;
  for (const auto& m : minors) {
    if (m <= 0) return false;
  }
  return true;
}

namespace {

// Forward Bareiss elimination with first-nonzero pivoting on an n x m matrix
// whose leading n x n block is square. Returns false if that block is singular;
// otherwise `sign` holds the row-exchange parity.
bool bareiss_forward(IntMatrix& a, int& sign) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  Integer prev{1};
  sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != k) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a(pivot, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return true;
}

}  // namespace

Integer determinant(IntMatrix a) {
  if (a.rows() == 0) return Integer{1};
  int sign = 1;
  if (!bareiss_forward(a, sign)) return Integer{0};
  return sign * a(a.rows() - 1, a.rows() - 1);
}

std::optional<std::vector<Rational>> solve(const IntMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  assert(a.cols() == n && b.size() == n);

  // Clear denominators of b so the augmented system stays integral.
  Integer scale{1};
  for (const auto& v : b) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());

  IntMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    Rational scaled = b[i] * scale;
    aug(i, n) = scaled.get_num();
  }
  int sign = 1;
  if (!bareiss_forward(aug, sign)) return std::nullopt;

  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc{aug(k, n)};
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational{aug(k, j)} * x[j];
    x[k] = acc / Rational{aug(k, k)};
  }
  for (auto& v : x) {
    v /= Rational{scale};
    v.canonicalize();
  }
  return x;
}

}  // namespace folcalc::linalg
