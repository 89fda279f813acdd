#include "folcalc/local_rr.hpp"

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/math/constants/constants.hpp>

#include <numeric>
#include <string>
#include <utility>

#include "folcalc/error.hpp"

namespace folcalc {

namespace mp = boost::multiprecision;

std::int64_t DihedralPoint::two_n() const { return (std::int64_t{1} << a_exp) * l * m_odd; }

SingularityDatum SingularityDatum::terminal(std::int64_t n, std::int64_t q, std::string label) {
  return {TerminalPoint{CyclicType(n, q)}, std::move(label)};
}

SingularityDatum SingularityDatum::dihedral(DihedralPoint d, std::string label) {
  validate(d);
  return {d, std::move(label)};
}

SingularityDatum SingularityDatum::cusp(std::string label) { return {CuspPoint{}, std::move(label)}; }

SingularityDatum SingularityDatum::gorenstein(std::string label) {
  return {GorensteinPoint{}, std::move(label)};
}

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw Error(ErrorCode::kInvalidDihedralDatum, "invalid dihedral datum: " + what);
}

bool congruent(std::int64_t a, std::int64_t b, std::int64_t mod) {
  return mod_floor(a - b, mod) == 0;
}

}  // namespace

void validate(const DihedralPoint& d) {
  if (d.a_exp < 1 || d.a_exp > 40) reject("a_exp must lie in [1, 40]");
  if (d.l < 1 || d.m_odd < 1 || d.p < 1) reject("l, m_odd and p must be positive");
  if (d.l % 2 == 0) reject("l must be odd");
  if (d.m_odd % 2 == 0) reject("m_odd must be odd");
  if (std::gcd(d.l, d.m_odd) != 1) reject("gcd(l, m_odd) must be 1");
  const std::int64_t two_a = std::int64_t{1} << d.a_exp;
  if (d.variant == DihedralVariant::kPrime) {
    if (!congruent(d.p, -1, two_a * d.m_odd)) reject("p ≡ -1 mod 2^a·m_odd fails");
    if (!congruent(d.p, 1, d.l)) reject("p ≡ 1 mod l fails");
  } else {
    if (d.a_exp < 2) reject("a_exp ≥ 2 required for variant e''");
    if (!congruent(d.p, 1, two_a)) reject("p ≡ 1 mod 2^a fails");
    if (!congruent(d.p, 1, d.l)) reject("p ≡ 1 mod l fails");
    if (!congruent(d.p, -1, d.m_odd)) reject("p ≡ -1 mod m_odd fails");
  }
}

Rational a_cyclic_sheaf(const CyclicType& t, std::int64_t i) {
  const std::int64_t n = t.n();
  if (i < 0 || i >= n) {
    throw Error(ErrorCode::kInvalidArgument, "sheaf index must lie in [0, n-1]");
  }
  std::int64_t sum = 0;
  for (std::int64_t j = 0; j < i; ++j) sum += (t.c() * j) % n;
  Rational value = Rational{sum} - make_rational(i * (n - 1), 2);
  value /= n;
  value.canonicalize();
  return value;
}

Rational a_terminal(const CyclicType& t, std::int64_t m) {
  return a_cyclic_sheaf(t, mod_floor(mod_floor(m, t.n()) * t.q(), t.n()));
}

Rational a_dihedral(std::int64_t m) { return m % 2 == 0 ? Rational{0} : make_rational(-1, 2); }

Rational a_cusp(std::int64_t m) { return m == 0 ? Rational{0} : Rational{-1}; }

Rational contribution(const SingularityDatum& datum, std::int64_t m) {
  struct Visitor {
    std::int64_t m;
    Rational operator()(const TerminalPoint& p) const { return a_terminal(p.type, m); }
    Rational operator()(const DihedralPoint&) const { return a_dihedral(m); }
    Rational operator()(const CuspPoint&) const { return a_cusp(m); }
    Rational operator()(const GorensteinPoint&) const { return Rational{0}; }
  };
  return std::visit(Visitor{m}, datum.kind);
}

ContributionTable contribution_table(const SingularityDatum& datum, std::span<const std::int64_t> ms) {
  ContributionTable table{datum, {}};
  for (auto m : ms) table.values.emplace(m, contribution(datum, m));
  return table;
}

DihedralSumReport dihedral_sum_verify(const DihedralPoint& datum) {
  validate(datum);
  const std::int64_t two_n = datum.two_n();
  const bool prime = datum.variant == DihedralVariant::kPrime;
  const std::int64_t shift = prime ? 0 : mod_floor(datum.m_odd * datum.l, two_n);
  // 1 + e^k has a pole at k = n, 1 - e^k at k = 0.
  const std::int64_t pole = prime ? two_n / 2 : 0;

  std::vector<std::int64_t> exponents;
  exponents.reserve(two_n);
  const std::int64_t step = mod_floor(datum.p + 1, two_n);
  for (std::int64_t j = 0; j < two_n; ++j) {
    const std::int64_t k = mod_floor(step * j % two_n + shift, two_n);
    if (k == pole) reject("group contains a pseudoreflection (pole at j=" + std::to_string(j) + ")");
    exponents.push_back(k);
  }

  DihedralSumReport report;
  report.expected_n = two_n / 2;

  // Route 1: every term has real part exactly 1/2 on the unit circle; the
  // imaginary parts cancel when the exponents are closed under k -> -k.
  std::vector<std::int64_t> counts(two_n, 0);
  for (auto k : exponents) ++counts[k];
  bool symmetric = true;
  for (std::int64_t k = 0; k < two_n && symmetric; ++k) {
    symmetric = counts[k] == counts[mod_floor(-k, two_n)];
  }
  if (symmetric) report.exact_sum = make_rational(two_n, 2);

  // Route 2: direct evaluation at 50 decimal digits.
  using Real = mp::cpp_bin_float_50;
  using Complex = mp::cpp_complex_50;
  const Real angle = 2 * boost::math::constants::pi<Real>() / Real(two_n);
  Complex sum{0};
  const Complex one{1};
  for (auto k : exponents) {
    const Complex z{mp::cos(angle * k), mp::sin(angle * k)};
    sum += prime ? one / (one + z) : one / (one - z);
  }
  const Complex diff = sum - Complex{Real(report.expected_n)};
  const Real dev = mp::abs(diff);
  report.sum_real = static_cast<double>(sum.real());
  report.sum_imag = static_cast<double>(sum.imag());
  report.deviation = static_cast<double>(dev);

  const Rational sum_value = report.exact_sum.value_or(Rational{report.expected_n});
  report.a_from_sum = -sum_value / Rational{two_n};
  report.a_from_sum.canonicalize();

  report.pass = dev < Real(kDihedralTolerance) &&
                report.exact_sum == Rational{report.expected_n} &&
                report.a_from_sum == a_dihedral(1);
  return report;
}

Rational chi_fchain(const CyclicType& t, std::int64_t m) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "m must be nonnegative");
  const std::int64_t n = t.n();
  const std::int64_t q = t.q();
  const std::int64_t r = mod_floor(mod_floor(m, n) * q, n);
  Integer sum{0};
  for (std::int64_t j = 0; j < r; ++j) sum += (t.c() * j) % n;
  const Integer mm{static_cast<long>(m)};
  Rational value = Rational{Integer{mm - r} * (n - 1)} / 2 + Rational{mm * (mm - 1) * q} / 2 + Rational{sum};
  value /= n;
  value.canonicalize();
  return value;
}

std::int64_t chi_partial_crepant(const SingularityDatum& datum, std::int64_t m) {
  struct Visitor {
    std::int64_t m;
    Rational operator()(const TerminalPoint&) const { return Rational{0}; }
    Rational operator()(const GorensteinPoint&) const { return Rational{0}; }
    // Blow up the two (1/2)(1,1) points x1, x2 on the partial resolution, where
    // K_F is of type L_1: chi = a(y, mK) - a(x1, mK_F) - a(x2, mK_F).
    Rational operator()(const DihedralPoint&) const {
      static const CyclicType half{2, 1};
      return a_dihedral(m) - 2 * a_terminal(half, m);
    }
    // c_1 = 0 and R^1 f_* O_X has length 1 at a cusp.
    Rational operator()(const CuspPoint&) const { return a_cusp(m) + 1; }
  };
  const Rational value = std::visit(Visitor{m}, datum.kind);
  if (!is_integer(value)) {
    throw Error(ErrorCode::kInconsistentModel, "non-integral local Euler characteristic");
  }
  return to_int64(value);
}

Rational global_chi(const Rational& k2, const Rational& k_dot_ky, std::int64_t chi_o,
                    std::span<const SingularityDatum> sings, std::int64_t m,
                    IntegralityCheck check) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "m must be nonnegative");
  const Rational mq{m};
  Rational value = mq * mq * k2 / 2 - mq * k_dot_ky / 2 + chi_o;
  for (const auto& s : sings) value += contribution(s, m);
  value.canonicalize();
  if (check == IntegralityCheck::kEnforce && !is_integer(value)) {
    throw Error(ErrorCode::kInconsistentModel,
                "inconsistent model data: chi(" + std::to_string(m) + ") = " + to_string(value));
  }
  return value;
}

}  // namespace folcalc
