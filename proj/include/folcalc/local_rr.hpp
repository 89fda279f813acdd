#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "folcalc/cyclic.hpp"
#include "folcalc/rational.hpp"

namespace folcalc {

struct TerminalPoint {
  CyclicType type;
  bool operator==(const TerminalPoint&) const = default;
};

enum class DihedralVariant { kPrime, kDoublePrime };  // cases e' and e''

/// Dihedral quotient singularity of group order 4n, 2n = 2^a_exp * l * m_odd.
struct DihedralPoint {
  std::int64_t a_exp = 1;
  std::int64_t l = 1;
  std::int64_t m_odd = 1;
  std::int64_t p = 1;
  DihedralVariant variant = DihedralVariant::kPrime;

  std::int64_t two_n() const;
  std::int64_t n() const { return two_n() / 2; }

  bool operator==(const DihedralPoint&) const = default;
};

struct CuspPoint {
  bool operator==(const CuspPoint&) const = default;
};

/// Canonical, non-terminal, Gorenstein foliation point; never contributes.
struct GorensteinPoint {
  bool operator==(const GorensteinPoint&) const = default;
};

struct SingularityDatum {
  std::variant<TerminalPoint, DihedralPoint, CuspPoint, GorensteinPoint> kind;
  std::string label;

  static SingularityDatum terminal(std::int64_t n, std::int64_t q, std::string label = {});
  static SingularityDatum dihedral(DihedralPoint d, std::string label = {});
  static SingularityDatum cusp(std::string label = {});
  static SingularityDatum gorenstein(std::string label = {});
};

/// Throws Error(kInvalidDihedralDatum) naming the first violated condition.
void validate(const DihedralPoint& d);

/// a(y, L_i) at a (1/n)(1,q) point, 0 <= i < n.
Rational a_cyclic_sheaf(const CyclicType& t, std::int64_t i);

/// a(y, mK) at a terminal point: O(mK) is of type L_{mq mod n}.
Rational a_terminal(const CyclicType& t, std::int64_t m);

/// 0 for m even, -1/2 for m odd.
Rational a_dihedral(std::int64_t m);

/// 0 for m = 0, -1 otherwise.
Rational a_cusp(std::int64_t m);

Rational contribution(const SingularityDatum& datum, std::int64_t m);

struct ContributionTable {
  SingularityDatum datum;
  std::map<std::int64_t, Rational> values;
};

ContributionTable contribution_table(const SingularityDatum& datum, std::span<const std::int64_t> ms);

struct DihedralSumReport {
  std::int64_t expected_n = 0;
  /// High-precision evaluation, rounded to double for reporting.
  double sum_real = 0.0;
  double sum_imag = 0.0;
  double deviation = 0.0;  // |sum - n|
  /// Exact value from the conjugate pairing route, when the exponent multiset
  /// is closed under negation.
  std::optional<Rational> exact_sum;
  /// a(y, K) = -sum / (2n), from the exact route when available.
  Rational a_from_sum;
  bool pass = false;
};

inline constexpr double kDihedralTolerance = 1e-9;

/// Evaluates sum_j 1/(1 + e^{(p+1)j}) (e') or sum_j 1/(1 - e^{(p+1)j + m l}) (e'')
/// over j = 0..2n-1, e = exp(2 pi i / 2n), by two independent routes.
DihedralSumReport dihedral_sum_verify(const DihedralPoint& datum);

/// chi(y, O_X(mK_F)) for the F-chain contracting to a (1/n)(1,q) point; m >= 0.
Rational chi_fchain(const CyclicType& t, std::int64_t m);

/// chi(y, O_X(mK_F)) over the minimal partial crepant resolution.
std::int64_t chi_partial_crepant(const SingularityDatum& datum, std::int64_t m);

enum class IntegralityCheck { kEnforce, kSkip };

/// 1/2 m^2 K2 - 1/2 m KKY + chiO + sum_y a(y, mK). With kEnforce a
/// non-integral value throws Error(kInconsistentModel).
Rational global_chi(const Rational& k2, const Rational& k_dot_ky, std::int64_t chi_o,
                    std::span<const SingularityDatum> sings, std::int64_t m,
                    IntegralityCheck check = IntegralityCheck::kEnforce);

}  // namespace folcalc
