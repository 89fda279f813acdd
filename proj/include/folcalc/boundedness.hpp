#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "folcalc/rational.hpp"

namespace folcalc {

/// Sampled Hilbert function m -> chi(Y, O_Y(mK)).
struct HilbertSamples {
  std::map<std::int64_t, Rational> values;
  std::optional<std::int64_t> period_hint;
};

enum class ModelMode { kWeakNef, kCanonical };

inline constexpr std::int64_t kDefaultPeriodSearchBound = 60;

struct ModelInvariants {
  Rational k2;                     // B1 = K_G^2
  Rational k_dot_ky;               // B2 = K_G . K_Y
  std::int64_t chi_o = 0;          // B3 = chi(O_Y)
  Rational contribution_sum;       // S = -sum_y a(y, K_G)
  std::optional<std::int64_t> cusps;  // B4, canonical models only
  std::int64_t period = 1;         // resolved L
};

struct SingularityConfiguration {
  std::vector<std::int64_t> terminal_orders;  // nondecreasing
  std::int64_t dihedral_count = 0;
  std::int64_t cusp_count = 0;

  /// sum (n-1)/(2n) + dihedral/2 + cusps
  Rational contribution_sum() const;

  auto operator<=>(const SingularityConfiguration&) const = default;
  bool operator==(const SingularityConfiguration&) const = default;
};

/// Recovers B1, B2 from an exact quadratic fit along m = L, 2L, 3L, B3 = P(0),
/// S = -P(1) + (B1 - B2)/2 + B3, and in canonical mode the cusp count from the
/// shift of the constant term. L is the hint (doubled if odd in canonical
/// mode) or the least consistent L <= l_max.
ModelInvariants extract_invariants(const HilbertSamples& samples, ModelMode mode,
                                   std::int64_t l_max = kDefaultPeriodSearchBound);

/// floor(4S): each contributing point adds at least 1/4.
std::int64_t bound_singularity_count(const Rational& s);

/// All nondecreasing k-tuples with entries >= n_min and sum 1/n_i = c.
std::vector<std::vector<std::int64_t>> enumerate_reciprocal_tuples(std::int64_t k, const Rational& c,
                                                                   std::int64_t n_min = 2);

/// Singularity configurations whose contribution sum equals inv.contribution_sum,
/// in canonical sorted order.
std::vector<SingularityConfiguration> enumerate_configurations(const ModelInvariants& inv,
                                                               ModelMode mode);

struct IndexBounds {
  std::int64_t c2 = 1;                   // largest terminal order seen
  std::vector<std::int64_t> candidates;  // per configuration, same order
};

IndexBounds index_bounds(std::span<const SingularityConfiguration> configs, ModelMode mode);

struct N1Result {
  std::int64_t index = 1;
  Rational gamma;
  std::int64_t n1 = 0;
  /// (4i)^2 K^2 >= 16, i.e. i^2 K^2 >= 1.
  bool volume_threshold = false;
  /// (4i + 1) / i > 4.
  bool curve_threshold = false;
};

/// gamma = max(2 B2/B1 + 3i, 0), N1 = 4i + ceil(gamma) + 1 (a = 0).
N1Result compute_n1(const ModelInvariants& inv, std::int64_t index);

struct BoundReport {
  ModelInvariants invariants;
  std::vector<SingularityConfiguration> configurations;
  IndexBounds index;
  std::vector<N1Result> per_configuration;
  std::int64_t n1_worst = 0;
};

BoundReport pipeline(const HilbertSamples& samples, ModelMode mode,
                     std::int64_t l_max = kDefaultPeriodSearchBound);

/// weak - canonical equals -cusps at m = 0 and 0 elsewhere, over a shared key set.
bool relate_models(const std::map<std::int64_t, std::int64_t>& weak_nef_chi,
                   const std::map<std::int64_t, std::int64_t>& canonical_chi, std::int64_t cusps);

}  // namespace folcalc
