#include "folcalc/boundedness.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>

#include "folcalc/error.hpp"

namespace folcalc {

Rational SingularityConfiguration::contribution_sum() const {
  Rational s{dihedral_count};
  s /= 2;
  s += cusp_count;
  for (auto n : terminal_orders) s += make_rational(n - 1, 2 * n);
  s.canonicalize();
  return s;
}

// ------------------------------------------------------------- extraction

namespace {

struct Fit {
  Rational k2;
  Rational k_dot_ky;
  Rational constant;  // value of the residue-0 branch extrapolated to m = 0
};

const Rational* sample(const HilbertSamples& s, std::int64_t m) {
  auto it = s.values.find(m);
  return it == s.values.end() ? nullptr : &it->second;
}

// Quadratic through (k, P(kL)) for k = 1, 2, 3.
std::optional<Fit> fit_residue_zero(const HilbertSamples& s, std::int64_t period) {
  const Rational* y1 = sample(s, period);
  const Rational* y2 = sample(s, 2 * period);
  const Rational* y3 = sample(s, 3 * period);
  if (!y1 || !y2 || !y3) return std::nullopt;
  const Rational alpha = (*y3 - 2 * *y2 + *y1) / 2;
  const Rational beta = *y2 - *y1 - 3 * alpha;
  const Rational gamma = *y1 - alpha - beta;
  const Rational lq{period};
  Fit fit{2 * alpha / (lq * lq), -2 * beta / lq, gamma};
  fit.k2.canonicalize();
  fit.k_dot_ky.canonicalize();
  fit.constant.canonicalize();
  return fit;
}

// P(m) - (m^2 B1 - m B2)/2 must be constant on each residue class mod L
// (m >= 1), and equal to the fitted constant on the class of 0.
bool residues_consistent(const HilbertSamples& s, std::int64_t period, const Fit& fit) {
  std::map<std::int64_t, Rational> residual;
  residual.emplace(0, fit.constant);
  for (const auto& [m, value] : s.values) {
    if (m == 0) continue;
    const Rational mq{m};
    Rational r = value - (mq * mq * fit.k2 - mq * fit.k_dot_ky) / 2;
    r.canonicalize();
    auto [it, inserted] = residual.emplace(m % period, r);
    if (!inserted && it->second != r) return false;
  }
  return true;
}

std::optional<ModelInvariants> try_period(const HilbertSamples& s, ModelMode mode, std::int64_t period) {
  const Rational* p0 = sample(s, 0);
  const Rational* p1 = sample(s, 1);
  if (!p0 || !p1) return std::nullopt;
  auto fit = fit_residue_zero(s, period);
  if (!fit || !residues_consistent(s, period, *fit)) return std::nullopt;
  if (!is_integer(*p0)) return std::nullopt;

  ModelInvariants inv;
  inv.k2 = fit->k2;
  inv.k_dot_ky = fit->k_dot_ky;
  inv.chi_o = to_int64(*p0);
  inv.period = period;
  if (mode == ModelMode::kWeakNef) {
    if (fit->constant != *p0) return std::nullopt;
  } else {
    const Rational shift = *p0 - fit->constant;
    if (!is_integer(shift) || sgn(shift) < 0) return std::nullopt;
    inv.cusps = to_int64(shift);
  }
  inv.contribution_sum = (inv.k2 - inv.k_dot_ky) / 2 + inv.chi_o - *p1;
  inv.contribution_sum.canonicalize();
  return inv;
}

}  // namespace

ModelInvariants extract_invariants(const HilbertSamples& samples, ModelMode mode, std::int64_t l_max) {
  if (!sample(samples, 0) || !sample(samples, 1)) {
    throw Error(ErrorCode::kIncompatibleSamples, "samples must include P(0) and P(1)");
  }
  std::vector<std::int64_t> candidates;
  if (samples.period_hint) {
    std::int64_t l = *samples.period_hint;
    if (l < 1) throw Error(ErrorCode::kInvalidArgument, "period_hint must be positive");
    if (mode == ModelMode::kCanonical && l % 2 != 0) l *= 2;
    candidates.push_back(l);
  } else {
    for (std::int64_t l = 1; l <= l_max; ++l) {
      if (mode == ModelMode::kCanonical && l % 2 != 0) continue;
      candidates.push_back(l);
    }
  }

  for (auto l : candidates) {
    auto inv = try_period(samples, mode, l);
    if (!inv) continue;
    if (sgn(inv->k2) <= 0) throw Error(ErrorCode::kNotGeneralType, "not general type: K^2 <= 0");
    if (sgn(inv->contribution_sum) < 0) {
      throw Error(ErrorCode::kInconsistentContribution, "inconsistent contribution sum S < 0");
    }
    return *inv;
  }
  const std::string which = samples.period_hint ? std::to_string(candidates.front())
                                                : "any L <= " + std::to_string(l_max);
  throw Error(ErrorCode::kIncompatibleSamples,
              "samples incompatible with quasi-polynomial of period " + which);
}

std::int64_t bound_singularity_count(const Rational& s) {
  if (sgn(s) < 0) throw Error(ErrorCode::kInconsistentContribution, "inconsistent contribution sum S < 0");
  return to_int64(floor(4 * s));
}

// ------------------------------------------------------------ enumeration

namespace {

using Tuple = std::vector<std::int64_t>;

void extend(std::int64_t k, const Rational& c, std::int64_t lo, Tuple& prefix, std::vector<Tuple>& out) {
  if (k == 0) {
    if (sgn(c) == 0) out.push_back(prefix);
    return;
  }
  if (sgn(c) <= 0) return;
  // Smallest entry n satisfies 1/n <= c and c <= k/n.
  const std::int64_t first = std::max(lo, to_int64(ceil(1 / c)));
  const std::int64_t last = to_int64(floor(k / c));
  for (std::int64_t n = first; n <= last; ++n) {
    prefix.push_back(n);
    extend(k - 1, c - make_rational(1, n), n, prefix, out);
    prefix.pop_back();
  }
}

// Same search on machine fractions p/q in lowest terms; subtrees whose
// denominators would leave the safe range are handed to the exact version.
using Wide = __int128;
constexpr Wide kWideLimit = Wide{1} << 100;

Wide wide_gcd(Wide a, Wide b) {
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

Rational to_rational(Wide p, Wide q) {
  auto to_mpz = [](Wide v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Integer z{static_cast<unsigned long>(u >> 64)};
    z <<= 64;
    z += Integer{static_cast<unsigned long>(u & ~std::uint64_t{0})};
    return neg ? Integer{-z} : z;
  };
  Rational r{to_mpz(p), to_mpz(q)};
  r.canonicalize();
  return r;
}

void extend_fast(std::int64_t k, Wide p, Wide q, std::int64_t lo, Tuple& prefix, std::vector<Tuple>& out) {
  if (k == 0) {
    if (p == 0) out.push_back(prefix);
    return;
  }
  if (p <= 0) return;
  if (k == 1) {
    if (q % p == 0 && q / p >= lo) {
      prefix.push_back(static_cast<std::int64_t>(q / p));
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  const Wide first = std::max<Wide>(lo, (q + p - 1) / p);
  const Wide last = (k * q) / p;
  for (Wide n = first; n <= last; ++n) {
    if (q > kWideLimit / n) {
      prefix.push_back(static_cast<std::int64_t>(n));
      extend(k - 1, to_rational(p, q) - make_rational(1, static_cast<std::int64_t>(n)),
             static_cast<std::int64_t>(n), prefix, out);
      prefix.pop_back();
      continue;
    }
    Wide np = p * n - q;
    Wide nq = q * n;
    const Wide g = wide_gcd(np, nq);
    if (g > 1) {
      np /= g;
      nq /= g;
    }
    prefix.push_back(static_cast<std::int64_t>(n));
    extend_fast(k - 1, np, nq, static_cast<std::int64_t>(n), prefix, out);
    prefix.pop_back();
  }
}

void search(std::int64_t k, const Rational& c, std::int64_t lo, Tuple& prefix, std::vector<Tuple>& out) {
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    extend_fast(k, c.get_num().get_si(), c.get_den().get_si(), lo, prefix, out);
  } else {
    extend(k, c, lo, prefix, out);
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_reciprocal_tuples(std::int64_t k, const Rational& c,
                                                                   std::int64_t n_min) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "tuple length must be nonnegative");
  if (sgn(c) < 0) throw Error(ErrorCode::kInvalidArgument, "reciprocal sum must be nonnegative");
  if (n_min < 1) throw Error(ErrorCode::kInvalidArgument, "n_min must be positive");

  std::vector<Tuple> out;
  if (k < 3 || sgn(c) == 0) {
    Tuple prefix;
    search(k, c, n_min, prefix, out);
    return out;
  }

  // Independent subtrees per smallest entry; merged back in sorted order.
  const std::int64_t first = std::max(n_min, to_int64(ceil(1 / c)));
  const std::int64_t last = to_int64(floor(k / c));
  std::vector<std::future<std::vector<Tuple>>> parts;
  for (std::int64_t n = first; n <= last; ++n) {
    parts.push_back(std::async(std::launch::async, [k, c, n] {
      std::vector<Tuple> local;
      Tuple prefix{n};
      search(k - 1, c - make_rational(1, n), n, prefix, local);
      return local;
    }));
  }
  for (auto& part : parts) {
    auto local = part.get();
    out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Terminal multisets with sum (n-1)/(2n) = s.
std::vector<Tuple> terminal_multisets(const Rational& s) {
  std::vector<Tuple> out;
  const std::int64_t max_points = bound_singularity_count(s);
  for (std::int64_t k = 0; k <= max_points; ++k) {
    const Rational c = Rational{k} - 2 * s;
    if (sgn(c) < 0) continue;
    auto tuples = enumerate_reciprocal_tuples(k, c, 2);
    out.insert(out.end(), tuples.begin(), tuples.end());
  }
  return out;
}

}  // namespace

std::vector<SingularityConfiguration> enumerate_configurations(const ModelInvariants& inv, ModelMode mode) {
  const Rational& s = inv.contribution_sum;
  bound_singularity_count(s);
  std::vector<SingularityConfiguration> out;

  if (mode == ModelMode::kWeakNef) {
    for (auto& t : terminal_multisets(s)) out.push_back({std::move(t), 0, 0});
  } else {
    std::int64_t cusp_lo = 0;
    std::int64_t cusp_hi = to_int64(floor(s));
    if (inv.cusps) cusp_lo = cusp_hi = *inv.cusps;
    for (std::int64_t cusps = cusp_lo; cusps <= cusp_hi; ++cusps) {
      const Rational after_cusps = s - cusps;
      if (sgn(after_cusps) < 0) continue;
      const std::int64_t max_dihedral = to_int64(floor(2 * after_cusps));
      for (std::int64_t dihedral = 0; dihedral <= max_dihedral; ++dihedral) {
        const Rational rest = after_cusps - make_rational(dihedral, 2);
        for (auto& t : terminal_multisets(rest)) out.push_back({std::move(t), dihedral, cusps});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ----------------------------------------------------------------- bounds

IndexBounds index_bounds(std::span<const SingularityConfiguration> configs, ModelMode mode) {
  if (configs.empty()) throw Error(ErrorCode::kInvalidArgument, "no configurations to bound");
  IndexBounds out;
  for (const auto& cfg : configs) {
    std::int64_t l = 1;
    for (auto n : cfg.terminal_orders) {
      out.c2 = std::max(out.c2, n);
      l = std::lcm(l, n);
    }
    out.candidates.push_back(mode == ModelMode::kCanonical ? 2 * l : l);
  }
  return out;
}

N1Result compute_n1(const ModelInvariants& inv, std::int64_t index) {
  if (sgn(inv.k2) <= 0) throw Error(ErrorCode::kNotGeneralType, "not general type: K^2 <= 0");
  if (index < 1) throw Error(ErrorCode::kInvalidArgument, "index must be positive");
  N1Result r;
  r.index = index;
  r.gamma = 2 * inv.k_dot_ky / inv.k2 + 3 * index;
  r.gamma.canonicalize();
  if (sgn(r.gamma) < 0) r.gamma = 0;
  r.n1 = 4 * index + to_int64(ceil(r.gamma)) + 1;
  const Rational i{index};
  r.volume_threshold = 16 * i * i * inv.k2 >= 16;
  r.curve_threshold = (4 * i + 1) / i > 4;
  return r;
}

BoundReport pipeline(const HilbertSamples& samples, ModelMode mode, std::int64_t l_max) {
  BoundReport report;
  report.invariants = extract_invariants(samples, mode, l_max);
  report.configurations = enumerate_configurations(report.invariants, mode);
  if (report.configurations.empty()) {
    throw Error(ErrorCode::kInconsistentContribution,
                "no singularity configuration realizes S = " + to_string(report.invariants.contribution_sum));
  }
  report.index = index_bounds(report.configurations, mode);
  for (auto i : report.index.candidates) {
    report.per_configuration.push_back(compute_n1(report.invariants, i));
    report.n1_worst = std::max(report.n1_worst, report.per_configuration.back().n1);
  }
  return report;
}

bool relate_models(const std::map<std::int64_t, std::int64_t>& weak_nef_chi,
                   const std::map<std::int64_t, std::int64_t>& canonical_chi, std::int64_t cusps) {
  if (weak_nef_chi.size() != canonical_chi.size() || !weak_nef_chi.contains(0)) return false;
  for (const auto& [m, weak] : weak_nef_chi) {
    auto it = canonical_chi.find(m);
    if (it == canonical_chi.end()) return false;
    const std::int64_t expected = m == 0 ? -cusps : 0;
    if (weak - it->second != expected) return false;
  }
  return true;
}

}  // namespace folcalc
