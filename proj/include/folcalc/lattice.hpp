#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "folcalc/matrix.hpp"
#include "folcalc/rational.hpp"

namespace folcalc {

struct Curve {
  std::string label;
  std::int64_t self_intersection = -2;
  bool exceptional = true;
  /// A rational curve with one node (cusp resolutions). Ignored by the pairing.
  bool nodal = false;

  bool operator==(const Curve&) const = default;
};

struct Edge {
  std::string a;
  std::string b;
  std::int64_t multiplicity = 1;
};

/// Curve configuration with its symmetric intersection pairing. Immutable
/// once constructed; labels are unique and off-diagonal entries are >= 0.
class DualGraph {
 public:
  /// Throws Error(kInvalidArgument) on duplicate labels, self-loops, repeated
  /// or negative edges, and Error(kUnknownLabel) for edges naming no curve.
  DualGraph(std::vector<Curve> curves, const std::vector<Edge>& edges);

  /// Chain C_1 - C_2 - ... - C_r with C_j^2 = self[j], labels "C1".."Cr".
  static DualGraph chain(std::span<const std::int64_t> self);

  /// Builds from an explicit symmetric matrix; labels "C1".."Cn".
  static DualGraph from_matrix(const Matrix<std::int64_t>& m);

  std::size_t size() const { return curves_.size(); }
  const Curve& curve(std::size_t i) const { return curves_[i]; }
  std::span<const Curve> curves() const { return curves_; }

  /// Throws Error(kUnknownLabel).
  std::size_t index_of(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label) const;

  std::int64_t intersection(std::size_t i, std::size_t j) const { return pairing_(i, j); }
  const Matrix<std::int64_t>& pairing() const { return pairing_; }

  bool operator==(const DualGraph& other) const {
    return curves_ == other.curves_ && pairing_ == other.pairing_;
  }

 private:
  DualGraph() = default;

  std::vector<Curve> curves_;
  Matrix<std::int64_t> pairing_;
};

using GraphPtr = std::shared_ptr<const DualGraph>;

/// Rational combination sum a_i C_i of the curves of a graph.
class QDivisor {
 public:
  explicit QDivisor(GraphPtr graph);
  QDivisor(GraphPtr graph, std::vector<Rational> coefficients);

  /// Unlisted labels get coefficient 0; unknown labels throw Error(kUnknownLabel).
  static QDivisor from_labels(GraphPtr graph, const std::map<std::string, Rational>& coeffs);

  const DualGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }

  std::size_t size() const { return coefficients_.size(); }
  const Rational& operator[](std::size_t i) const { return coefficients_[i]; }
  Rational& operator[](std::size_t i) { return coefficients_[i]; }
  const Rational& at(std::string_view label) const { return coefficients_[graph_->index_of(label)]; }
  std::span<const Rational> coefficients() const { return coefficients_; }

  /// D . C_j
  Rational dot_curve(std::size_t j) const;

  bool is_zero() const;

  /// Nonzero coefficients keyed by label.
  std::map<std::string, Rational> to_labels() const;

  QDivisor& operator+=(const QDivisor& other);
  QDivisor& operator-=(const QDivisor& other);
  QDivisor& operator*=(const Rational& s);

  friend QDivisor operator+(QDivisor a, const QDivisor& b) { return a += b; }
  friend QDivisor operator-(QDivisor a, const QDivisor& b) { return a -= b; }
  friend QDivisor operator*(const Rational& s, QDivisor a) { return a *= s; }

  bool operator==(const QDivisor& other) const;

 private:
  void require_same_graph(const QDivisor& other) const;

  GraphPtr graph_;
  std::vector<Rational> coefficients_;
};

/// Prescribed intersection numbers D . C_i against every curve.
class IntersectionProfile {
 public:
  IntersectionProfile(GraphPtr graph, std::vector<Rational> degrees);
  static IntersectionProfile from_labels(GraphPtr graph, const std::map<std::string, Rational>& deg);

  const DualGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  std::span<const Rational> degrees() const { return degrees_; }

 private:
  GraphPtr graph_;
  std::vector<Rational> degrees_;
};

RationalMatrix intersection_matrix(const DualGraph& graph);

/// Principal submatrix on `support` is negative definite. Throws on an empty
/// support or an unknown label.
bool is_negative_definite(const DualGraph& graph, std::span<const std::string> support);
bool is_negative_definite(const DualGraph& graph, std::span<const std::size_t> support);

/// Unique Z = sum x_i C_i with Z . C_j = degrees[j] for all j. Throws
/// Error(kDegenerateConfiguration) when the pairing is singular.
QDivisor solve_pullback(const IntersectionProfile& profile);

/// Bilinear pairing; throws Error(kMismatchedGraphs).
Rational pair(const QDivisor& d1, const QDivisor& d2);

struct HodgeReport {
  bool hypothesis_holds = false;
  bool inequality_holds = false;
  bool equality = false;
  /// When equality holds, coefficients (a1, a2) != 0 with (a1 d1 + a2 d2) . C_i = 0 for all i.
  std::optional<std::pair<Rational, Rational>> trivial_combination;
  /// Grid point witnessing (a1 d1 + a2 d2)^2 > 0.
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
};

/// Searches (a1, a2) in [-grid, grid]^2 \ {0} for a positive square; if one is
/// found, evaluates d1^2 d2^2 <= (d1.d2)^2.
HodgeReport hodge_inequality_check(const QDivisor& d1, const QDivisor& d2, int grid);

/// Per-point modified Euler characteristics of f, g and g o f.
struct ChiChain {
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> g;
  std::vector<std::int64_t> composite;
};

/// chi(g o f) = chi(f) + chi(g), summed over points. False on negative entries.
bool chi_additivity_check(const ChiChain& chain);

}  // namespace folcalc
