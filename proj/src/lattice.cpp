#include "folcalc/lattice.hpp"

#include <set>
#include <utility>

#include "folcalc/error.hpp"

namespace folcalc {

// ---------------------------------------------------------------- DualGraph

DualGraph::DualGraph(std::vector<Curve> curves, const std::vector<Edge>& edges)
    : curves_(std::move(curves)), pairing_(curves_.size(), curves_.size()) {
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (!seen.insert(curves_[i].label).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate curve label '" + curves_[i].label + "'");
    }
    pairing_(i, i) = curves_[i].self_intersection;
  }
  for (const auto& e : edges) {
    const auto i = index_of(e.a);
    const auto j = index_of(e.b);
    if (i == j) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge '" + e.a + "'-'" + e.b + "' is a self-loop; use the self-intersection");
    }
    if (e.multiplicity < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge '" + e.a + "'-'" + e.b + "' has negative intersection number");
    }
    if (pairing_(i, j) != 0) {
      throw Error(ErrorCode::kInvalidArgument, "edge '" + e.a + "'-'" + e.b + "' listed twice");
    }
    pairing_(i, j) = e.multiplicity;
    pairing_(j, i) = e.multiplicity;
  }
}

DualGraph DualGraph::chain(std::span<const std::int64_t> self) {
  std::vector<Curve> curves;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < self.size(); ++i) {
    curves.push_back({"C" + std::to_string(i + 1), self[i]});
    if (i > 0) edges.push_back({curves[i - 1].label, curves[i].label, 1});
  }
  return DualGraph(std::move(curves), edges);
}

DualGraph DualGraph::from_matrix(const Matrix<std::int64_t>& m) {
  std::vector<Curve> curves;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    curves.push_back({"C" + std::to_string(i + 1), m(i, i)});
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) {
        throw Error(ErrorCode::kInvalidArgument, "intersection matrix is not symmetric");
      }
      if (m(i, j) != 0) edges.push_back({curves[i].label, curves[j].label, m(i, j)});
    }
  }
  return DualGraph(std::move(curves), edges);
}

std::optional<std::size_t> DualGraph::find(std::string_view label) const {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t DualGraph::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::kUnknownLabel, "unknown curve label '" + std::string{label} + "'");
}

// ----------------------------------------------------------------- QDivisor

QDivisor::QDivisor(GraphPtr graph) : graph_(std::move(graph)), coefficients_(graph_->size()) {}

QDivisor::QDivisor(GraphPtr graph, std::vector<Rational> coefficients)
    : graph_(std::move(graph)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != graph_->size()) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient count does not match curve count");
  }
}

QDivisor QDivisor::from_labels(GraphPtr graph, const std::map<std::string, Rational>& coeffs) {
  QDivisor d(std::move(graph));
  for (const auto& [label, value] : coeffs) d.coefficients_[d.graph_->index_of(label)] = value;
  return d;
}

Rational QDivisor::dot_curve(std::size_t j) const {
  Rational acc;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const auto m = graph_->intersection(i, j);
    if (m != 0 && coefficients_[i] != 0) acc += coefficients_[i] * m;
  }
  return acc;
}

bool QDivisor::is_zero() const {
  for (const auto& c : coefficients_) {
    if (c != 0) return false;
  }
  return true;
}

std::map<std::string, Rational> QDivisor::to_labels() const {
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] != 0) out.emplace(graph_->curve(i).label, coefficients_[i]);
  }
  return out;
}

void QDivisor::require_same_graph(const QDivisor& other) const {
  if (graph_ != other.graph_ && !(*graph_ == *other.graph_)) {
    throw Error(ErrorCode::kMismatchedGraphs, "divisors live on different graphs");
  }
}

QDivisor& QDivisor::operator+=(const QDivisor& other) {
  require_same_graph(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

QDivisor& QDivisor::operator-=(const QDivisor& other) {
  require_same_graph(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

QDivisor& QDivisor::operator*=(const Rational& s) {
  for (auto& c : coefficients_) c *= s;
  return *this;
}

bool QDivisor::operator==(const QDivisor& other) const {
  return (graph_ == other.graph_ || *graph_ == *other.graph_) &&
         coefficients_ == other.coefficients_;
}

// ------------------------------------------------------ IntersectionProfile

IntersectionProfile::IntersectionProfile(GraphPtr graph, std::vector<Rational> degrees)
    : graph_(std::move(graph)), degrees_(std::move(degrees)) {
  if (degrees_.size() != graph_->size()) {
    throw Error(ErrorCode::kInvalidArgument, "profile size does not match curve count");
  }
}

IntersectionProfile IntersectionProfile::from_labels(GraphPtr graph,
                                                     const std::map<std::string, Rational>& deg) {
  std::vector<Rational> degrees(graph->size());
  for (const auto& [label, value] : deg) degrees[graph->index_of(label)] = value;
  return IntersectionProfile(std::move(graph), std::move(degrees));
}

// --------------------------------------------------------------- operations

RationalMatrix intersection_matrix(const DualGraph& graph) {
  RationalMatrix m(graph.size(), graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i)
    for (std::size_t j = 0; j < graph.size(); ++j) m(i, j) = graph.intersection(i, j);
  return m;
}

namespace {

IntMatrix integer_pairing(const DualGraph& graph, std::span<const std::size_t> idx) {
  IntMatrix m(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      m(a, b) = static_cast<long>(graph.intersection(idx[a], idx[b]));
  return m;
}

}  // namespace

bool is_negative_definite(const DualGraph& graph, std::span<const std::size_t> support) {
  if (support.empty()) throw Error(ErrorCode::kInvalidArgument, "support must be nonempty");
  for (auto i : support) {
    if (i >= graph.size()) throw Error(ErrorCode::kUnknownLabel, "curve index out of range");
  }
  return linalg::is_negative_definite(integer_pairing(graph, support));
}

bool is_negative_definite(const DualGraph& graph, std::span<const std::string> support) {
  std::vector<std::size_t> idx;
  idx.reserve(support.size());
  for (const auto& label : support) idx.push_back(graph.index_of(label));
  return is_negative_definite(graph, std::span<const std::size_t>{idx});
}

QDivisor solve_pullback(const IntersectionProfile& profile) {
  const auto& graph = profile.graph();
  std::vector<std::size_t> all(graph.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto x = linalg::solve(integer_pairing(graph, all), profile.degrees());
  if (!x) {
    throw Error(ErrorCode::kDegenerateConfiguration,
                "degenerate configuration: intersection matrix is singular");
  }
  return QDivisor(profile.graph_ptr(), std::move(*x));
}

Rational pair(const QDivisor& d1, const QDivisor& d2) {
  if (d1.graph_ptr() != d2.graph_ptr() && !(d1.graph() == d2.graph())) {
    throw Error(ErrorCode::kMismatchedGraphs, "divisors live on different graphs");
  }
  Rational acc;
  for (std::size_t j = 0; j < d2.size(); ++j) {
    if (d2[j] != 0) acc += d1.dot_curve(j) * d2[j];
  }
  return acc;
}

HodgeReport hodge_inequality_check(const QDivisor& d1, const QDivisor& d2, int grid) {
  HodgeReport report;
  const Rational s11 = pair(d1, d1);
  const Rational s12 = pair(d1, d2);
  const Rational s22 = pair(d2, d2);

  for (int a1 = -grid; a1 <= grid && !report.witness; ++a1) {
    for (int a2 = -grid; a2 <= grid; ++a2) {
      if (a1 == 0 && a2 == 0) continue;
      const Rational sq = a1 * a1 * s11 + 2 * a1 * a2 * s12 + a2 * a2 * s22;
      if (sgn(sq) > 0) {
        report.witness = std::pair<std::int64_t, std::int64_t>{a1, a2};
        break;
      }
    }
  }
  if (!report.witness) return report;

  report.hypothesis_holds = true;
  const Rational lhs = s11 * s22;
  const Rational rhs = s12 * s12;
  report.inequality_holds = lhs <= rhs;
  report.equality = lhs == rhs;
  if (!report.equality) return report;

  // Kernel of the n x 2 system (a1 d1 + a2 d2) . C_i = 0.
  std::optional<std::pair<Rational, Rational>> candidate;
  for (std::size_t i = 0; i < d1.size() && !candidate; ++i) {
    Rational u = d1.dot_curve(i);
    Rational v = d2.dot_curve(i);
    if (u != 0 || v != 0) candidate = std::pair<Rational, Rational>{v, -u};
  }
  if (!candidate) candidate = std::pair<Rational, Rational>{Rational{1}, Rational{0}};
  for (std::size_t i = 0; i < d1.size(); ++i) {
    if (candidate->first * d1.dot_curve(i) + candidate->second * d2.dot_curve(i) != 0) {
      return report;
    }
  }
  report.trivial_combination = candidate;
  return report;
}

bool chi_additivity_check(const ChiChain& chain) {
  std::int64_t f = 0;
  std::int64_t g = 0;
  std::int64_t gf = 0;
  for (auto v : chain.f) {
    if (v < 0) return false;
    f += v;
  }
  for (auto v : chain.g) {
    if (v < 0) return false;
    g += v;
  }
  for (auto v : chain.composite) {
    if (v < 0) return false;
    gf += v;
  }
  return gf == f + g;
}

}  // namespace folcalc
