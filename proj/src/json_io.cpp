#include "folcalc/json_io.hpp"

#include <charconv>
#include <vector>

#include "folcalc/error.hpp"

namespace folcalc::io {

namespace {

[[noreturn]] void bad(const std::string& location, const std::string& what) {
  throw Error(ErrorCode::kParse, location + ": " + what);
}

std::int64_t parse_key(const std::string& key, const std::string& location) {
  std::int64_t v = 0;
  const auto* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, v);
  if (ec != std::errc{} || ptr != end) bad(location, "key '" + key + "' is not an integer");
  return v;
}

std::int64_t int_from_json(const Json& j, const std::string& location) {
  if (!j.is_number_integer()) bad(location, "expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& location) {
  if (j.is_number_integer()) return Rational{static_cast<long>(j.get<std::int64_t>())};
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(location, e.what());
    }
  }
  bad(location, "expected a rational string \"p/q\" or an integer");
}

DualGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("curves") || !j["curves"].is_array()) {
    bad("graph", "missing \"curves\" array");
  }
  std::vector<Curve> curves;
  std::size_t idx = 0;
  for (const auto& c : j["curves"]) {
    const std::string loc = "graph.curves[" + std::to_string(idx++) + "]";
    if (!c.is_object() || !c.contains("label") || !c["label"].is_string()) bad(loc, "missing \"label\"");
    if (!c.contains("self")) bad(loc, "missing \"self\"");
    Curve curve;
    curve.label = c["label"].get<std::string>();
    curve.self_intersection = int_from_json(c["self"], loc + ".self");
    if (c.contains("exceptional")) {
      if (!c["exceptional"].is_boolean()) bad(loc + ".exceptional", "expected a boolean");
      curve.exceptional = c["exceptional"].get<bool>();
    }
    if (c.contains("nodal")) {
      if (!c["nodal"].is_boolean()) bad(loc + ".nodal", "expected a boolean");
      curve.nodal = c["nodal"].get<bool>();
    }
    curves.push_back(std::move(curve));
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) bad("graph.edges", "expected an array");
    idx = 0;
    for (const auto& e : j["edges"]) {
      const std::string loc = "graph.edges[" + std::to_string(idx++) + "]";
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
        bad(loc, "expected [label, label, int]");
      }
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), int_from_json(e[2], loc + "[2]")});
    }
  }
  return DualGraph(std::move(curves), edges);
}

Json to_json(const DualGraph& g) {
  Json curves = Json::array();
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& c = g.curve(i);
    Json cj{{"label", c.label}, {"self", c.self_intersection}};
    if (!c.exceptional) cj["exceptional"] = false;
    if (c.nodal) cj["nodal"] = true;
    curves.push_back(std::move(cj));
    for (std::size_t k = i + 1; k < g.size(); ++k) {
      if (g.intersection(i, k) != 0) edges.push_back({c.label, g.curve(k).label, g.intersection(i, k)});
    }
  }
  return Json{{"curves", curves}, {"edges", edges}};
}

std::map<std::string, Rational> labels_from_json(const Json& j, const std::string& location) {
  if (!j.is_object()) bad(location, "expected an object {label: rational}");
  std::map<std::string, Rational> out;
  for (const auto& [key, value] : j.items()) out.emplace(key, rational_from_json(value, location + "." + key));
  return out;
}

Json to_json(const QDivisor& d) {
  Json out = Json::object();
  for (std::size_t i = 0; i < d.size(); ++i) out[d.graph().curve(i).label] = to_json(d[i]);
  return out;
}

Json to_json(const ZariskiResult& z) {
  Json support = Json::array();
  for (auto i : z.support) support.push_back(z.positive.graph().curve(i).label);
  return Json{{"P", to_json(z.positive)}, {"N", to_json(z.negative)}, {"support", support}};
}

HilbertSamples samples_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_object()) {
    bad("samples", "missing \"values\" object");
  }
  HilbertSamples s;
  for (const auto& [key, value] : j["values"].items()) {
    const std::string loc = "samples.values." + key;
    const auto m = parse_key(key, loc);
    if (m < 0) bad(loc, "sample index must be nonnegative");
    s.values.emplace(m, rational_from_json(value, loc));
  }
  if (j.contains("period_hint") && !j["period_hint"].is_null()) {
    const auto l = int_from_json(j["period_hint"], "samples.period_hint");
    if (l < 1) bad("samples.period_hint", "must be positive");
    s.period_hint = l;
  }
  return s;
}

std::map<std::int64_t, std::int64_t> table_from_json(const Json& j, const std::string& location) {
  if (!j.is_object()) bad(location, "expected an object {m: int}");
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [key, value] : j.items()) {
    out.emplace(parse_key(key, location + "." + key), int_from_json(value, location + "." + key));
  }
  return out;
}

Json to_json(const ModelInvariants& inv) {
  Json j{{"B1", to_json(inv.k2)},
         {"B2", to_json(inv.k_dot_ky)},
         {"B3", inv.chi_o},
         {"S", to_json(inv.contribution_sum)},
         {"period", inv.period}};
  j["B4"] = inv.cusps ? Json(*inv.cusps) : Json(nullptr);
  return j;
}

Json to_json(const SingularityConfiguration& c) {
  return Json{{"terminal_orders", c.terminal_orders},
              {"dihedral_count", c.dihedral_count},
              {"cusp_count", c.cusp_count}};
}

Json to_json(const BoundReport& r) {
  Json configs = Json::array();
  for (std::size_t k = 0; k < r.configurations.size(); ++k) {
    Json c = to_json(r.configurations[k]);
    const auto& n1 = r.per_configuration[k];
    c["index_candidate"] = r.index.candidates[k];
    c["gamma"] = to_json(n1.gamma);
    c["N1"] = n1.n1;
    c["volume_threshold"] = n1.volume_threshold;
    c["curve_threshold"] = n1.curve_threshold;
    configs.push_back(std::move(c));
  }
  return Json{{"invariants", to_json(r.invariants)},
              {"configurations", configs},
              {"C2", r.index.c2},
              {"N1_worst", r.n1_worst},
              {"index_is_upper_bound", true},
              {"birational_for_all_m_at_least", r.n1_worst}};
}

Json to_json(const DihedralSumReport& r) {
  return Json{{"expected_n", r.expected_n},
              {"sum_real", r.sum_real},
              {"sum_imag", r.sum_imag},
              {"deviation", r.deviation},
              {"exact_sum", r.exact_sum ? to_json(*r.exact_sum) : Json(nullptr)},
              {"a", to_json(r.a_from_sum)},
              {"pass", r.pass}};
}

}  // namespace folcalc::io
