#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "folcalc/boundedness.hpp"
#include "folcalc/lattice.hpp"
#include "folcalc/local_rr.hpp"
#include "folcalc/zariski.hpp"

namespace folcalc::io {

using Json = nlohmann::json;

/// Rationals travel as lowest-terms strings; integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& location);

/// {"curves":[{"label":str,"self":int,"exceptional"?:bool,"nodal"?:bool}...],
///  "edges":[[str,str,int]...]}
DualGraph graph_from_json(const Json& j);
Json to_json(const DualGraph& g);

/// {"label": "p/q", ...}
std::map<std::string, Rational> labels_from_json(const Json& j, const std::string& location);
Json to_json(const QDivisor& d);

Json to_json(const ZariskiResult& z);

/// {"values": {"0": 1, "1": 2, ...}, "period_hint": 6}
HilbertSamples samples_from_json(const Json& j);

/// {"0": 1, "1": 3, ...}
std::map<std::int64_t, std::int64_t> table_from_json(const Json& j, const std::string& location);

Json to_json(const ModelInvariants& inv);
Json to_json(const SingularityConfiguration& c);
Json to_json(const BoundReport& r);
Json to_json(const DihedralSumReport& r);

}  // namespace folcalc::io
