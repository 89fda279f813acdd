#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "folcalc/boundedness.hpp"
#include "folcalc/cyclic.hpp"
#include "folcalc/error.hpp"
#include "folcalc/jouanolou.hpp"
#include "folcalc/json_io.hpp"
#include "folcalc/lattice.hpp"
#include "folcalc/local_rr.hpp"
#include "folcalc/zariski.hpp"

namespace folcalc::cli {

namespace {

using io::Json;

struct Failure {
  int status;
  std::string code;
  std::string message;
  std::string location;
};

Json error_json(const Failure& f) {
  return Json{{"error", {{"code", f.code}, {"message", f.message}, {"location", f.location}}}};
}

class Context {
 public:
  Context(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  bool table = false;

  Json read_json(const std::string& path) {
    location_ = path;
    std::string text;
    if (path == "-") {
      std::ostringstream buf;
      buf << in_.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(path);
      if (!file) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::kParse, std::string{"malformed JSON: "} + e.what());
    }
  }

  void emit(const Json& doc, const std::string& table_text) {
    if (table) {
      out_ << table_text;
    } else {
      out_ << doc.dump() << '\n';
    }
  }

  const std::string& location() const { return location_; }
  void set_location(std::string loc) { location_ = std::move(loc); }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::string location_;
};

std::string join(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

// ------------------------------------------------------------- subcommands

void cmd_hj(Context& ctx, std::int64_t n, std::int64_t q) {
  const auto e = hj_expansion(CyclicType(n, q));
  ctx.emit(Json{{"b", e.entries}}, "b: " + join(e.entries) + "\nself-intersections: " +
                                       join(e.self_intersections()) + "\n");
}

void cmd_wunram(Context& ctx, std::int64_t n, std::int64_t q, std::int64_t i, bool reduce) {
  const CyclicType t(n, q);
  const auto b = hj_expansion(t).entries;
  const auto w = wunram_degrees(t, i, reduce ? ResidueMode::kReduce : ResidueMode::kStrict);
  ctx.emit(Json{{"b", b}, {"s", w.s}, {"d", w.d}, {"t", w.t}},
           "b: " + join(b) + "\ns: " + join(w.s) + "\nd: " + join(w.d) + "\nt: " + join(w.t) + "\n");
}

SingularityDatum datum_from_flags(const std::string& kind, std::optional<std::int64_t> n,
                                  std::optional<std::int64_t> q) {
  if (kind == "terminal") {
    if (!n || !q) throw Error(ErrorCode::kInvalidArgument, "--n and --q are required for kind terminal");
    return SingularityDatum::terminal(*n, *q);
  }
  // Dihedral contributions depend on m only; the group parameters are checked by dihedral-verify.
  if (kind == "dihedral") return {DihedralPoint{}, {}};
  if (kind == "cusp") return SingularityDatum::cusp();
  if (kind == "gorenstein") return SingularityDatum::gorenstein();
  throw Error(ErrorCode::kInvalidArgument, "unknown --kind '" + kind + "'");
}

void cmd_contrib(Context& ctx, const std::string& kind, std::optional<std::int64_t> n,
                 std::optional<std::int64_t> q, std::optional<std::int64_t> m,
                 std::optional<std::int64_t> i) {
  Rational a;
  if (kind == "cyclic-sheaf") {
    if (!n || !q || !i) throw Error(ErrorCode::kInvalidArgument, "--n, --q and --i are required");
    a = a_cyclic_sheaf(CyclicType(*n, *q), *i);
  } else {
    if (!m) throw Error(ErrorCode::kInvalidArgument, "--m is required");
    a = contribution(datum_from_flags(kind, n, q), *m);
  }
  ctx.emit(Json{{"a", io::to_json(a)}}, "a = " + to_string(a) + "\n");
}

void cmd_chi_local(Context& ctx, const std::string& kind, std::optional<std::int64_t> n,
                   std::optional<std::int64_t> q, std::int64_t m) {
  Rational chi;
  if (kind == "fchain") {
    if (!n || !q) throw Error(ErrorCode::kInvalidArgument, "--n and --q are required for kind fchain");
    if (m < 0) throw Error(ErrorCode::kInvalidArgument, "--m must be nonnegative");
    chi = chi_fchain(CyclicType(*n, *q), m);
  } else {
    chi = Rational{chi_partial_crepant(datum_from_flags(kind, n, q), m)};
  }
  ctx.emit(Json{{"chi", io::to_json(chi)}}, "chi = " + to_string(chi) + "\n");
}

GraphPtr load_graph(Context& ctx, const std::string& path) {
  const Json j = ctx.read_json(path);
  return std::make_shared<const DualGraph>(io::graph_from_json(j));
}

std::string divisor_table(const QDivisor& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) {
    os << std::left << std::setw(12) << d.graph().curve(i).label << to_string(d[i]) << '\n';
  }
  return os.str();
}

void cmd_pullback(Context& ctx, const std::string& graph_path, const std::string& profile_path) {
  auto graph = load_graph(ctx, graph_path);
  const Json pj = ctx.read_json(profile_path);
  const auto profile = IntersectionProfile::from_labels(graph, io::labels_from_json(pj, "profile"));
  ctx.set_location("pullback");
  const auto z = solve_pullback(profile);
  ctx.emit(io::to_json(z), divisor_table(z));
}

void cmd_zariski(Context& ctx, const std::string& graph_path, const std::string& divisor_path) {
  auto graph = load_graph(ctx, graph_path);
  const Json dj = ctx.read_json(divisor_path);
  const auto d = QDivisor::from_labels(graph, io::labels_from_json(dj, "divisor"));
  ctx.set_location("zariski");
  const auto z = zariski_decompose(d);
  std::ostringstream os;
  os << "curve       P           N\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    os << std::left << std::setw(12) << graph->curve(i).label << std::setw(12)
       << to_string(z.positive[i]) << to_string(z.negative[i]) << '\n';
  }
  ctx.emit(io::to_json(z), os.str());
}

std::int64_t resolve_lmax(std::optional<std::int64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FOLCALC_LMAX")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::kInvalidArgument, "FOLCALC_LMAX must be a positive integer");
  }
  return kDefaultPeriodSearchBound;
}

void cmd_bounds(Context& ctx, const std::string& mode_name, const std::string& path,
                std::optional<std::int64_t> lmax_flag) {
  ModelMode mode;
  if (mode_name == "weak-nef") {
    mode = ModelMode::kWeakNef;
  } else if (mode_name == "canonical") {
    mode = ModelMode::kCanonical;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "--mode must be weak-nef or canonical");
  }
  const std::int64_t lmax = resolve_lmax(lmax_flag);
  const auto samples = io::samples_from_json(ctx.read_json(path));
  const auto report = pipeline(samples, mode, lmax);

  std::ostringstream os;
  const auto& inv = report.invariants;
  os << "K^2 (B1)        " << to_string(inv.k2) << '\n'
     << "K.K_Y (B2)      " << to_string(inv.k_dot_ky) << '\n'
     << "chi(O_Y) (B3)   " << inv.chi_o << '\n'
     << "S               " << to_string(inv.contribution_sum) << '\n';
  if (inv.cusps) os << "cusps (B4)      " << *inv.cusps << '\n';
  os << "period L        " << inv.period << '\n'
     << "C2              " << report.index.c2 << '\n'
     << "\nterminal orders       dihedral  cusps  index  gamma   N1\n";
  for (std::size_t k = 0; k < report.configurations.size(); ++k) {
    const auto& c = report.configurations[k];
    const auto& n1 = report.per_configuration[k];
    os << std::left << std::setw(22) << ("(" + join(c.terminal_orders, ",") + ")") << std::setw(10)
       << c.dihedral_count << std::setw(7) << c.cusp_count << std::setw(7) << n1.index << std::setw(8)
       << to_string(n1.gamma) << n1.n1 << '\n';
  }
  os << "\nN1 (worst case) " << report.n1_worst
     << "  (|mK| birational for all m >= N1; index is an lcm upper bound)\n";
  ctx.emit(io::to_json(report), os.str());
}

void cmd_jouanolou(Context& ctx, std::int64_t d_max) {
  const auto r = accumulation_report(d_max);
  Json rows = Json::array();
  std::ostringstream os;
  os << "d      volume          aut_order  1-volume\n";
  for (const auto& e : r.entries) {
    rows.push_back(Json{{"d", e.d},
                        {"volume", io::to_json(e.volume)},
                        {"aut_order", e.aut_order},
                        {"gap", io::to_json(e.gap())}});
    os << std::left << std::setw(7) << e.d << std::setw(16) << to_string(e.volume) << std::setw(11)
       << e.aut_order << to_string(e.gap()) << '\n';
  }
  const Json verdicts{{"strictly_increasing", r.strictly_increasing},
                      {"all_below_one", r.all_below_one},
                      {"minimum", io::to_json(r.minimum)},
                      {"convergence_witness", r.convergence_witness},
                      {"gap_identity", r.gap_identity}};
  os << "\nstrictly increasing: " << std::boolalpha << r.strictly_increasing
     << "\nall below 1: " << r.all_below_one << "\nminimum: " << to_string(r.minimum)
     << "\n1 - volume(d_max) < 3/d_max: " << r.convergence_witness << '\n';
  ctx.emit(Json{{"entries", rows}, {"verdicts", verdicts}}, os.str());
}

void cmd_dihedral(Context& ctx, const std::string& variant, std::int64_t a, std::int64_t l,
                  std::int64_t modd, std::int64_t p) {
  DihedralPoint d{a, l, modd, p, DihedralVariant::kPrime};
  if (variant == "e2") {
    d.variant = DihedralVariant::kDoublePrime;
  } else if (variant != "e1") {
    throw Error(ErrorCode::kInvalidArgument, "--variant must be e1 or e2");
  }
  const auto r = dihedral_sum_verify(d);
  std::ostringstream os;
  os << std::setprecision(17) << "sum       " << r.sum_real << " + " << r.sum_imag << "i\n"
     << "expected  " << r.expected_n << "\nexact     "
     << (r.exact_sum ? to_string(*r.exact_sum) : std::string{"n/a"}) << "\n|sum - n| " << r.deviation
     << "\na(y,K)    " << to_string(r.a_from_sum) << "\npass      " << std::boolalpha << r.pass << '\n';
  ctx.emit(io::to_json(r), os.str());
}

void cmd_relate(Context& ctx, const std::string& weak_path, const std::string& canon_path,
                std::int64_t cusps) {
  const auto weak = io::table_from_json(ctx.read_json(weak_path), "weak_nef");
  const auto canon = io::table_from_json(ctx.read_json(canon_path), "canonical");
  const bool ok = relate_models(weak, canon, cusps);
  ctx.emit(Json{{"consistent", ok}}, std::string{"consistent: "} + (ok ? "true" : "false") + "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of foliated surfaces", "folcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  Context ctx(in, out);
  std::function<void()> action;

  std::int64_t n = 0, q = 0, i = 0;
  bool reduce = false;
  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion of n/q");
  hj->add_option("n", n)->required();
  hj->add_option("q", q)->required();
  hj->callback([&] { action = [&] { cmd_hj(ctx, n, q); }; });

  auto* wunram = app.add_subcommand("wunram", "Wunram degrees of the sheaf M_i");
  wunram->add_option("n", n)->required();
  wunram->add_option("q", q)->required();
  wunram->add_option("i", i)->required();
  wunram->add_flag("--reduce", reduce, "Reduce i mod n instead of range checking");
  wunram->callback([&] { action = [&] { cmd_wunram(ctx, n, q, i, reduce); }; });

  std::string kind;
  std::optional<std::int64_t> on, oq, om, oi;
  auto* contrib = app.add_subcommand("contrib", "Local Riemann-Roch contribution a(y, mK)");
  contrib->add_option("--kind", kind)->required()->check(
      CLI::IsMember({"terminal", "dihedral", "cusp", "gorenstein", "cyclic-sheaf"}));
  contrib->add_option("--n", on);
  contrib->add_option("--q", oq);
  contrib->add_option("--m", om);
  contrib->add_option("--i", oi);
  contrib->callback([&] { action = [&] { cmd_contrib(ctx, kind, on, oq, om, oi); }; });

  std::int64_t m = 0;
  auto* chi = app.add_subcommand("chi-local", "Local modified Euler characteristic chi(y, mK_F)");
  chi->add_option("--kind", kind)->required()->check(
      CLI::IsMember({"fchain", "terminal", "dihedral", "cusp", "gorenstein"}));
  chi->add_option("--n", on);
  chi->add_option("--q", oq);
  chi->add_option("--m", m)->required();
  chi->callback([&] { action = [&] { cmd_chi_local(ctx, kind, on, oq, m); }; });

  std::string path1, path2;
  auto* pullback = app.add_subcommand("pullback", "Solve Z . C_j = degrees[j] on a dual graph");
  pullback->add_option("graph", path1)->required();
  pullback->add_option("profile", path2)->required();
  pullback->callback([&] { action = [&] { cmd_pullback(ctx, path1, path2); }; });

  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition relative to a configuration");
  zariski->add_option("graph", path1)->required();
  zariski->add_option("divisor", path2)->required();
  zariski->callback([&] { action = [&] { cmd_zariski(ctx, path1, path2); }; });

  std::string mode;
  std::optional<std::int64_t> lmax;
  auto* bounds = app.add_subcommand("bounds", "Effective pluricanonical bound from a Hilbert function");
  bounds->add_option("--mode", mode)->required()->check(CLI::IsMember({"weak-nef", "canonical"}));
  bounds->add_option("--lmax", lmax, "Period search bound (default 60, or FOLCALC_LMAX)");
  bounds->add_option("samples", path1)->required();
  bounds->callback([&] { action = [&] { cmd_bounds(ctx, mode, path1, lmax); }; });

  std::int64_t d_max = 20;
  auto* jou = app.add_subcommand("jouanolou", "Volumes of the Jouanolou quotients");
  jou->add_option("--dmax", d_max)->required();
  jou->callback([&] { action = [&] { cmd_jouanolou(ctx, d_max); }; });

  std::string variant = "e1";
  std::int64_t a_exp = 1, l = 1, modd = 1, p = 1;
  auto* dih = app.add_subcommand("dihedral-verify", "Check the dihedral root-of-unity sum");
  dih->add_option("--variant", variant)->check(CLI::IsMember({"e1", "e2"}));
  dih->add_option("--a", a_exp)->required();
  dih->add_option("--l", l)->required();
  dih->add_option("--modd", modd)->required();
  dih->add_option("--p", p)->required();
  dih->callback([&] { action = [&] { cmd_dihedral(ctx, variant, a_exp, l, modd, p); }; });

  std::int64_t cusps = 0;
  auto* relate = app.add_subcommand("relate", "Compare weak nef and canonical Hilbert tables");
  relate->add_option("weak_nef", path1)->required();
  relate->add_option("canonical", path2)->required();
  relate->add_option("--cusps", cusps)->required();
  relate->callback([&] { action = [&] { cmd_relate(ctx, path1, path2, cusps); }; });

  auto report = [&](const Failure& f) {
    err << error_json(f).dump() << '\n';
    return f.status;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return report({2, "usage", e.what(), "arguments"});
  }

  ctx.table = format == "table";
  const std::string sub = app.get_subcommands().front()->get_name();
  ctx.set_location(sub);
  try {
    action();
  } catch (const Error& e) {
    const int status = is_validation_error(e.code()) ? 2 : 1;
    return report({status, code_name(e.code()), e.what(), ctx.location()});
  } catch (const std::exception& e) {
    return report({1, "internal", e.what(), ctx.location()});
  }
  return 0;
}

}  // namespace folcalc::cli
