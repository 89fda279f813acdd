#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int status = folcalc::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("folcalc_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

const char* kChain52 = R"({"curves":[{"label":"C1","self":-3},{"label":"C2","self":-2}],"edges":[["C1","C2",1]]})";

}  // namespace

TEST_CASE("hj output is exact") {
  const auto r = run({"hj", "12", "5"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"b\":[3,2,3]}\n");
  CHECK(r.err.empty());
}

TEST_CASE("cusp contribution") {
  const auto r = run({"contrib", "--kind", "cusp", "--m", "4"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"a\":\"-1\"}\n");
}

TEST_CASE("validation errors exit 2 with an error object") {
  const auto r = run({"hj", "4", "2"});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  const auto e = parse(r.err);
  CHECK(e["error"]["message"].get<std::string>().find("gcd(n,q) must be 1") != std::string::npos);
  CHECK(e["error"].contains("code"));
  CHECK(e["error"].contains("location"));

  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"hj", "12"}).status == 2);
  CHECK(run({"contrib", "--kind", "pentagon", "--m", "1"}).status == 2);
  CHECK(run({"dihedral-verify", "--variant", "e1", "--a", "1", "--l", "3", "--modd", "1", "--p", "5"}).status == 2);
}

TEST_CASE("local values") {
  CHECK(parse(run({"contrib", "--kind", "terminal", "--n", "5", "--q", "2", "--m", "-3"}).out)["a"] == "-1/5");
  CHECK(parse(run({"contrib", "--kind", "cyclic-sheaf", "--n", "3", "--q", "1", "--i", "1"}).out)["a"] == "-1/3");
  CHECK(parse(run({"contrib", "--kind", "dihedral", "--m", "3"}).out)["a"] == "-1/2");
  CHECK(parse(run({"chi-local", "--kind", "fchain", "--n", "3", "--q", "1", "--m", "2"}).out)["chi"] == "1");
  CHECK(parse(run({"chi-local", "--kind", "cusp", "--m", "0"}).out)["chi"] == "1");

  const auto w = parse(run({"wunram", "5", "2", "3"}).out);
  CHECK(w["d"] == nlohmann::json::array({1, 1}));
  CHECK(w["s"] == nlohmann::json::array({5, 2, 1}));
  CHECK(run({"wunram", "5", "2", "9"}).status == 2);
  CHECK(parse(run({"wunram", "5", "2", "8", "--reduce"}).out)["d"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("dihedral verification report") {
  const auto r = run({"dihedral-verify", "--variant", "e1", "--a", "1", "--l", "1", "--modd", "3", "--p", "5"});
  REQUIRE(r.status == 0);
  const auto j = parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["expected_n"] == 3);
  CHECK(j["exact_sum"] == "3");
  CHECK(j["a"] == "-1/2");
}

TEST_CASE("pull-back and Zariski from files and stdin") {
  TempFile graph(kChain52);
  TempFile profile(R"({"C1":-1,"C2":0})");
  const auto r = run({"pullback", graph.path(), profile.path()});
  REQUIRE(r.status == 0);
  CHECK(r.out == "{\"C1\":\"2/5\",\"C2\":\"1/5\"}\n");

  const auto piped = run({"pullback", graph.path(), "-"}, R"({"C1":-1})");
  CHECK(piped.out == r.out);

  TempFile divisor(R"({"C1":1,"C2":"1"})");
  const auto z = run({"zariski", graph.path(), divisor.path()});
  REQUIRE(z.status == 0);
  const auto zj = parse(z.out);
  CHECK(zj["support"] == nlohmann::json::array({"C1", "C2"}));
  CHECK(zj["N"]["C1"] == "1");
  CHECK(zj["P"]["C2"] == "0");

  const auto table = run({"zariski", graph.path(), divisor.path(), "--format", "table"});
  CHECK(table.status == 0);
  CHECK(table.out.find("C1") != std::string::npos);
  CHECK(table.out.front() != '{');
}

TEST_CASE("malformed and degenerate input") {
  TempFile broken("{\"curves\": [");
  TempFile profile(R"({"A":-1})");
  const auto r = run({"pullback", broken.path(), profile.path()});
  CHECK(r.status == 2);
  CHECK(parse(r.err)["error"]["code"] == "parse_error");

  CHECK(run({"pullback", "/nonexistent/graph.json", profile.path()}).status == 2);

  TempFile cycle(
      R"({"curves":[{"label":"A","self":-2},{"label":"B","self":-2},{"label":"C","self":-2}],)"
      R"("edges":[["A","B",1],["B","C",1],["C","A",1]]})");
  const auto d = run({"pullback", cycle.path(), profile.path()});
  CHECK(d.status == 1);
  const auto e = parse(d.err);
  CHECK(e["error"]["code"] == "degenerate_configuration");
  CHECK(e["error"]["message"].get<std::string>().find("degenerate configuration") != std::string::npos);

  TempFile unknown(R"({"Z":1})");
  TempFile graph(kChain52);
  CHECK(run({"pullback", graph.path(), unknown.path()}).status == 2);
}

TEST_CASE("bounds pipeline") {
  TempFile smooth(R"({"values":{"0":1,"1":2,"2":5,"3":10,"4":17}})");
  const auto r = run({"bounds", "--mode", "weak-nef", smooth.path()});
  REQUIRE(r.status == 0);
  const auto j = parse(r.out);
  CHECK(j["N1_worst"] == 8);
  CHECK(j["invariants"]["B1"] == "2");
  CHECK(j["invariants"]["S"] == "0");

  const auto again = run({"bounds", "--mode", "weak-nef", smooth.path()});
  CHECK(again.out == r.out);

  TempFile cusp(R"({"values":{"0":1,"1":1,"2":4,"3":9,"4":16,"5":25,"6":36}})");
  const auto c = parse(run({"bounds", "--mode", "canonical", cusp.path()}).out);
  CHECK(c["invariants"]["B4"] == 1);

  TempFile bad(R"({"values":{"0":1,"1":2,"2":5,"3":11,"4":17}})");
  const auto b = run({"bounds", "--mode", "weak-nef", bad.path()});
  CHECK(b.status == 1);
  CHECK(parse(b.err)["error"]["message"].get<std::string>().find("samples incompatible") != std::string::npos);

  CHECK(run({"bounds", "--mode", "sideways", smooth.path()}).status == 2);
  const auto table = run({"--format", "table", "bounds", "--mode", "weak-nef", smooth.path()});
  CHECK(table.out.find("N1") != std::string::npos);
}

TEST_CASE("period search bound from the environment") {
  // m^2 + 1 with a drop of 1 off multiples of 7: period exactly 7.
  std::ostringstream values;
  values << R"({"values":{)";
  for (int m = 0; m <= 24; ++m) {
    const int bump = (m % 7 == 0) ? 0 : 1;
    values << (m ? "," : "") << '"' << m << "\":" << (m * m + 1 - bump);
  }
  values << "}}";
  TempFile samples(values.str());
  CHECK(run({"bounds", "--mode", "weak-nef", "--lmax", "6", samples.path()}).status == 1);
  ::setenv("FOLCALC_LMAX", "6", 1);
  CHECK(run({"bounds", "--mode", "weak-nef", samples.path()}).status == 1);
  ::setenv("FOLCALC_LMAX", "bogus", 1);
  CHECK(run({"bounds", "--mode", "weak-nef", samples.path()}).status == 2);
  ::unsetenv("FOLCALC_LMAX");
  const auto ok = run({"bounds", "--mode", "weak-nef", samples.path()});
  CHECK(parse(ok.out)["invariants"]["period"] == 7);
}

TEST_CASE("jouanolou and relate") {
  const auto j = parse(run({"jouanolou", "--dmax", "4"}).out);
  CHECK(j["entries"][0]["volume"] == "1/7");
  CHECK(j["entries"][0]["aut_order"] == 21);
  CHECK(j["verdicts"]["strictly_increasing"] == true);

  TempFile weak(R"({"0":1,"1":3,"2":7})");
  TempFile canon(R"({"0":3,"1":3,"2":7})");
  CHECK(parse(run({"relate", weak.path(), canon.path(), "--cusps", "2"}).out)["consistent"] == true);
  CHECK(parse(run({"relate", weak.path(), canon.path(), "--cusps", "1"}).out)["consistent"] == false);
}
