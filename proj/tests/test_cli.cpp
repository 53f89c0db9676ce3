#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support/random.hpp"
#include "whitforge/cli.hpp"
#include "whitforge/errors.hpp"
#include "whitforge/io.hpp"

using namespace whitforge;
using whitforge::io::Json;

namespace {

QMatrix E(std::size_t n, std::size_t i, std::size_t j) { return QMatrix::elementary(n, i, j); }

struct Outcome {
  int status;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

const std::string kSame = R"j({"n": 4, "S": "diag(3,1,-1,-3)", "f": "E21+E43"})j";

}  // namespace

TEST_CASE("E-notation parsing") {
  CHECK(io::parse_e_notation("E21+E43", 4) == E(4, 2, 1) + E(4, 4, 3));
  CHECK(io::parse_e_notation(" 2*E11 - 1/2*E23 ", 3) == Rational(2) * E(3, 1, 1) - make_rational(1, 2) * E(3, 2, 3));
  CHECK(io::parse_e_notation("diag(3,1,-1,-3)", 4) == QMatrix::diagonal({3, 1, -1, -3}));
  CHECK(io::parse_e_notation("-E12+2E21", 2) == Rational(2) * E(2, 2, 1) - E(2, 1, 2));
  CHECK(io::parse_e_notation("E10,3", 10) == E(10, 10, 3));
  CHECK(io::parse_e_notation("0", 3).is_zero());
  CHECK(io::parse_e_notation("3*I-E11", 2) == QMatrix::diagonal({2, 3}));
  for (const char* bad : {"", "E", "E1", "E123", "E31", "E21E12", "2", "diag(1)", "diag(1,2", "F12", "E21++E12", "1/0*E11"})
    CHECK_THROWS_AS(io::parse_e_notation(bad, 2), ParseError);
}

TEST_CASE("E-notation round trip") {
  testing::Rng rng(401);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 11));
    const QMatrix m = testing::random_matrix(rng, n, n, 0.3, 4);
    CHECK(io::parse_e_notation(to_e_notation(m), n) == m);
  }
}

TEST_CASE("JSON inputs and encodings") {
  const Json dense = Json::parse(R"([["1/2", 0], ["-3", "4/6"]])");
  CHECK(io::matrix_from_json(dense, std::nullopt) == QMatrix{{make_rational(1, 2), 0}, {-3, make_rational(2, 3)}});
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"([["1", "2"]])"), std::nullopt), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"("E21")"), std::nullopt), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(dense, 3), ParseError);
  CHECK(io::encode(make_rational(-6, 4)) == "-3/2");
  CHECK(io::encode(Rational(5)) == "5");
  CHECK(io::encode(QMatrix{{1, 0}, {0, make_rational(1, 3)}}) == Json::parse(R"([["1","0"],["0","1/3"]])"));
  CHECK(io::parse_partition("1,3 ,2") == Partition({3, 2, 1}));
  CHECK(io::parse_composition("1,3").parts() == std::vector<int>{1, 3});
  for (const char* bad : {"", "0", "2,-1", "a", "2;2"}) CHECK_THROWS_AS(io::parse_partition(bad), ParseError);

  const auto in = io::read_pair_input(Json::parse(kSame));
  CHECK(in.n == 4);
  CHECK(in.s == QMatrix::diagonal({3, 1, -1, -3}));
  CHECK(!in.h);
  CHECK_THROWS_AS(io::read_pair_input(Json::parse(R"({"n": 2, "S": "E11"})")), ParseError);
}

TEST_CASE("command examples") {
  const auto chain = invoke({"pair-chain"}, kSame);
  REQUIRE(chain.status == 0);
  CHECK(Json::parse(chain.out)["criticals"] == Json::parse(R"(["0","1/4","3/4"])"));

  const auto dg = invoke({"deform-gl", "--mu", "2,2", "--lambda", "3,1"});
  REQUIRE(dg.status == 0);
  const Json cert = Json::parse(dg.out);
  CHECK(io::matrix_from_json(cert["psi"], 4) == E(4, 4, 2));
  for (const char* key : {"n", "mu", "lambda", "h", "f", "Z", "psi", "checks"}) CHECK(cert.contains(key));
  for (const auto& [name, ok] : cert["checks"].items()) CHECK_MESSAGE(ok.get<bool>(), name);

  const auto closure = invoke({"orbit-closure", "--eta", "2,2", "--gamma", "4"});
  CHECK(closure.status == 0);
  CHECK(Json::parse(closure.out) == Json::parse(R"({"leq": true})"));
  CHECK(Json::parse(invoke({"orbit-closure", "--eta", "4", "--gamma", "2,2"}).out)["leq"] == false);

  const auto cls = invoke({"classify", "--group", "GL", "--lambda", "3,1"});
  CHECK(Json::parse(cls.out)["distinguished"] == false);
  const auto q = invoke({"quasi-criticals", "--rule", "weight-one-or-two"},
                        R"j({"n": 6, "S": "diag(1,-1,4,2,7/2,3/2)", "f": "E21+E43+E65"})j");
  CHECK(Json::parse(q.out)["values"][0] == "6/5");

  const auto text = invoke({"pair-chain", "--output", "text"}, kSame);
  CHECK(text.out.find("critical numbers: 0, 1/4, 3/4") != std::string::npos);
  CHECK(text.out.find("E13+E24") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).status == cli::kParseError);
  CHECK(invoke({"no-such-verb"}).status == cli::kParseError);
  CHECK(invoke({"deform-gl", "--mu", "2,2"}).status == cli::kParseError);
  CHECK(invoke({"deform-gl", "--mu", "2,x", "--lambda", "4"}).status == cli::kParseError);
  CHECK(invoke({"pair-chain"}, "{not json").status == cli::kParseError);
  CHECK(invoke({"pair-chain"}, R"({"n": 2, "S": "E99", "f": "0"})").status == cli::kParseError);
  CHECK(invoke({"pair-chain", "/no/such/file.json"}).status == cli::kParseError);
  CHECK(invoke({"classify", "--group", "XY", "--lambda", "2"}).status == cli::kParseError);
  CHECK(invoke({"deform-gl", "--mu", "2,2", "--output", "yaml", "--lambda", "4"}).status == cli::kParseError);

  const auto nd = invoke({"deform-gl", "--mu", "3,1", "--lambda", "2,2"});
  CHECK(nd.status == cli::kMathError);
  CHECK(Json::parse(nd.out)["error"]["kind"] == "NotDominated");
  const auto gate = invoke({"deform-sl", "--mu", "2,2", "--lambda", "4", "--a", "2"});
  CHECK(gate.status == cli::kMathError);
  CHECK(Json::parse(gate.out)["condition_not_met"]["a_class"] == "2");
  // [S, f] != -2 f: not a Whittaker pair.
  CHECK(invoke({"pair-chain"}, R"j({"n": 2, "S": "diag(1,-1)", "f": "E12"})j").status == cli::kMathError);
  CHECK(invoke({"classify", "--group", "Sp", "--lambda", "3"}).status == cli::kMathError);
  CHECK(invoke({"deform-gl", "--help"}).status == cli::kOk);
}

TEST_CASE("output is byte-stable") {
  const auto a = invoke({"pair-chain"}, kSame);
  const auto b = invoke({"pair-chain"}, kSame);
  CHECK(a.out == b.out);
  // Keys are sorted at every level.
  const Json doc = Json::parse(a.out);
  CHECK(doc.dump(2) + "\n" == a.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("fixtures") {
  const auto all = cli::verify_fixtures(cli::default_fixture_dir(), "");
  CHECK(all.size() >= 10);
  for (const auto& r : all) CHECK_MESSAGE(r.passed, r.name << "\n" << r.diff);

  const auto gl6 = cli::verify_fixtures(cli::default_fixture_dir(), "gl6");
  CHECK(!gl6.empty());
  for (const auto& r : gl6) CHECK(r.name.find("gl6") != std::string::npos);

  const auto run = invoke({"verify-fixtures", "--filter", "gl4-chain"});
  CHECK(run.status == 0);

  // A corrupted expectation is reported by name with a diff.
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "whitforge_fixture_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ifstream src(fs::path(cli::default_fixture_dir()) / "gl4-chain.json");
  Json fx = Json::parse(src);
  fx["expected"]["/criticals"] = Json::parse(R"(["0","1/3","3/4"])");
  std::ofstream(dir / "broken.json") << fx.dump(2);
  const auto broken = cli::verify_fixtures(dir.string(), "");
  REQUIRE(broken.size() == 1);
  CHECK(!broken[0].passed);
  CHECK(broken[0].name == "gl4-chain");
  CHECK(broken[0].diff.find("/criticals") != std::string::npos);
  CHECK(broken[0].diff.find("1/3") != std::string::npos);
  CHECK(invoke({"verify-fixtures", "--dir", dir.string()}).status == cli::kMathError);
  fs::remove_all(dir);
}
