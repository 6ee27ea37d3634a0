#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qh/cli.hpp"

using namespace qh;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(parse_scalar("-1").at(4) == Cyc::rational(4, -1));
  CHECK(parse_scalar("3/4").at(2) == Cyc::rational(2, mpq_class(3, 4)));
  CHECK(parse_scalar("z4^3").at(8) == Cyc::root_of_unity(8, 6));
  CHECK(parse_scalar("z6").at(6) == Cyc::root_of_unity(6, 1));
  CHECK_THROWS(parse_scalar("banana"));
  CHECK_THROWS(parse_scalar("z4").at(6));
}

TEST_CASE("combinatorics subcommand") {
  CHECK(run({"combinatorics", "--m-max", "6"}).code == 0);
  const auto bad = run({"combinatorics", "--m-max", "4", "--inject-fault"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("counterexample") != std::string::npos);
  CHECK(run({"combinatorics", "--m-max", "1"}).code == 2);
}

TEST_CASE("hopf-check agrees on Z2") {
  const std::vector<std::string> args{"hopf-check", "--group", "Z2", "--weights", "(1),(1)", "--chars", "-1,-1",
                                      "--family", "I2", "--m", "1", "--a", "-1"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["criterion"] == "hopf");
  CHECK(j["oracle"] == "hopf");
  CHECK(j["dim"] == 8);

  auto neg = args;
  neg.back() = "1";
  const auto n = nlohmann::json::parse(run(neg).out);
  CHECK(n["oracle"] == "not_hopf");
  CHECK(n["agree"] == true);
  CHECK(n.contains("diagnostic"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"quiver", "--group", "Q8", "--weights", "e,e"}).code == 2);
  CHECK(run({"quiver", "--group", "Z2"}).code == 2);
  CHECK(run({"hopf-check", "--group", "Z2", "--weights", "(1),(1)", "--family", "I9"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"witness", "klein"}).code == 2);
}

TEST_CASE("quiver output formats") {
  const auto dot = run({"quiver", "--group", "Z2", "--weights", "(1),(1)", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  const auto js = run({"quiver", "--group", "Z3", "--weights", "(1),(2)"});
  CHECK(nlohmann::json::parse(js.out)["arrows"].size() == 6);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "qhopf_cli_test.json";
  std::filesystem::remove(path);
  const auto r = run({"enumerate", "--group", "Z2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("\"summary\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("witness, blocks, axioms, case5") {
  CHECK(run({"witness", "book"}).code == 0);
  CHECK(run({"witness", "taft"}).code == 0);
  CHECK(run({"witness", "book", "--mutate", "0,0"}).code == 1);
  CHECK(run({"witness", "book", "--mutate", "99,0"}).code == 2);
  CHECK(run({"blocks", "--group", "Z4", "--weights", "(2),(2)", "--family", "I2", "--m", "1", "--a", "-1",
             "--chars", "-1,-1"})
            .code == 0);
  CHECK(run({"axioms", "--group", "Z2xZ2", "--weights", "(1,0),(0,1)", "--chars", "-1,1,1,-1", "--degree-bound", "3"})
            .code == 0);
  const auto c5 = run({"case5"});
  CHECK(nlohmann::json::parse(c5.out).contains("dims"));
}
