#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "elw/cli.hpp"
#include "elw/engines.hpp"
#include "elw/json_io.hpp"

using namespace elw;
using elw::io::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;

  json parsed() const { return json::parse(out); }
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("elw-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const json& j) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << j.dump(2);
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

}  // namespace

TEST(Cli, MuTd) {
  const CliResult r = run({"mu-td", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("720"), std::string::npos) << r.out;

  const CliResult j = run({"--json", "mu-td", "4", "--factored"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(j.parsed()["payload"]["mu_td"], 720);
  EXPECT_EQ(j.parsed()["payload"]["factors"], "2^4 3^2 5^1");
}

TEST(Cli, SeveriBrauerExample) {
  const CliResult r = run({"--json", "example", "severi-brauer", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json report = r.parsed();
  EXPECT_EQ(report["command"], "example severi-brauer");
  EXPECT_EQ(report["status"], "ok");
  EXPECT_EQ(report["payload"]["sequence"], json::parse("[5,5,5,5,1]"));

  const CliResult table = run({"example", "severi-brauer", "5"});
  EXPECT_NE(table.out.find("(5),(5),(5),(5),(1)"), std::string::npos) << table.out;
}

TEST(Cli, EveryExampleSucceeds) {
  const std::vector<std::vector<std::string>> cases = {
      {"example", "severi-brauer", "7"}, {"example", "conics", "4"},
      {"example", "double-cover", "6"},  {"example", "double-cover", "10", "5"},
      {"example", "quadric3"},           {"example", "hyperelliptic", "3"},
      {"example", "real-curves", "3"},   {"example", "k3-chi", "6", "2"}};
  for (const auto& args : cases) {
    const CliResult r = run(args);
    EXPECT_EQ(r.code, 0) << args[1] << " " << r.out << r.err;
  }
}

TEST(Cli, DoubleCoverPayload) {
  const json p = run({"--json", "example", "double-cover", "6"}).parsed()["payload"];
  EXPECT_EQ(p["surface_chi"], 11);
  EXPECT_EQ(p["curve_chi"], json::parse("[4,10,18]"));
  EXPECT_EQ(p["sequence"], json::parse("[2,2,1]"));
}

TEST(Cli, CheckSeq) {
  const CliResult bad = run({"check-seq", "4", "1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("condition (2) fails at r=1: 4 ∤ 2"), std::string::npos) << bad.err;

  EXPECT_EQ(run({"check-seq", "2", "1"}).code, 0);
  EXPECT_EQ(run({"check-seq", "12", "6", "2", "--k3"}).code, 0);
  EXPECT_EQ(run({"check-seq", "12", "2", "2", "--k3"}).code, 1);
  EXPECT_EQ(run({"check-seq", "12", "2", "--k3"}).code, 2);
  EXPECT_EQ(run({"check-seq", "0", "1"}).code, 2);
}

TEST(Cli, Enumerate) {
  const CliResult r = run({"--json", "enumerate", "--dim", "1", "--bound", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.parsed()["payload"]["sequences"], json::parse("[[1,1],[2,1],[2,2]]"));
  EXPECT_EQ(r.parsed()["payload"]["count"], 3);
}

TEST(Cli, DegreeFormula) {
  EXPECT_EQ(run({"degree-formula", "3,3,1", "1,1,1", "--deg", "3", "--level", "0"}).code, 0);
  EXPECT_EQ(run({"degree-formula", "4,4", "4,1", "--deg", "2", "--level", "1"}).code, 1);
  EXPECT_EQ(run({"degree-formula", "4,x", "4,1", "--deg", "2", "--level", "1"}).code, 2);
  EXPECT_EQ(run({"degree-formula", "4,4", "4,1", "--deg", "2", "--level", "5"}).code, 2);
}

TEST(Cli, Henselian) {
  EXPECT_EQ(run({"henselian", "--chi", "6", "2", "3"}).code, 0);
  EXPECT_EQ(run({"henselian", "--chi", "3", "2", "4"}).code, 1);
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"mu-td", "four"}).code, 2);
  EXPECT_EQ(run({"mu-td", "-1"}).code, 2);
  EXPECT_EQ(run({"example", "tori"}).code, 2);
  EXPECT_EQ(run({"example", "severi-brauer", "6"}).code, 2);
  EXPECT_EQ(run({"example", "double-cover", "4"}).code, 2);
  EXPECT_EQ(run({"elw", "/nonexistent/catalog.json"}).code, 2);
  const CliResult r = run({"example", "k3-chi", "3", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("OddSelfIntersection"), std::string::npos) << r.err;
}

TEST(Cli, HelpExitsZero) {
  const CliResult r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check-seq"), std::string::npos);
}

TEST(Cli, JsonAndTableCarryTheSameChecks) {
  const CliResult j = run({"--json", "example", "quadric3"});
  const CliResult t = run({"example", "quadric3"});
  ASSERT_EQ(j.code, 0);
  ASSERT_EQ(t.code, 0);
  const json report = j.parsed();
  EXPECT_NE(t.out.find("status   " + report["status"].get<std::string>()), std::string::npos);
  for (const auto& d : report["details"]) {
    EXPECT_NE(t.out.find(d["check"].get<std::string>()), std::string::npos) << d["check"];
    EXPECT_NE(t.out.find(d["witness"].get<std::string>()), std::string::npos) << d["witness"];
  }
}

TEST(Cli, ColorOnlyWhenRequested) {
  ::unsetenv("ELWLAB_COLOR");
  EXPECT_EQ(run({"mu-td", "2"}).out.find("\x1b["), std::string::npos);
  ::setenv("ELWLAB_COLOR", "1", 1);
  const CliResult colored = run({"example", "conics", "2"});
  ::unsetenv("ELWLAB_COLOR");
  EXPECT_NE(colored.out.find("\x1b["), std::string::npos);
}

TEST_F(CliFiles, ElwAndVerifyOnCatalogFile) {
  const std::string cat = write("dc.json", io::to_json(engines::real_double_cover_catalog(6, 3).catalog));
  const CliResult e = run({"--json", "elw", cat});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.parsed()["payload"]["sequence"], json::parse("[2,2,1]"));

  const CliResult v = run({"--json", "verify", cat});
  ASSERT_EQ(v.code, 0) << v.out;
  bool saw_top = false, saw_ord = false;
  const json report = v.parsed();
  for (const auto& d : report["details"]) {
    saw_top = saw_top || d["check"] == "top relation";
    saw_ord = saw_ord || d["check"] == "ord relation l=2";
  }
  EXPECT_TRUE(saw_top);
  EXPECT_TRUE(saw_ord);

  const std::string sheaf = write("f.json", json::parse(
      R"({"dim": 1, "components": [{"generator": "C1H", "length": 1}], "total_chi": 6})"));
  EXPECT_EQ(run({"verify", cat, "--lemma", "todd", "--sheaf", sheaf}).code, 0);
  const std::string off = write("g.json", json::parse(
      R"({"dim": 1, "components": [{"generator": "C1H", "length": 1}], "total_chi": 5})"));
  EXPECT_EQ(run({"verify", cat, "--lemma", "todd", "--sheaf", off}).code, 1);
}

TEST_F(CliFiles, VerifyReportsViolation) {
  CycleCatalog c{"seven", 1, {{"pt", 0, 7}, {"C", 1, 1}}, std::nullopt, {Flag::char_zero}};
  const std::string cat = write("seven.json", io::to_json(c));
  const CliResult r = run({"--json", "verify", cat});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.parsed()["status"], "violation");
}

TEST_F(CliFiles, VerifyVacuousOrd) {
  const std::string cat = write("dc.json", io::to_json(engines::real_double_cover_catalog(6, 3).catalog));
  const CliResult r = run({"--json", "verify", cat, "--lemma", "ord", "--ell", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.parsed()["details"][1]["outcome"], "vacuous");
}

TEST_F(CliFiles, MorphismFile) {
  write("sb3.json", io::to_json(engines::severi_brauer_catalog(3).catalog));
  write("p2.json", io::to_json(engines::projective_space_catalog(2).catalog));
  const std::string m = write("m.json", json{{"source", "sb3.json"},
                                             {"target", "p2.json"},
                                             {"kind", "generically_finite"},
                                             {"degree", 3}});
  const CliResult r = run({"--json", "morphism", m});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed()["details"].size(), 4u);

  const std::string back = write("back.json", json{{"source", "p2.json"},
                                                   {"target", "sb3.json"},
                                                   {"kind", "birational"}});
  EXPECT_EQ(run({"morphism", back}).code, 1);
}

TEST_F(CliFiles, ResidueAndBirational) {
  const std::string q = write("q.json", io::to_json(engines::quadric3_catalog().catalog));
  const std::string c4 = write("c4.json", json::parse(
      R"({"dim": 1, "terms": [{"generator": "C4", "coefficient": 1}]})"));
  const CliResult r = run({"--json", "residue", q, c4});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"residue\""), std::string::npos) << r.out;

  const std::string p2 = write("p2.json", io::to_json(engines::projective_space_catalog(2).catalog));
  const std::string sb = write("sb.json", io::to_json(engines::severi_brauer_catalog(3).catalog));
  EXPECT_EQ(run({"birational", p2, p2}).code, 0);
  EXPECT_EQ(run({"birational", p2, sb}).code, 1);
}

TEST_F(CliFiles, SaveRoundTrip) {
  const std::string saved = path("conics.json");
  ASSERT_EQ(run({"example", "conics", "3", "--save", saved}).code, 0);
  const CliResult r = run({"--json", "elw", saved});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed()["payload"]["sequence"], json::parse("[2,2,2,1]"));
  EXPECT_EQ(run({"example", "hyperelliptic", "2", "--save", path("h.json")}).code, 2);
}
