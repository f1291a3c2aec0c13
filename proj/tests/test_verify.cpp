#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "oracle.hpp"
#include "ylm/render.hpp"
#include "ylm/verify.hpp"

using namespace ylm;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(YLM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json load_schema() {
  std::ifstream in(YLM_SCHEMA_PATH);
  REQUIRE(in.good());
  return json::parse(in);
}

SuiteConfig small(SuiteName s, long l_max = 3) {
  SuiteConfig c;
  c.suite = s;
  c.l_max = l_max;
  c.d_max = 4;
  c.s_max = 4;
  c.random_trials = 4;
  c.adjoint_pairs = 4;
  return c;
}

}  // namespace

TEST_CASE("su2 suite at lmax 3 passes everywhere") {
  const auto r = run_suite(small(SuiteName::su2));
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.flagged == 0);
  CHECK(r.summary.pass == r.records.size());
  for (const auto& rec : r.records) {
    REQUIRE(rec.status == Status::pass);
    REQUIRE(rec.exact_zero);
  }
}

TEST_CASE("orthonormality at lmax 2 covers the 9x9 Gram matrix") {
  const auto r = run_suite(small(SuiteName::orthonormality, 2));
  CHECK(r.records.size() == 45);  // upper triangle of 9x9
  CHECK(r.summary.pass == 45);
}

TEST_CASE("generation at lmax 4 flags even-s I routes with the derived constant") {
  const auto r = run_suite(small(SuiteName::generation, 4));
  CHECK(r.summary.fail == 0);
  REQUIRE(r.summary.flagged > 0);
  for (const auto& rec : r.records) {
    if (rec.status != Status::flagged) continue;
    REQUIRE((rec.identity_id == "gen-I" || rec.identity_id == "I-highest-phase"));
    long s = 0;
    for (const auto& [k, v] : rec.params)
      if (k == "s") s = v;
    REQUIRE(s % 2 == 0);
    const std::string expected = "derived c = 1/" + std::to_string(s / 2) + "·√1";
    REQUIRE(rec.note.find(expected) != std::string::npos);
  }
}

TEST_CASE("summary counts equal record tallies for every suite") {
  for (auto s : {SuiteName::su2, SuiteName::ladder_l, SuiteName::u11_K, SuiteName::u11_I, SuiteName::mixed_A,
                 SuiteName::adjoint, SuiteName::orthonormality, SuiteName::generation, SuiteName::parity}) {
    CAPTURE(to_string(s));
    const auto r = run_suite(small(s));
    std::map<Status, std::size_t> tally;
    for (const auto& rec : r.records) ++tally[rec.status];
    CHECK(tally[Status::pass] == r.summary.pass);
    CHECK(tally[Status::fail] == r.summary.fail);
    CHECK(tally[Status::flagged] == r.summary.flagged);
    CHECK(r.summary.fail == 0);
    CHECK_FALSE(r.records.empty());
  }
}

TEST_CASE("reports are byte-identical for a fixed seed and sorted by id and params") {
  const auto a = run_suite(small(SuiteName::all));
  const auto b = run_suite(small(SuiteName::all));
  CHECK(to_json(a) == to_json(b));
  CHECK(to_csv(a) == to_csv(b));
  for (std::size_t i = 1; i < a.records.size(); ++i) {
    const auto& p = a.records[i - 1];
    const auto& q = a.records[i];
    REQUIRE((p.identity_id < q.identity_id || (p.identity_id == q.identity_id && p.params <= q.params)));
  }
  auto other = small(SuiteName::all);
  other.seed = 7;
  CHECK(to_json(run_suite(other)) != to_json(a));
}

TEST_CASE("JSON report validates against the shipped schema") {
  const json schema = load_schema();
  const json report = json::parse(to_json(run_suite(small(SuiteName::all))));
  CHECK(oracle::schema_violation(report, schema).empty());
  CHECK(report["version"] == kReportSchemaVersion);
  CHECK(report["summary"]["flagged"].get<std::size_t>() == report["summary"]["flagged_records"].size());

  json broken = report;
  broken["records"][0]["status"] = "maybe";
  CHECK_FALSE(oracle::schema_violation(broken, schema).empty());
  broken = report;
  broken["summary"].erase("fail");
  CHECK_FALSE(oracle::schema_violation(broken, schema).empty());
}

TEST_CASE("CSV report shape") {
  const std::string csv = to_csv(run_suite(small(SuiteName::parity, 1)));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "id,params,status,exact_zero,float_dev,note");
  std::getline(in, line);
  CHECK(line.rfind("parity,l=0;m=0,pass,true,", 0) == 0);
}

TEST_CASE("config validation and suite names") {
  SuiteConfig c;
  c.l_max = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.numeric_tolerance = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.random_trials = -1;
  CHECK_THROWS_AS(run_suite(c), std::invalid_argument);
  CHECK(parse_suite("u11-K") == SuiteName::u11_K);
  CHECK(to_string(parse_suite("mixed-A")) == "mixed-A");
  CHECK_THROWS_AS(parse_suite("su3"), std::invalid_argument);
}

TEST_CASE("random smooth functions are deterministic and smooth") {
  HarmonicCache cache;
  auto r1 = seeded_rng(42, "x");
  auto r2 = seeded_rng(42, "x");
  auto r3 = seeded_rng(42, "y");
  const auto f = random_smooth_function(r1, 6, cache);
  CHECK(f == random_smooth_function(r2, 6, cache));
  CHECK_FALSE(f == random_smooth_function(r3, 6, cache));
  CHECK(f.has_smooth_parity());
}

TEST_CASE("generate renders the documented forms") {
  CHECK(cmd_generate(0, 0, GenerateForm::exact) == "1/2·√1·π^(-1/2)\n");
  CHECK(cmd_generate(1, 0, GenerateForm::exact) == "√3/2·π^(-1/2)·cosθ\n");
  CHECK(cmd_generate(1, 0, GenerateForm::latex) == "\\frac{1}{2}\\sqrt{3}\\,\\pi^{-1/2}\\cos\\theta\n");
  const std::string grid = cmd_generate(1, 1, GenerateForm::numeric_grid);
  CHECK(grid.find("1.5707963268,0.0000000000,-0.3454941495,0.0000000000\n") != std::string::npos);
  CHECK(std::count(grid.begin(), grid.end(), '\n') == 1 + 9 * 8);
  CHECK_THROWS_AS(cmd_generate(1, 2, GenerateForm::exact), IndexOutOfRange);
  CHECK_THROWS_AS(parse_form("svg"), std::invalid_argument);
}

TEST_CASE("tables carry the documented coefficients") {
  const std::string j = cmd_table("Jplus", 3);
  CHECK(j.find("1,0,0,0,1,0,√(1/3),0.57735027,true\n") != std::string::npos);
  const std::string l = cmd_table("Lplus", 2);
  CHECK(l.find("1,1,1,0,1,1,√2,1.41421356,true\n") != std::string::npos);
  // d = 2, m = 1: sqrt(3/5 * 2 * 3)
  const std::string k = cmd_table("Kplus-d2", 3);
  CHECK(k.find("2,1,1,0,2,1,√(18/5),") != std::string::npos);
  for (const char* fam : {"Lminus", "Jminus", "Kminus-d3", "Iplus-s2", "Iminus-s5", "App", "Amm", "Amp", "Apm"}) {
    CAPTURE(fam);
    const std::string t = cmd_table(fam, 3);
    CHECK(t.find(",false\n") == std::string::npos);
    CHECK(std::count(t.begin(), t.end(), '\n') > 1);
  }
  CHECK_THROWS_AS(cmd_table("Xplus", 3), UnknownFamily);
  CHECK_THROWS_AS(cmd_table("Kplus-d0", 3), UnknownFamily);
  CHECK_THROWS_AS(cmd_table("Kplus-dx", 3), UnknownFamily);
}

TEST_CASE("radical text") {
  CHECK(radical_text(Scalar::zero()) == "0");
  CHECK(radical_text(scalar_sqrt(Rational(4))) == "2");
  CHECK(radical_text(-scalar_sqrt(make_rational(2, 3))) == "-√(2/3)");
}

TEST_CASE("CLI exit codes and outputs") {
  auto r = run_cli("generate --l 1 --m 1 --form numeric-grid");
  CHECK(r.code == 0);
  CHECK(r.out.find("-0.3454941495") != std::string::npos);
  r = run_cli("generate --l 1 --m 3");
  CHECK(r.code == 2);
  r = run_cli("table --family Nope --lmax 2");
  CHECK(r.code == 2);
  r = run_cli("table --family Jplus --lmax 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("√(1/3)") != std::string::npos);
  r = run_cli("verify --suite su2 --lmax 2 --trials 3 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("id,params,status", 0) == 0);
  r = run_cli("verify --suite generation --lmax 3 --trials 0");
  CHECK(r.code == 0);  // flagged records do not fail the run
  const json report = json::parse(r.out);
  CHECK(report["summary"]["flagged"].get<int>() > 0);
  CHECK(oracle::schema_violation(report, load_schema()).empty());
  r = run_cli("verify --suite nonsense");
  CHECK(r.code == 2);
  r = run_cli("verify --lmax 0");
  CHECK(r.code == 2);
}
