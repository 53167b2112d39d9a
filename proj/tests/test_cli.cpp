#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "mser/bench.hpp"
#include "mser/ontology.hpp"
#include "mser/pipeline.hpp"

using namespace mser;
namespace fs = std::filesystem;

namespace {

const char* kExample1 = R"(Prefix(:=<http://ex/z#>)
Ontology(<http://ex/z>
  SubClassOf(:GoldenEagle :Eagle)
  SubClassOf(:Eagle :Birds)
  ClassAssertion(:GoldenEagle :Harry)
  ClassAssertion(:EndangeredSpecies :GoldenEagle)
  ObjectPropertyAssertion(:Lives_in :Harry :CPZ)
)
)";

const char* kEndangered = R"(PREFIX : <http://ex/z#>
SELECT ?z WHERE { ?y a :EndangeredSpecies . ?z a ?y . ?z :Lives_in :CPZ }
)";

const char* kMembers = R"(PREFIX : <http://ex/z#>
SELECT ?x WHERE { ?x a :EndangeredSpecies . ?y a ?x }
)";

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mser-cli-" + std::to_string(getpid()) + "-" +
                                         ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  ChildResult mser(std::vector<std::string> args, double timeout = 30) {
    args.insert(args.begin(), MSER_EXE);
    return run_child(args, timeout);
  }

  fs::path dir_;
};

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_F(Cli, TranslateExample1) {
  auto r = mser({"translate", file("ex.ofn", kExample1), "-o", path("ex.dl")});
  ASSERT_EQ(r.status, RunStatus::OK);
  EXPECT_GE(lines(read_file(path("ex.dl"))), 4u);
  EXPECT_NE(read_file(path("ex.dl")).find("instc(\"http://ex/z#GoldenEagle\",\"http://ex/z#Harry\")."),
            std::string::npos);
}

TEST_F(Cli, TranslateEmptyOntology) {
  auto r = mser({"translate", file("empty.ofn", "Ontology()\n")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "");
}

TEST_F(Cli, TranslateMalformedFails) {
  auto r = mser({"translate", file("bad.ofn", "Ontology(\nSubClassOf(:A\n")});
  EXPECT_EQ(r.exit_code, 1);
}

TEST_F(Cli, MissingFileExitsTwo) {
  EXPECT_EQ(mser({"translate", path("nope.ofn")}).exit_code, 2);
  EXPECT_EQ(mser({"query", path("nope.ofn"), path("nope.rq")}).exit_code, 2);
  EXPECT_EQ(mser({"bench", path("nope.conf")}).exit_code, 2);
}

TEST_F(Cli, QueryExample1) {
  auto ont = file("ex.ofn", kExample1);
  auto r = mser({"query", ont, file("q.rq", kEndangered)});
  ASSERT_EQ(r.status, RunStatus::OK);
  EXPECT_EQ(r.out, "http://ex/z#Harry\n");
  r = mser({"query", ont, "--query-string", kMembers, "--report-time"});
  ASSERT_EQ(r.status, RunStatus::OK);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "http://ex/z#GoldenEagle");
  EXPECT_NE(r.out.find("# load_ms="), std::string::npos);
  EXPECT_NE(r.out.find("answers=1"), std::string::npos);
  EXPECT_EQ(mser({"query", ont, "--query-string", kMembers, "--demand"}).out, "http://ex/z#GoldenEagle\n");
  EXPECT_EQ(mser({"oracle", ont, "--query-string", kMembers}).out, "http://ex/z#GoldenEagle\n");
}

TEST_F(Cli, QueryErrorsExitNonzero) {
  auto ont = file("ex.ofn", kExample1);
  EXPECT_NE(mser({"query", ont, "--query-string", "SELECT ?x WHERE { }"}).exit_code, 0);
  EXPECT_NE(mser({"query", ont, "--query-string", "SELECT ?x WHERE { ?x ?p ?y OPTIONAL { ?x ?p ?z } }"}).exit_code, 0);
}

TEST_F(Cli, DumpModelIndependentOfThreads) {
  auto ont = file("ex.ofn", kExample1);
  ASSERT_EQ(mser({"query", ont, "--query-string", kMembers, "--dump-model", path("m1.dl")}).status, RunStatus::OK);
  ASSERT_EQ(mser({"query", ont, "--query-string", kMembers, "--threads", "3", "--dump-model", path("m3.dl")}).status,
            RunStatus::OK);
  EXPECT_EQ(read_file(path("m1.dl")), read_file(path("m3.dl")));
  EXPECT_NE(read_file(path("m1.dl")).find("instc(\"http://ex/z#Birds\",\"http://ex/z#Harry\")."), std::string::npos);
}

TEST_F(Cli, RulesStats) {
  auto r = mser({"rules", "--stats"});
  ASSERT_EQ(r.status, RunStatus::OK);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "rules=129");
  r = mser({"rules"});
  EXPECT_NE(r.out.find("isacCR("), std::string::npos);
}

TEST_F(Cli, ExtendIsSetUnion) {
  auto base = file("base.ofn", kExample1);
  auto ext = file("ext.ofn", R"(Prefix(:=<http://ex/z#>)
Ontology(
  ClassAssertion(:Rank :GoldenEagle)
  SubClassOf(:Eagle :Birds)
  DisjointClasses(:Eagle :Fish)
))");
  ASSERT_EQ(mser({"extend", base, ext, "-o", path("merged.ofn")}).status, RunStatus::OK);
  auto merged = load_ontology(path("merged.ofn"));
  EXPECT_EQ(merged.size(), load_ontology(base).size() + 2);

  ASSERT_EQ(mser({"extend", base, file("none.ofn", "Ontology()"), "-o", path("same.ofn")}).status, RunStatus::OK);
  EXPECT_EQ(load_ontology(path("same.ofn")), load_ontology(base));
  EXPECT_EQ(mser({"extend", base, file("bad.ofn", "Ontology(")}).exit_code, 1);
}

TEST(BenchConfig, Parse) {
  auto c = parse_bench_config(
      "# suite\nontology = a.ofn\nqueries = q1.rq, q2.rq\ntimeout = 2.5\nrepeat = 2\ndemand = yes\n"
      "output = out.csv\nparallel = 2\n",
      "/data");
  EXPECT_EQ(c.ontologies, std::vector<std::string>{"/data/a.ofn"});
  EXPECT_EQ(c.queries, (std::vector<std::string>{"/data/q1.rq", "/data/q2.rq"}));
  EXPECT_DOUBLE_EQ(c.timeout_s, 2.5);
  EXPECT_EQ(c.repeat, 2);
  EXPECT_TRUE(c.demand_mode);
  EXPECT_EQ(c.output_csv, "/data/out.csv");
  EXPECT_EQ(c.parallel, 2u);
}

TEST(BenchConfig, Defaults) {
  auto c = parse_bench_config("ontology = /a.ofn\nquery = /q.rq\n");
  EXPECT_DOUBLE_EQ(c.timeout_s, 60);
  EXPECT_EQ(c.repeat, 3);
  EXPECT_FALSE(c.demand_mode);
}

TEST(BenchConfig, Errors) {
  const char* bad[] = {
      "query = q.rq\n",
      "ontology = a.ofn\n",
      "ontology = a.ofn\nquery = q.rq\ntimeout = 0\n",
      "ontology = a.ofn\nquery = q.rq\nrepeat = 0\n",
      "ontology = a.ofn\nquery = q.rq\ncolour = red\n",
      "ontology a.ofn\n",
      "ontology = a.ofn\nquery = q.rq\ntimeout = soon\n",
  };
  for (const char* text : bad) EXPECT_THROW(parse_bench_config(text), ConfigError) << text;
}

TEST(BenchCsv, GoldenOutput) {
  BenchRow ok{"lubm", "q1", 1.0, 2.25, 3.5, 0.125, 5, RunStatus::OK};
  BenchRow oot{"lubm", "q2", {}, {}, {}, {}, {}, RunStatus::OOT};
  std::ostringstream os;
  write_csv(os, {ok, oot});
  EXPECT_EQ(os.str(),
            "dataset,query,load_ms,translate_ms,saturate_ms,answer_ms,answers,status\n"
            "lubm,q1,1.000,2.250,3.500,0.125,5,OK\n"
            "lubm,q2,,,,,,OOT\n");
}

TEST(BenchCsv, AggregateIsMedian) {
  std::vector<BenchRow> runs{
      {"d", "q", 3.0, 1.0, 10.0, 1.0, 7, RunStatus::OK},
      {"d", "q", 1.0, 2.0, 30.0, 1.0, 7, RunStatus::OK},
      {"d", "q", 2.0, 3.0, 20.0, 1.0, 7, RunStatus::OK},
  };
  auto m = aggregate(runs);
  EXPECT_EQ(m.query, "q@median");
  EXPECT_DOUBLE_EQ(*m.load_ms, 2.0);
  EXPECT_DOUBLE_EQ(*m.saturate_ms, 20.0);
  EXPECT_EQ(*m.answers, 7u);
  EXPECT_EQ(m.status, RunStatus::OK);
  runs[1].status = RunStatus::OOT;
  auto partial = aggregate(runs);
  EXPECT_EQ(partial.status, RunStatus::OOT);
  EXPECT_DOUBLE_EQ(*partial.load_ms, 2.5);
}

TEST_F(Cli, BenchRowsAndAggregates) {
  file("ex.ofn", kExample1);
  file("endangered.rq", kEndangered);
  file("members.rq", kMembers);
  auto conf = file("bench.conf", "ontology = ex.ofn\nqueries = endangered.rq, members.rq\nrepeat = 3\ntimeout = 30\n");
  auto r = mser({"bench", conf, "-o", path("out.csv")}, 120);
  ASSERT_EQ(r.status, RunStatus::OK);
  std::istringstream csv(read_file(path("out.csv")));
  std::vector<std::string> rows;
  for (std::string line; std::getline(csv, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 1u + 6u + 2u);
  EXPECT_EQ(rows[0], kCsvHeader);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_TRUE(rows[i].ends_with(",1,OK")) << rows[i];
  EXPECT_TRUE(rows[7].starts_with("ex,endangered@median,"));
  EXPECT_TRUE(rows[8].starts_with("ex,members@median,"));
}

TEST_F(Cli, BenchTimeoutGivesOot) {
  BenchConfig cfg;
  cfg.timeout_s = 0.001;
  auto row = bench_once(MSER_EXE, file("ex.ofn", kExample1), file("q.rq", kMembers), cfg);
  EXPECT_EQ(row.status, RunStatus::OOT);
  EXPECT_FALSE(row.answers.has_value());
}

TEST_F(Cli, BenchConfigErrorExitsTwo) {
  EXPECT_EQ(mser({"bench", file("bad.conf", "repeat = 3\n")}).exit_code, 2);
}
