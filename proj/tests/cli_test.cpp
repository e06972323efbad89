#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "genealogy/report_io.hpp"
#include "genealogy/snapshot_io.hpp"
#include "test_support.hpp"

namespace genealogy {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string output;
};

fs::path work_dir() {
  const auto d = fs::temp_directory_path() / "genealogy_cli_tests";
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const auto log = work_dir() / "last.log";
  const std::string cmd =
      std::string("\"") + GENEALOGY_CLI + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(log)};
}

std::string quartet_ingest_args(const fs::path& out) {
  const auto d = testing::data_dir() / "quartet";
  return "ingest --authors \"" + (d / "authors.txt").string() + "\" --author-pairs \"" +
         (d / "author_pairs.txt").string() + "\" --out \"" + out.string() + "\"";
}

TEST(Cli, IngestQuartet) {
  const auto snap = work_dir() / "quartet.snap";
  const auto r = run(quartet_ingest_args(snap));
  ASSERT_EQ(r.code, 0) << r.output;
  EXPECT_NE(r.output.find("authors=4"), std::string::npos) << r.output;
  EXPECT_EQ(snapshot_load(snap)->matrix().dense(), testing::kQuartetMatrix);
}

TEST(Cli, RerunIsByteIdentical) {
  const auto a = work_dir() / "rerun_a.snap";
  const auto b = work_dir() / "rerun_b.snap";
  ASSERT_EQ(run(quartet_ingest_args(a)).code, 0);
  ASSERT_EQ(run(quartet_ingest_args(b)).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, MissingInputExitsTwoNamingPath) {
  const auto missing = work_dir() / "no_such_citations.txt";
  const auto r = run("ingest --authors \"" + (testing::data_dir() / "chain" / "authors.txt").string() +
                     "\" --articles \"" + (testing::data_dir() / "chain" / "authors.txt").string() +
                     "\" --citations \"" + missing.string() + "\" --out \"" +
                     (work_dir() / "x.snap").string() + "\"");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.output.find(missing.string()), std::string::npos) << r.output;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("report").code, 2);
  EXPECT_EQ(run("serve").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
}

TEST(Cli, ReportFlagsAuthorA) {
  const auto snap = work_dir() / "quartet_report.snap";
  ASSERT_EQ(run(quartet_ingest_args(snap)).code, 0);
  const auto out = work_dir() / "quartet_report.tsv";
  const auto r = run("report --snapshot \"" + snap.string() +
                     "\" --threshold-lower 0.5 --threshold-upper 0.8 --out \"" + out.string() + "\"");
  ASSERT_EQ(r.code, 0) << r.output;
  EXPECT_NE(r.output.find("N=4 elapsed_ms="), std::string::npos) << r.output;
  std::ifstream in(out);
  const auto rows = read_report_tsv(in);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].name, "Author A");
  EXPECT_EQ(rows[0].verdict, "LineageDependent");
  EXPECT_EQ(rows[0].ratio, 1.0);
  EXPECT_EQ(rows[0].ngc, 0u);

  const auto json_out = run("report --snapshot \"" + snap.string() +
                            "\" --threshold-lower 0.5 --threshold-upper 0.8 --format json --out -");
  ASSERT_EQ(json_out.code, 0);
  EXPECT_NE(json_out.output.find("\"LineageDependent\""), std::string::npos);
}

TEST(Cli, EmptyCorpusSucceeds) {
  const auto authors = work_dir() / "empty_authors.txt";
  std::ofstream(authors) << "# nothing here\n";
  const auto snap = work_dir() / "empty.snap";
  ASSERT_EQ(run("ingest --authors \"" + authors.string() + "\" --out \"" + snap.string() + "\"").code,
            0);
  const auto r = run("report --snapshot \"" + snap.string() + "\" --out -");
  EXPECT_EQ(r.code, 0) << r.output;
  EXPECT_NE(r.output.find("N=0"), std::string::npos);
}

TEST(Cli, VersionMismatchFails) {
  const auto good = work_dir() / "v.snap";
  ASSERT_EQ(run(quartet_ingest_args(good)).code, 0);
  auto bytes = slurp(good);
  bytes[8] = 7;
  const auto bad = work_dir() / "v_bad.snap";
  std::ofstream(bad, std::ios::binary) << bytes;
  const auto r = run("report --snapshot \"" + bad.string() + "\" --out -");
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.output.find("version"), std::string::npos) << r.output;
}

TEST(Cli, ServeNeedsExistingSnapshot) {
  const auto r = run("serve --snapshot \"" + (work_dir() / "absent.snap").string() + "\"");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, GenSyntheticIngestsAndIsDeterministic) {
  const auto a = work_dir() / "syn_a";
  const auto b = work_dir() / "syn_b";
  ASSERT_EQ(run("gen-synthetic --authors 300 --cartels 2 --seed 4 --out \"" + a.string() + "\"").code, 0);
  ASSERT_EQ(run("gen-synthetic --authors 300 --cartels 2 --seed 4 --out \"" + b.string() + "\"").code, 0);
  for (const char* f : {"authors.txt", "articles.txt", "citations.txt", "cartels.txt"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
  const auto snap = work_dir() / "syn.snap";
  const auto r = run("ingest --authors \"" + (a / "authors.txt").string() + "\" --articles \"" +
                     (a / "articles.txt").string() + "\" --citations \"" +
                     (a / "citations.txt").string() + "\" --out \"" + snap.string() + "\"");
  ASSERT_EQ(r.code, 0) << r.output;
  EXPECT_EQ(snapshot_load(snap)->author_count(), 300u);
}

TEST(Cli, ExportRoundTrips) {
  const auto snap = work_dir() / "exp.snap";
  ASSERT_EQ(run(quartet_ingest_args(snap)).code, 0);
  const auto dir = work_dir() / "exported";
  ASSERT_EQ(run("export --snapshot \"" + snap.string() + "\" --out \"" + dir.string() + "\"").code, 0);
  const auto again = work_dir() / "exp2.snap";
  ASSERT_EQ(run("ingest --authors \"" + (dir / "authors.txt").string() + "\" --author-pairs \"" +
                (dir / "author_pairs.txt").string() + "\" --out \"" + again.string() + "\"")
                .code,
            0);
  EXPECT_EQ(snapshot_load(again)->matrix(), snapshot_load(snap)->matrix());
}

}  // namespace
}  // namespace genealogy
