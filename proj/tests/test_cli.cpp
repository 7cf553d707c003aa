#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "crcoh/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = crcoh::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(CRCOH_DATA_DIR) + "/" + name; }

std::vector<std::string> triple_args(const std::string& file, const std::string& method, const std::string& t1,
                                     const std::string& t2, const std::string& t3) {
  return {"triple", file, "--method", method, "--t1", t1, "--k1", "0", "--t2", t2, "--k2", "0", "--t3", t3, "--k3", "0"};
}

}  // namespace

TEST(Cli, SectorsTable) {
  Result r = run({"sectors", data("wp122333.datum")});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 4);
  EXPECT_NE(r.out.find("\t5/3\t"), std::string::npos);
}

TEST(Cli, TripleBothMethods) {
  for (const char* method : {"localization", "direct"}) {
    Result r = run(triple_args(data("wp122333.datum"), method, "c=1/3", "c=1/3", "c=1/3"));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "4/27\n");
  }
  Result r = run(triple_args(data("wp112.datum"), "direct", "c=1/2", "c=1/2", "id"));
  EXPECT_EQ(r.out, "1/2\n");
}

TEST(Cli, TripleStructured) {
  std::vector<std::string> args = triple_args(data("wp122333.datum"), "localization", "c=1/3", "c=1/3", "c=1/3");
  args.insert(args.end(), {"--format", "structured"});
  Result r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = crcoh::io::Json::parse(r.out);
  EXPECT_EQ(doc["value"], "4/27");
  EXPECT_EQ(doc["degree_check"], -1);
  EXPECT_EQ(doc["numerator"]["coeff"], "16");
  EXPECT_EQ(doc["euler"]["coeff"], "108");
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"shift", data("wp122333.datum"), "--t", "c=1/3"}).out, "5/3\n");
  EXPECT_EQ(run({"pair", data("wp112.datum"), "--t1", "c=1/2", "--t2", "c=1/2"}).out, "1/2\n");
  Result cup = run({"cup", data("wp122333.datum"), "--t1", "c=1/3", "--t2", "c=1/3"});
  EXPECT_EQ(cup.out, "sector\teta_power\tcoeff\nc=2/3\t2\t4\n");
  Result basis = run({"basis", data("wp122333.datum"), "--format", "structured"});
  EXPECT_EQ(crcoh::io::Json::parse(basis.out)["basis"].size(), 14u);
  Result wall = run({"wallcross", data("mixed11m1.datum"), "--t1", "id", "--k1", "1", "--t2", "id", "--k2", "1",
                     "--t3", "id", "--format", "structured"});
  EXPECT_EQ(crcoh::io::Json::parse(wall.out)["value"], "-1");
}

TEST(Cli, TableIsByteStableAndWritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "crcoh_table_test.json";
  Result first = run({"table", data("wp122333.datum"), "--format", "structured"});
  Result second = run({"table", data("wp122333.datum"), "--format", "structured", "--out", path.string()});
  ASSERT_EQ(second.code, 0);
  EXPECT_TRUE(second.out.empty());
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  EXPECT_EQ(file.str(), first.out);
  std::filesystem::remove(path);
}

TEST(Cli, Selftest) {
  for (const char* name : {"wp122333.datum", "wp112.datum", "wp113_z2.datum"}) {
    Result r = run({"selftest", data(name), "--format", "structured"});
    EXPECT_EQ(r.code, 0) << name << r.err << r.out;
    EXPECT_TRUE(crcoh::io::Json::parse(r.out)["passed"].get<bool>());
  }
  Result mixed = run({"selftest", data("mixed11m1.datum")});
  EXPECT_EQ(mixed.code, 0) << mixed.out;
  EXPECT_NE(mixed.out.find("ring_axioms[positive]"), std::string::npos);
  EXPECT_NE(mixed.out.find("ring_axioms[negative]"), std::string::npos);
  EXPECT_NE(mixed.out.find("path_agreement\tdirect_equals_localized\tskip"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate", data("wp11.datum")}).code, 2);
  EXPECT_EQ(run({"sectors"}).code, 2);
  EXPECT_EQ(run({"sectors", data("wp11.datum"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"triple", data("wp11.datum"), "--method", "guess"}).code, 2);
  EXPECT_EQ(run({"shift", data("wp11.datum"), "--t", "c=oops"}).code, 2);
  EXPECT_EQ(run({"shift", data("wp11.datum")}).code, 2);

  Result empty = run({"shift", data("wp122333.datum"), "--t", "c=1/6"});
  EXPECT_EQ(empty.code, 1);
  EXPECT_NE(empty.err.find("EmptySector"), std::string::npos);
  Result noncomp = run(triple_args(data("wp122333.datum"), "localization", "c=1/3", "c=1/3", "id"));
  EXPECT_EQ(noncomp.code, 1);
  EXPECT_NE(noncomp.err.find("NonComposable"), std::string::npos);
  Result missing = run({"sectors", "/nonexistent.datum"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("InvalidDatum"), std::string::npos);
}
