#include "flowshop/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "flowshop/instance_io.hpp"

namespace flowshop::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("flowshop_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  fs::path dir_;
};

const std::string kThreeCsv =
    "retained,tardy,due_date\n3,0,13\n2,1,8\n1,2,5\n0,3,0\n";

TEST_F(CliTest, SolveThreeJobs) {
  const auto path = file("three.txt", "3\n1 4\n2 3\n3 5\n");
  const Outcome fast = invoke({"solve", "--input", path});
  EXPECT_EQ(fast.code, kExitOk);
  EXPECT_EQ(fast.out, kThreeCsv);
  const Outcome quad = invoke({"solve", "--input", path, "--solver", "quadratic"});
  EXPECT_EQ(quad.out, fast.out);
}

TEST_F(CliTest, SolveJsonWithTrace) {
  const auto path = file("three.json", R"({"name": "demo", "jobs": [[1,4],[2,3],[3,5]]})");
  const Outcome r = invoke(
      {"solve", "--input", path, "--format", "json", "--output", "json", "--trace"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"instance_name\": \"demo\""), std::string::npos);
  EXPECT_NE(r.out.find("\"removal_order\""), std::string::npos);
  EXPECT_NE(r.out.find("\"removed_contribution\": 5"), std::string::npos);
  const Outcome plain = invoke({"solve", "--input", path, "--output", "json"});
  EXPECT_EQ(plain.out.find("\"trace\""), std::string::npos);
}

TEST_F(CliTest, SolveErrors) {
  const Outcome bad_line = invoke({"solve", "--input", file("x.txt", "2\n1 2\n2 x\n")});
  EXPECT_EQ(bad_line.code, kExitIo);
  EXPECT_NE(bad_line.err.find("line 3"), std::string::npos);

  const Outcome order = invoke({"solve", "--input", file("o.txt", "1\n5 4\n")});
  EXPECT_EQ(order.code, kExitInvalid);
  EXPECT_NE(order.err.find("job 1"), std::string::npos);

  EXPECT_EQ(invoke({"solve", "--input", (dir_ / "missing").string()}).code, kExitIo);
  EXPECT_EQ(invoke({"solve"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"solve", "--input", file("t.txt", "1\n1 1\n"), "--solver", "slow"}).code,
            kExitInvalid);
}

TEST_F(CliTest, GenIsDeterministic) {
  const Outcome a = invoke({"gen", "--n", "40", "--max-b", "9", "--seed", "3"});
  const Outcome b = invoke({"gen", "--n", "40", "--max-b", "9", "--seed", "3"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed=3"), std::string::npos);
  const Instance inst = parse_instance(a.out);
  EXPECT_EQ(inst.size(), 40U);

  const Outcome ones = invoke({"gen", "--n", "5", "--max-b", "1", "--format", "json"});
  EXPECT_EQ(parse_instance(ones.out).jobs[4], (Job{JobId{5}, 1, 1}));

  EXPECT_EQ(invoke({"gen", "--n", "0", "--max-b", "3"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"gen", "--n", "3", "--max-b", "0"}).code, kExitInvalid);
}

TEST_F(CliTest, FastAndQuadraticAgreeByteForByte) {
  for (int seed = 0; seed < 20; ++seed) {
    const Outcome gen = invoke({"gen", "--n", std::to_string(1 + seed * 37),
                                "--max-b", seed % 2 ? "4" : "500", "--seed",
                                std::to_string(seed)});
    const auto path = file("g.txt", gen.out);
    for (const std::string output : {"csv", "json"}) {
      const Outcome fast = invoke({"solve", "--input", path, "--output", output, "--trace"});
      const Outcome quad = invoke({"solve", "--input", path, "--output", output,
                                   "--trace", "--solver", "quadratic"});
      ASSERT_EQ(fast.code, kExitOk);
      ASSERT_EQ(fast.out, quad.out) << "seed " << seed;
    }
  }
}

TEST_F(CliTest, Oracle) {
  const Outcome three = invoke({"oracle", "--input", file("t.txt", "3\n1 4\n2 3\n3 5\n")});
  EXPECT_EQ(three.code, kExitOk);
  EXPECT_EQ(three.out, kThreeCsv);

  const Outcome one = invoke({"oracle", "--input", file("o.txt", "1\n2 7\n")});
  EXPECT_EQ(one.out, "retained,tardy,due_date\n1,0,9\n0,1,0\n");

  const Outcome gen = invoke({"gen", "--n", "25", "--max-b", "9"});
  const auto big = file("big.txt", gen.out);
  EXPECT_EQ(invoke({"oracle", "--input", big}).code, kExitGuard);
  EXPECT_EQ(invoke({"oracle", "--input", big, "--guard", "21"}).code, kExitInvalid);
}

TEST_F(CliTest, Bench) {
  const Outcome r = invoke({"bench", "--sizes", "50,1e2", "--trials", "3", "--solver", "both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 5U);
  EXPECT_EQ(rows[0], "size,solver,median_seconds,ratio");
  EXPECT_EQ(rows[1].rfind("50,fast,", 0), 0U);
  EXPECT_EQ(rows[2].rfind("50,quadratic,", 0), 0U);
  EXPECT_EQ(rows[3].rfind("100,fast,", 0), 0U);
  EXPECT_EQ(rows[4].rfind("100,quadratic,", 0), 0U);
  EXPECT_EQ(rows[1].back(), ',');  // no ratio for the first size

  EXPECT_EQ(invoke({"bench", "--sizes", "100,50"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"bench", "--sizes", "10,abc"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"bench", "--sizes", "10", "--trials", "0"}).code, kExitInvalid);
}

}  // namespace
}  // namespace flowshop::cli
