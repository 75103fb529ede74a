#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const std::string bin = COHERE_BIN;
const std::string data = COHERE_DATA_DIR;

fs::path scratch()
{
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "cohere_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string &args)
{
  const std::string cmd = bin + " " + args + " > " + (scratch() / "stdout.txt").string() + " 2> " +
                          (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p)
{
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

nlohmann::json last_json() { return nlohmann::json::parse(slurp(scratch() / "stdout.txt")); }

std::string group(const std::string &name) { return data + "/" + name; }

} // namespace

TEST(Cli, AnalyzeAgl)
{
  ASSERT_EQ(run("analyze " + group("agl15_pairs.group")), 0);
  const auto j = last_json();
  EXPECT_EQ(j["rank"], 6);
  EXPECT_EQ(j["valencies"], nlohmann::json({1, 2, 2, 2, 2, 1}));
  EXPECT_EQ(j["flags"]["stratifiable"], false);
  EXPECT_EQ(j["flags"]["commutative"], false);
  EXPECT_EQ(j["flags"]["generously_transitive"], false);
  EXPECT_EQ(j["center_dimension"], 3);
  EXPECT_EQ(j["isotypic_traces"], nlohmann::json({1, 1, 8}));
  EXPECT_FALSE(j.contains("elapsed_ms"));
}

TEST(Cli, AnalyzeSl25)
{
  ASSERT_EQ(run("analyze " + group("sl25_24.group")), 0);
  const auto j = last_json();
  EXPECT_EQ(j["flags"]["stratifiable"], true);
  EXPECT_EQ(j["flags"]["commutative"], false);
  EXPECT_EQ(j["symmetrisation"]["valencies"], nlohmann::json({1, 2, 1, 10, 10}));
}

TEST(Cli, AnalyzeIsByteStable)
{
  ASSERT_EQ(run("analyze " + group("sl25_24.group") + " --seed 3"), 0);
  const auto first = slurp(scratch() / "stdout.txt");
  ASSERT_EQ(run("analyze " + group("sl25_24.group") + " --seed 3"), 0);
  EXPECT_EQ(slurp(scratch() / "stdout.txt"), first);
  ASSERT_EQ(run("analyze " + group("sl25_24.group") + " --timings"), 0);
  EXPECT_TRUE(last_json().contains("elapsed_ms"));
}

TEST(Cli, AnalyzeErrors)
{
  EXPECT_EQ(run("analyze " + group("nontransitive.group")), 3);
  std::ofstream(scratch() / "bad.group") << "degree 3\n(1,5)\n";
  EXPECT_EQ(run("analyze " + (scratch() / "bad.group").string()), 2);
  EXPECT_EQ(run("analyze " + (scratch() / "missing.group").string()), 2);
  EXPECT_EQ(run("frobnicate"), 2);
}

TEST(Cli, VerifyStoredWitness)
{
  EXPECT_EQ(run("verify " + group("a5_pairs.group") + " " + group("NonSpreadingWitness_10_1.txt") +
                " --level spreading --out " + (scratch() / "cert").string()),
            0);
  const auto cert = nlohmann::json::parse(slurp(scratch() / "cert" / "certificate.json"));
  EXPECT_EQ(cert["lambda"], "5");
  EXPECT_EQ(cert["mode"], "both");
  EXPECT_EQ(run("verify " + group("a5_pairs.group") + " " + group("NonSpreadingWitness_10_1.txt") +
                " --enum-cap 10"),
            0);
  EXPECT_EQ(last_json()["mode"], "identity");

  std::ofstream(scratch() / "mutated.txt") << "[ [ 1, 2, 7, 8, 10 ], [ 1, 5, 5, 6, 6, 7, 7, 8, 9 ] ]\n";
  EXPECT_EQ(run("verify " + group("a5_pairs.group") + " " + (scratch() / "mutated.txt").string()), 1);
  EXPECT_EQ(last_json()["reason"], "DivisibilityFails");
  EXPECT_EQ(run("verify " + group("a5_pairs.group") + " " + group("NonSpreadingWitness_10_1.txt") +
                " --level nonsense"),
            2);
}

TEST(Cli, ConicConstructAndVerify)
{
  const auto dir = scratch() / "conic";
  ASSERT_EQ(run("construct conic-external --q 5 --out " + dir.string()), 0);
  const auto j = last_json();
  EXPECT_EQ(j["points"], 15);
  EXPECT_EQ(j["clique_number"], 5);
  EXPECT_EQ(j["coclique_number"], 3);
  const auto g = (dir / "conic_external_5.group").string();
  EXPECT_EQ(run("verify " + g + " " + (dir / "conic_external_5_clique.txt").string() + " " +
                (dir / "conic_external_5_coclique.txt").string() + " --level separating"),
            0);
  std::string parts;
  for (int i = 1; i <= 5; ++i)
    parts += " " + (dir / ("conic_external_5_part_" + std::to_string(i) + ".txt")).string();
  EXPECT_EQ(run("verify " + g + " " + (dir / "conic_external_5_clique.txt").string() + parts +
                " --level synchronising"),
            0);
  EXPECT_EQ(run("construct conic-external --q 6 --out " + dir.string()), 2);
}

TEST(Cli, SearchRoundTrip)
{
  const auto dir = scratch() / "search";
  ASSERT_EQ(run("search " + group("a5_pairs.group") + " --out " + dir.string()), 0);
  const auto witness = dir / "NonSpreadingWitness_10_1.txt";
  EXPECT_EQ(slurp(witness), "[ [ 1, 2, 3, 4 ], [ 4, 4, 5, 6, 8 ] ]\n");
  EXPECT_TRUE(fs::exists(dir / "NonSpreadingWitness_10_1.json"));
  EXPECT_EQ(run("verify " + group("a5_pairs.group") + " " + witness.string()), 0);

  ASSERT_EQ(run("search " + group("s7_pairs.group") + " --threads 2 --out " + dir.string()), 0);
  EXPECT_EQ(run("verify " + group("s7_pairs.group") + " " + (dir / "NonSpreadingWitness_21_1.txt").string()), 0);

  EXPECT_EQ(run("search " + group("s5_natural.group") + " --out " + dir.string()), 1);
  ASSERT_EQ(run("construct hermitian-gq --out " + dir.string()), 0);
  EXPECT_EQ(run("search " + (dir / "hermitian_gq.group").string() + " --budget-nodes 1 --out " + dir.string()), 5);
  EXPECT_EQ(run("search " + group("a5_pairs.group") + " --level synchronising"), 2);
}

TEST(Cli, Probe)
{
  ASSERT_EQ(run("search " + group("a5_pairs.group") + " --probe"), 0);
  EXPECT_EQ(last_json()["critical"], "false");
}

TEST(Cli, OtherConstructions)
{
  const auto dir = scratch() / "build";
  ASSERT_EQ(run("construct two-subsets --n 7 --out " + dir.string()), 0);
  EXPECT_NE(slurp(dir / "two_subsets_7.group").find("degree 21"), std::string::npos);
  ASSERT_EQ(run("construct agl15-fixture --out " + dir.string()), 0);
  EXPECT_EQ(last_json()["ordering"], "lexicographic");
  EXPECT_EQ(run("verify " + (dir / "agl15_pairs.group").string() + " " + (dir / "agl15_u.txt").string() + " " +
                (dir / "agl15_w.txt").string() + " --level qi"),
            0);
  ASSERT_EQ(run("construct hermitian-gq --out " + dir.string()), 0);
  EXPECT_EQ(last_json()["points"], 165);
}
