#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace giant;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("giant_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

cli::ParseResult parse(std::vector<std::string> args) {
  std::vector<const char*> argv = {"giant"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::parse_args(static_cast<int>(argv.size()), argv.data());
}

int run_cli(std::vector<std::string> args) {
  const cli::ParseResult r = parse(std::move(args));
  if (!r.ok) return r.exit_code;
  return cli::run(r.config);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("sample is byte-identical across runs with the same seed") {
  TempDir dir;
  const std::string out1 = (dir.path / "a.edges").string();
  const std::string out2 = (dir.path / "b.edges").string();
  CHECK(run_cli({"sample", "--model", "contiguous", "--n", "1000", "--lambda", "2",
                 "--seed", "7", "-o", out1}) == 0);
  CHECK(run_cli({"sample", "--model", "contiguous", "--n", "1000", "--lambda", "2",
                 "--seed", "7", "-o", out2}) == 0);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(slurp(out1 + ".anatomy.json") == slurp(out2 + ".anatomy.json"));
  CHECK_FALSE(slurp(out1).empty());
}

TEST_CASE("different seeds give different samples") {
  TempDir dir;
  const std::string out1 = (dir.path / "a.edges").string();
  const std::string out2 = (dir.path / "b.edges").string();
  run_cli({"sample", "--n", "1000", "--lambda", "2", "--seed", "7", "-o", out1});
  run_cli({"sample", "--n", "1000", "--lambda", "2", "--seed", "8", "-o", out2});
  CHECK(slurp(out1) != slurp(out2));
}

TEST_CASE("anatomy of the theta fixture") {
  TempDir dir;
  const fs::path edges = dir.path / "theta.edges";
  {
    std::ofstream out(edges);
    out << "0 2\n1 2\n0 3\n1 3\n0 4\n4 5\n1 5\n";
  }
  const fs::path report = dir.path / "theta.json";
  CHECK(run_cli({"anatomy", "-i", edges.string(), "-o", report.string()}) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(report));
  CHECK(j["kernel_size"] == 2);
  CHECK(j["kernel_edges"] == 3);
  CHECK(j["core_size"] == 6);
  CHECK(j["longest_two_path"] == 3);
}

TEST_CASE("anatomy of a sampled file reproduces the sidecar") {
  TempDir dir;
  const std::string out = (dir.path / "g.edges").string();
  for (const char* model : {"contiguous", "direct", "cloning"}) {
    run_cli({"sample", "--model", model, "--n", "2000", "--lambda", "2", "--seed", "5",
             "-o", out});
    const fs::path report = dir.path / "re.json";
    CHECK(run_cli({"anatomy", "-i", out, "-o", report.string()}) == 0);
    CHECK(nlohmann::json::parse(slurp(report)) ==
          nlohmann::json::parse(slurp(out + ".anatomy.json")));
  }
}

TEST_CASE("anatomy emits CSV when asked") {
  TempDir dir;
  const std::string out = (dir.path / "g.edges").string();
  run_cli({"sample", "--n", "2000", "--lambda", "2", "--seed", "9", "-o", out});
  const fs::path csv = dir.path / "summary.csv";
  CHECK(run_cli({"anatomy", "-i", out, "--format", "csv", "-o", csv.string()}) == 0);
  std::istringstream in(slurp(csv));
  std::string header, row, extra;
  REQUIRE(std::getline(in, header));
  CHECK(header == std::string(kSummaryCsvHeader));
  REQUIRE(std::getline(in, row));
  CHECK_FALSE(std::getline(in, extra));
}

TEST_CASE("sample without an output path writes deterministically to stdout") {
  auto capture = [&] {
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    const int code = run_cli({"sample", "--model", "poisson-geometric", "--n", "500",
                              "--lambda", "2", "--seed", "11"});
    std::cout.rdbuf(old);
    REQUIRE(code == 0);
    return captured.str();
  };
  const std::string first = capture();
  CHECK(first == capture());
  CHECK(first.find("\"core_size\"") != std::string::npos);  // sidecar JSON follows
}

TEST_CASE("cola command writes one tau per replicate") {
  TempDir dir;
  const fs::path csv = dir.path / "tau.csv";
  CHECK(run_cli({"cola", "--n", "2000", "--lambda", "2", "--reps", "8", "--seed", "3",
                 "-o", csv.string()}) == 0);
  std::istringstream in(slurp(csv));
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "rep,tau");
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const double tau = std::stod(line.substr(line.find(',') + 1));
    CHECK(tau > 1.0);
    CHECK(tau < 2.0);
    ++rows;
  }
  CHECK(rows == 8);
}

TEST_CASE("theory command exits by verdict and can dump the dataset") {
  TempDir dir;
  const fs::path report = dir.path / "theory.json";
  const fs::path csv = dir.path / "dataset.csv";
  CHECK(run_cli({"theory", "--n", "5000", "--lambda", "2", "--reps", "60", "--seed",
                 "21", "-o", report.string(), "--dataset-out", csv.string()}) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(report));
  CHECK(j["verdict"] == "pass");
  std::istringstream in(slurp(csv));
  std::string header;
  std::getline(in, header);
  CHECK(header == std::string(kSummaryCsvHeader));
}

TEST_CASE("compare passes at matched lambda and fails the negative control") {
  TempDir dir;
  const fs::path report = dir.path / "cmp.json";
  CHECK(run_cli({"compare", "--n", "4000", "--lambda", "2", "--reps", "60", "--seed",
                 "1", "-o", report.string()}) == cli::kExitPass);
  CHECK(nlohmann::json::parse(slurp(report))["verdict"] == "pass");

  CHECK(run_cli({"compare", "--n", "4000", "--lambda", "2", "--lambda-b", "2.5",
                 "--reps", "60", "--seed", "1", "-o", report.string()}) == cli::kExitFail);
  CHECK(nlohmann::json::parse(slurp(report))["verdict"] == "fail");
}

TEST_CASE("usage errors exit with code 2") {
  // cloning output is inherently a multigraph
  CHECK(run_cli({"sample", "--model", "cloning", "--simple", "--n", "100",
                 "--lambda", "2"}) == cli::kExitUsage);
  CHECK(run_cli({"sample", "--n", "5", "--lambda", "2"}) == cli::kExitUsage);
  CHECK(run_cli({"theory", "--n", "100", "--lambda", "0.9"}) == cli::kExitUsage);
  CHECK(run_cli({"cola", "--n", "100", "--lambda", "2", "--reps", "0"}) == cli::kExitUsage);
  CHECK(run_cli({"sample", "--n", "100", "--lambda", "2", "--format", "json"}) ==
        cli::kExitUsage);

  const cli::ParseResult bad = parse({"no-such-command"});
  CHECK_FALSE(bad.ok);
  CHECK(bad.exit_code == cli::kExitUsage);
}

TEST_CASE("parity and model flags parse") {
  const cli::ParseResult r = parse({"sample", "--model", "poisson-geometric", "--parity",
                                    "selfloop", "--n", "100", "--lambda", "2"});
  REQUIRE(r.ok);
  CHECK(r.config.model == PipelineModel::kPoissonGeometric);
  CHECK(r.config.parity == ParityPolicy::kSelfLoop);

  const cli::ParseResult bad = parse({"sample", "--parity", "sideways", "--n", "100",
                                      "--lambda", "2"});
  CHECK_FALSE(bad.ok);
}
