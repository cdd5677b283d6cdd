#ifndef GIANT_TOOLS_CLI_HPP
#define GIANT_TOOLS_CLI_HPP

#include <cstdint>
#include <string>

#include "giant/stats.hpp"

namespace giant::cli {

enum class Command { kSample, kAnatomy, kCola, kTheory, kCompare };

enum class OutputFormat { kEdgeList, kCsv, kJson };

struct RunConfig {
  Command command = Command::kSample;
  std::int64_t n = 100000;
  double lambda = 2.0;
  std::uint64_t seed = 1;
  std::int64_t reps = 200;
  PipelineModel model = PipelineModel::kContiguous;
  bool simple = false;
  ParityPolicy parity = ParityPolicy::kReject;
  OutputFormat format = OutputFormat::kJson;
  bool format_given = false;
  std::string output;       // empty: stdout
  std::string input;        // anatomy: edge-list path
  std::string dataset_out;  // theory: optional CSV dump of the dataset
  int threads = 0;          // 0: GIANT_ANATOMY_THREADS or hardware default

  // compare only: side A is (model, simple), side B is its reference
  PipelineModel model_b = PipelineModel::kDirect;
  double lambda_b = 0.0;  // 0: same as lambda
  double significance = 0.001;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv into a RunConfig. On error (or --help) prints to the streams
/// and returns an exit code instead of a config.
struct ParseResult {
  bool ok = false;
  RunConfig config;
  int exit_code = kExitUsage;
};
ParseResult parse_args(int argc, const char* const* argv);

/// Executes one command; returns the process exit code.
int run(const RunConfig& config);

}  // namespace giant::cli

#endif  // GIANT_TOOLS_CLI_HPP
