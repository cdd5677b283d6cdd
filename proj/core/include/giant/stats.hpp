#ifndef GIANT_STATS_HPP
#define GIANT_STATS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "giant/contiguous.hpp"
#include "giant/graph_ops.hpp"
#include "giant/scalar.hpp"

namespace giant {

/// Scalar metric vector of one sampled graph.
struct AnatomySummary {
  std::int64_t giant_size = 0;
  std::int64_t core_size = 0;
  std::int64_t core_edges = 0;
  std::int64_t kernel_size = 0;
  std::int64_t kernel_edges = 0;
  std::int64_t n2 = 0;                       // degree-2 vertices in the core
  std::int64_t longest_two_path = 0;         // max kernel-edge path length
  std::int64_t max_tree_size = 0;
  std::int64_t disjoint_cycle_vertices = 0;

  friend bool operator==(const AnatomySummary&, const AnatomySummary&) = default;
};

AnatomySummary summarize(const Anatomy& anatomy);

/// Metric accessor by report name. Derived metrics:
///   giant_minus_core   = giant_size - core_size
///   core_excess_edges  = core_edges - core_size
std::int64_t metric_value(const AnatomySummary& s, std::string_view name);

/// The three jointly-Gaussian anatomy coordinates used for cross-pipeline
/// comparison: core size, pendant mass, core excess edges.
const std::vector<std::string>& gaussian_coordinate_metrics();

enum class PipelineModel { kContiguous, kDirect, kCloning, kPoissonConfig, kPoissonGeometric };

PipelineModel pipeline_model_from_name(std::string_view name);
std::string pipeline_model_name(PipelineModel model);

struct SamplerSpec {
  PipelineModel model = PipelineModel::kContiguous;
  ModelParams params;
  bool simple = false;                        // contiguous only
  ParityPolicy parity = ParityPolicy::kReject;
};

/// The stream used for replicate `rep` of a run keyed by base_seed.
RngStream replicate_stream(std::uint64_t base_seed, std::int64_t rep);

/// Worker cap: GIANT_ANATOMY_THREADS if set, else hardware concurrency.
int default_thread_count();

/// Runs the named pipeline `reps` times on independent replicate streams.
/// Output order is replicate order and does not depend on `threads`.
/// Sampler failures rethrow with the replicate index attached.
std::vector<AnatomySummary> monte_carlo(const SamplerSpec& spec, std::int64_t reps,
                                        std::uint64_t base_seed, int threads = 0);

/// Cut-off line stopping positions over `reps` independent cells.
std::vector<double> monte_carlo_tau(const ModelParams& params, std::int64_t reps,
                                    std::uint64_t base_seed, int threads = 0);

/// Two-sample Kolmogorov-Smirnov statistic sup|F_a - F_b|; the value is an
/// exact integer ratio (max |i*nb - j*na| / (na*nb)).
double ks_statistic(std::vector<double> a, std::vector<double> b);

/// Asymptotic two-sample KS p-value (Kolmogorov limiting distribution).
double ks_p_value(double statistic, std::size_t na, std::size_t nb);

/// One row of a check report; the JSON field names are frozen:
/// metric, mean_a, mean_b, std_a, std_b, z, ks, p, verdict.
struct MetricRow {
  std::string metric;
  double mean_a = 0.0;   // observed
  double mean_b = 0.0;   // prediction or second sample
  double std_a = 0.0;
  double std_b = 0.0;
  double z = 0.0;
  double ks = 0.0;
  double p = 1.0;
  bool pass = true;
};

/// Sample means of the anatomy metrics against the closed-form predictions,
/// plus the longest degree-2 path median against log_{1/mu} n within an
/// additive window (the window is an engineering choice, and is reported).
struct TheoryReport {
  ModelParams params;
  double z_threshold = 4.0;
  double path_window = 5.0;
  std::vector<MetricRow> rows;
  bool pass = true;
};
TheoryReport theory_check(const std::vector<AnatomySummary>& dataset,
                          const ModelParams& params, double z_threshold = 4.0,
                          double path_window = 5.0);

/// Per-metric two-sample KS and Welch z between two datasets; the overall
/// verdict Bonferroni-corrects the per-family significance across metrics.
/// Both datasets must have at least 50 rows.
struct ComparisonReport {
  double significance = 0.001;
  std::vector<MetricRow> rows;
  bool pass = true;
};
ComparisonReport compare(const std::vector<AnatomySummary>& a,
                         const std::vector<AnatomySummary>& b, double significance,
                         const std::vector<std::string>& metrics = gaussian_coordinate_metrics());

/// Exceedance frequencies of |tau - (lambda-mu)| >= gamma/sqrt(n) over a
/// gamma grid; requires at least 100 tau values.
struct TauReport {
  double mean_tau = 0.0;
  double std_tau = 0.0;
  double target = 0.0;            // lambda - mu
  std::vector<double> gamma_grid;
  std::vector<double> exceedance;  // aligned with gamma_grid
  bool monotone_nonincreasing = true;
  double gamma4_exceedance = 0.0;
  bool gamma4_ok = true;           // gamma=4 exceedance <= 0.05
};
TauReport tau_concentration(const std::vector<double>& taus, const ModelParams& params,
                            const std::vector<double>& gamma_grid);

/// Dataset persistence: fixed-header CSV, one summary per row.
extern const char kSummaryCsvHeader[];
void write_summaries_csv(const std::vector<AnatomySummary>& rows, std::ostream& out);
std::vector<AnatomySummary> read_summaries_csv(std::istream& in);

/// JSON emission (schema_version 1; row field names as in MetricRow).
std::string to_json(const AnatomySummary& s);
std::string to_json(const TheoryReport& r);
std::string to_json(const ComparisonReport& r);
std::string to_json(const TauReport& r);

}  // namespace giant

#endif  // GIANT_STATS_HPP
