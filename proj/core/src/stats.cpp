#include "giant/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "giant/cloning.hpp"
#include "giant/direct.hpp"
#include "giant/multigraph.hpp"

namespace giant {

namespace {

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double stddev_of(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double s = 0.0;
  for (double x : xs) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

double median_of(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

std::vector<double> metric_column(const std::vector<AnatomySummary>& rows,
                                  std::string_view name) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(static_cast<double>(metric_value(r, name)));
  return out;
}

// Exact integer moments of a metric column; reordering the dataset cannot
// change the resulting mean or standard deviation by even an ulp.
struct ColumnStats {
  double mean = 0.0;
  double stddev = 0.0;
};

ColumnStats column_stats(const std::vector<AnatomySummary>& rows, std::string_view name) {
  __int128 sum = 0;
  __int128 sum2 = 0;
  for (const auto& r : rows) {
    const std::int64_t x = metric_value(r, name);
    sum += x;
    sum2 += static_cast<__int128>(x) * x;
  }
  const double n = static_cast<double>(rows.size());
  ColumnStats out;
  out.mean = static_cast<double>(sum) / n;
  if (rows.size() >= 2) {
    const double centered =
        static_cast<double>(sum2) - static_cast<double>(sum) * out.mean;
    out.stddev = std::sqrt(std::max(0.0, centered / (n - 1.0)));
  }
  return out;
}

}  // namespace

AnatomySummary summarize(const Anatomy& anatomy) {
  AnatomySummary s;
  s.giant_size = anatomy.giant.vertex_count;
  s.core_size = anatomy.core.vertex_count;
  s.core_edges = anatomy.core.edge_count();
  s.kernel_size = anatomy.kernel.vertex_count;
  s.kernel_edges = anatomy.kernel.edge_count();
  for (std::uint32_t d : degrees(anatomy.core)) {
    if (d == 2) ++s.n2;
  }
  for (std::int64_t len : anatomy.path_lengths) {
    s.longest_two_path = std::max(s.longest_two_path, len);
  }
  for (std::int64_t t : anatomy.tree_sizes) {
    s.max_tree_size = std::max(s.max_tree_size, t);
  }
  for (std::int64_t c : anatomy.disjoint_cycles) s.disjoint_cycle_vertices += c;
  return s;
}

std::int64_t metric_value(const AnatomySummary& s, std::string_view name) {
  if (name == "giant_size") return s.giant_size;
  if (name == "core_size") return s.core_size;
  if (name == "core_edges") return s.core_edges;
  if (name == "kernel_size") return s.kernel_size;
  if (name == "kernel_edges") return s.kernel_edges;
  if (name == "n2") return s.n2;
  if (name == "longest_two_path") return s.longest_two_path;
  if (name == "max_tree_size") return s.max_tree_size;
  if (name == "disjoint_cycle_vertices") return s.disjoint_cycle_vertices;
  if (name == "giant_minus_core") return s.giant_size - s.core_size;
  if (name == "core_excess_edges") return s.core_edges - s.core_size;
  throw std::invalid_argument("unknown metric: " + std::string(name));
}

const std::vector<std::string>& gaussian_coordinate_metrics() {
  static const std::vector<std::string> kMetrics = {"core_size", "giant_minus_core",
                                                    "core_excess_edges"};
  return kMetrics;
}

PipelineModel pipeline_model_from_name(std::string_view name) {
  if (name == "contiguous") return PipelineModel::kContiguous;
  if (name == "direct") return PipelineModel::kDirect;
  if (name == "cloning") return PipelineModel::kCloning;
  if (name == "poisson-config") return PipelineModel::kPoissonConfig;
  if (name == "poisson-geometric") return PipelineModel::kPoissonGeometric;
  throw std::invalid_argument("unknown model: " + std::string(name));
}

std::string pipeline_model_name(PipelineModel model) {
  switch (model) {
    case PipelineModel::kContiguous: return "contiguous";
    case PipelineModel::kDirect: return "direct";
    case PipelineModel::kCloning: return "cloning";
    case PipelineModel::kPoissonConfig: return "poisson-config";
    case PipelineModel::kPoissonGeometric: return "poisson-geometric";
  }
  return "unknown";
}

RngStream replicate_stream(std::uint64_t base_seed, std::int64_t rep) {
  return RngStream(base_seed, base_seed + static_cast<std::uint64_t>(rep));
}

int default_thread_count() {
  if (const char* env = std::getenv("GIANT_ANATOMY_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

AnatomySummary run_one(const SamplerSpec& spec, RngStream& stream) {
  switch (spec.model) {
    case PipelineModel::kContiguous: {
      GiantOptions opt;
      opt.simple = spec.simple;
      opt.parity = spec.parity;
      return summarize(sample_giant(stream, spec.params, opt).anatomy);
    }
    case PipelineModel::kDirect: {
      const double p = spec.params.lambda / static_cast<double>(spec.params.n);
      MultiGraph g = sample_gnp(stream, static_cast<std::uint32_t>(spec.params.n), p);
      return summarize(extract_anatomy(g));
    }
    case PipelineModel::kCloning: {
      MultiGraph g = full_cloning_graph(stream, static_cast<std::uint32_t>(spec.params.n),
                                        spec.params.lambda);
      return summarize(extract_anatomy(g));
    }
    case PipelineModel::kPoissonConfig: {
      PoissonConfigSample s = sample_poisson_configuration(stream, spec.params, spec.parity);
      // All degrees are >= 2, so the sampled graph is its own 2-core.
      Anatomy a;
      KernelResult k = contract_kernel(s.graph);
      a.giant = s.graph;
      a.core = std::move(s.graph);
      a.kernel = std::move(k.kernel);
      a.path_lengths = std::move(k.path_lengths);
      a.disjoint_cycles = std::move(k.disjoint_cycles);
      a.tree_sizes.assign(a.core.vertex_count, 1);
      return summarize(a);
    }
    case PipelineModel::kPoissonGeometric: {
      PoissonGeometricSample s = sample_poisson_geometric(stream, spec.params, spec.parity);
      Anatomy a;
      a.giant = s.core;
      a.core = std::move(s.core);
      a.kernel = std::move(s.kernel);
      a.path_lengths = std::move(s.path_lengths);
      a.tree_sizes.assign(a.core.vertex_count, 1);
      return summarize(a);
    }
  }
  throw std::logic_error("run_one: unreachable");
}

}  // namespace

std::vector<AnatomySummary> monte_carlo(const SamplerSpec& spec, std::int64_t reps,
                                        std::uint64_t base_seed, int threads) {
  if (reps < 1) throw std::invalid_argument("monte_carlo: reps must be >= 1");
  const int workers = std::max(
      1, std::min<int>(threads > 0 ? threads : default_thread_count(),
                       static_cast<int>(std::min<std::int64_t>(reps, 1 << 12))));

  std::vector<AnatomySummary> out(static_cast<std::size_t>(reps));
  std::atomic<std::int64_t> next{0};
  std::mutex err_mutex;
  std::int64_t err_rep = -1;
  std::string err_what;

  auto worker = [&] {
    for (;;) {
      const std::int64_t rep = next.fetch_add(1);
      if (rep >= reps) return;
      try {
        RngStream stream = replicate_stream(base_seed, rep);
        out[static_cast<std::size_t>(rep)] = run_one(spec, stream);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (err_rep < 0 || rep < err_rep) {
          err_rep = rep;
          err_what = e.what();
        }
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (err_rep >= 0) {
    throw std::runtime_error("monte_carlo: replicate " + std::to_string(err_rep) +
                             " failed: " + err_what);
  }
  return out;
}

std::vector<double> monte_carlo_tau(const ModelParams& params, std::int64_t reps,
                                    std::uint64_t base_seed, int threads) {
  if (reps < 1) throw std::invalid_argument("monte_carlo_tau: reps must be >= 1");
  const int workers =
      std::max(1, std::min<int>(threads > 0 ? threads : default_thread_count(),
                                static_cast<int>(std::min<std::int64_t>(reps, 1 << 12))));
  std::vector<double> out(static_cast<std::size_t>(reps));
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t rep = next.fetch_add(1);
      if (rep >= reps) return;
      RngStream stream = replicate_stream(base_seed, rep);
      const PoissonCell cell =
          sample_cell(stream, static_cast<std::uint32_t>(params.n), params.lambda);
      out[static_cast<std::size_t>(rep)] = cola(cell).tau;
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const std::int64_t na = static_cast<std::int64_t>(a.size());
  const std::int64_t nb = static_cast<std::int64_t>(b.size());
  std::size_t i = 0, j = 0;
  std::int64_t best = 0;
  while (i < a.size() || j < b.size()) {
    double x;
    if (j >= b.size() || (i < a.size() && a[i] <= b[j])) {
      x = a[i];
    } else {
      x = b[j];
    }
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    const std::int64_t num =
        std::abs(static_cast<std::int64_t>(i) * nb - static_cast<std::int64_t>(j) * na);
    best = std::max(best, num);
  }
  return static_cast<double>(best) / static_cast<double>(na * nb);
}

namespace {

// Kolmogorov limiting distribution Q(z) = 2 sum (-1)^{j-1} exp(-2 j^2 z^2);
// series constants as in ROOT's KolmogorovProb.
double kolmogorov_prob(double z) {
  const double fj[4] = {-2, -8, -18, -32};
  const double w = 2.50662827;
  const double c1 = -1.2337005501361697;   // -pi^2/8
  const double c2 = -11.103304951225528;   // 9*c1
  const double c3 = -30.842513753404244;   // 25*c1
  const double u = std::abs(z);
  if (u < 0.2) return 1.0;
  if (u < 0.755) {
    const double v = 1.0 / (u * u);
    return 1.0 - w * (std::exp(c1 * v) + std::exp(c2 * v) + std::exp(c3 * v)) / u;
  }
  if (u < 6.8116) {
    double r[4] = {0, 0, 0, 0};
    const double v = u * u;
    const int maxj = std::max(1, static_cast<int>(std::lround(3.0 / u)));
    for (int j = 0; j < maxj; ++j) r[j] = std::exp(fj[j] * v);
    return 2.0 * (r[0] - r[1] + r[2] - r[3]);
  }
  return 0.0;
}

}  // namespace

double ks_p_value(double statistic, std::size_t na, std::size_t nb) {
  const double ne = static_cast<double>(na) * static_cast<double>(nb) /
                    (static_cast<double>(na) + static_cast<double>(nb));
  const double p = kolmogorov_prob(statistic * std::sqrt(ne));
  return std::clamp(p, 0.0, 1.0);
}

TheoryReport theory_check(const std::vector<AnatomySummary>& dataset,
                          const ModelParams& params, double z_threshold,
                          double path_window) {
  if (dataset.empty()) throw std::invalid_argument("theory_check: empty dataset");
  const MomentVector m = moments(params);
  const double reps = static_cast<double>(dataset.size());

  TheoryReport report;
  report.params = params;
  report.z_threshold = z_threshold;
  report.path_window = path_window;

  const std::pair<std::string, double> predictions[] = {
      {"core_size", m.core_vertices},
      {"giant_minus_core", m.b2 * static_cast<double>(params.n)},
      {"core_excess_edges", m.b3 * static_cast<double>(params.n)},
      {"kernel_size", m.kernel_vertices},
      {"kernel_edges", m.kernel_edges},
      {"core_edges", m.core_edges},
  };
  for (const auto& [name, predicted] : predictions) {
    const ColumnStats stats = column_stats(dataset, name);
    MetricRow row;
    row.metric = name;
    row.mean_a = stats.mean;
    row.mean_b = predicted;
    row.std_a = stats.stddev;
    const double se = row.std_a / std::sqrt(reps);
    row.z = se > 0.0 ? (row.mean_a - row.mean_b) / se
                     : (row.mean_a == row.mean_b ? 0.0 : 1e18);
    row.pass = std::abs(row.z) <= z_threshold;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }

  // Longest degree-2 path: the prediction is log_{1/mu} n up to an additive
  // O(1) term, so the check is a window on the median, not a z-test.
  {
    MetricRow row;
    row.metric = "longest_two_path_median";
    row.mean_a = median_of(metric_column(dataset, "longest_two_path"));
    row.mean_b = std::log(static_cast<double>(params.n)) / std::log(1.0 / params.mu);
    row.std_a = column_stats(dataset, "longest_two_path").stddev;
    row.std_b = path_window;
    row.z = row.mean_a - row.mean_b;  // additive deviation, not a z-score
    row.pass = std::abs(row.z) <= path_window;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

ComparisonReport compare(const std::vector<AnatomySummary>& a,
                         const std::vector<AnatomySummary>& b, double significance,
                         const std::vector<std::string>& metrics) {
  if (a.size() < 50 || b.size() < 50) {
    throw std::invalid_argument("compare: both datasets need at least 50 rows");
  }
  if (metrics.empty()) throw std::invalid_argument("compare: no metrics");

  ComparisonReport report;
  report.significance = significance;
  const double per_metric = significance / static_cast<double>(metrics.size());
  for (const auto& name : metrics) {
    const ColumnStats sa = column_stats(a, name);
    const ColumnStats sb = column_stats(b, name);
    MetricRow row;
    row.metric = name;
    row.mean_a = sa.mean;
    row.mean_b = sb.mean;
    row.std_a = sa.stddev;
    row.std_b = sb.stddev;
    const double denom =
        std::sqrt(row.std_a * row.std_a / static_cast<double>(a.size()) +
                  row.std_b * row.std_b / static_cast<double>(b.size()));
    row.z = denom > 0.0 ? (row.mean_a - row.mean_b) / denom : 0.0;
    row.ks = ks_statistic(metric_column(a, name), metric_column(b, name));
    row.p = ks_p_value(row.ks, a.size(), b.size());
    row.pass = row.p > per_metric;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

TauReport tau_concentration(const std::vector<double>& taus, const ModelParams& params,
                            const std::vector<double>& gamma_grid) {
  if (taus.size() < 100) {
    throw std::invalid_argument("tau_concentration: need at least 100 tau values");
  }
  TauReport report;
  report.target = params.lambda0;
  report.mean_tau = mean_of(taus);
  report.std_tau = stddev_of(taus, report.mean_tau);
  report.gamma_grid = gamma_grid;
  const double scale = 1.0 / std::sqrt(static_cast<double>(params.n));
  double prev = 1.0;
  for (std::size_t i = 0; i < gamma_grid.size(); ++i) {
    std::int64_t count = 0;
    for (double t : taus) {
      if (std::abs(t - params.lambda0) >= gamma_grid[i] * scale) ++count;
    }
    const double freq = static_cast<double>(count) / static_cast<double>(taus.size());
    report.exceedance.push_back(freq);
    if (i > 0 && freq > prev) report.monotone_nonincreasing = false;
    prev = freq;
  }
  {
    std::int64_t count = 0;
    for (double t : taus) {
      if (std::abs(t - params.lambda0) >= 4.0 * scale) ++count;
    }
    report.gamma4_exceedance = static_cast<double>(count) / static_cast<double>(taus.size());
    report.gamma4_ok = report.gamma4_exceedance <= 0.05;
  }
  return report;
}

const char kSummaryCsvHeader[] =
    "giant_size,core_size,core_edges,kernel_size,kernel_edges,n2,"
    "longest_two_path,max_tree_size,disjoint_cycle_vertices";

void write_summaries_csv(const std::vector<AnatomySummary>& rows, std::ostream& out) {
  out << kSummaryCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.giant_size << ',' << r.core_size << ',' << r.core_edges << ','
        << r.kernel_size << ',' << r.kernel_edges << ',' << r.n2 << ','
        << r.longest_two_path << ',' << r.max_tree_size << ','
        << r.disjoint_cycle_vertices << '\n';
  }
}

std::vector<AnatomySummary> read_summaries_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSummaryCsvHeader) {
    throw std::runtime_error("read_summaries_csv: bad header");
  }
  std::vector<AnatomySummary> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    AnatomySummary r;
    std::int64_t* fields[] = {&r.giant_size,       &r.core_size,  &r.core_edges,
                              &r.kernel_size,      &r.kernel_edges, &r.n2,
                              &r.longest_two_path, &r.max_tree_size,
                              &r.disjoint_cycle_vertices};
    std::istringstream ls(line);
    std::string cell;
    for (auto* f : fields) {
      if (!std::getline(ls, cell, ',')) {
        throw std::runtime_error("read_summaries_csv: short row");
      }
      *f = std::stoll(cell);
    }
    rows.push_back(r);
  }
  return rows;
}

namespace {

nlohmann::json row_json(const MetricRow& row) {
  return {{"metric", row.metric}, {"mean_a", row.mean_a}, {"mean_b", row.mean_b},
          {"std_a", row.std_a},   {"std_b", row.std_b},   {"z", row.z},
          {"ks", row.ks},         {"p", row.p},
          {"verdict", row.pass ? "pass" : "fail"}};
}

}  // namespace

std::string to_json(const AnatomySummary& s) {
  nlohmann::json j = {{"schema_version", 1},
                      {"giant_size", s.giant_size},
                      {"core_size", s.core_size},
                      {"core_edges", s.core_edges},
                      {"kernel_size", s.kernel_size},
                      {"kernel_edges", s.kernel_edges},
                      {"n2", s.n2},
                      {"longest_two_path", s.longest_two_path},
                      {"max_tree_size", s.max_tree_size},
                      {"disjoint_cycle_vertices", s.disjoint_cycle_vertices}};
  return j.dump(2);
}

std::string to_json(const TheoryReport& r) {
  nlohmann::json j = {{"schema_version", 1},
                      {"kind", "theory_check"},
                      {"n", r.params.n},
                      {"lambda", r.params.lambda},
                      {"mu", r.params.mu},
                      {"z_threshold", r.z_threshold},
                      {"path_window", r.path_window},
                      {"verdict", r.pass ? "pass" : "fail"}};
  j["metrics"] = nlohmann::json::array();
  for (const auto& row : r.rows) j["metrics"].push_back(row_json(row));
  return j.dump(2);
}

std::string to_json(const ComparisonReport& r) {
  nlohmann::json j = {{"schema_version", 1},
                      {"kind", "compare"},
                      {"significance", r.significance},
                      {"verdict", r.pass ? "pass" : "fail"}};
  j["metrics"] = nlohmann::json::array();
  for (const auto& row : r.rows) j["metrics"].push_back(row_json(row));
  return j.dump(2);
}

std::string to_json(const TauReport& r) {
  nlohmann::json j = {{"schema_version", 1},
                      {"kind", "tau_concentration"},
                      {"mean_tau", r.mean_tau},
                      {"std_tau", r.std_tau},
                      {"target", r.target},
                      {"gamma_grid", r.gamma_grid},
                      {"exceedance", r.exceedance},
                      {"monotone_nonincreasing", r.monotone_nonincreasing},
                      {"gamma4_exceedance", r.gamma4_exceedance},
                      {"verdict", r.gamma4_ok ? "pass" : "fail"}};
  return j.dump(2);
}

}  // namespace giant
