#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "giant/cloning.hpp"
#include "giant/contiguous.hpp"
#include "giant/direct.hpp"
#include "giant/multigraph.hpp"
#include "giant/scalar.hpp"

namespace giant::cli {

namespace {

ParityPolicy parity_from_name(const std::string& name) {
  if (name == "reject") return ParityPolicy::kReject;
  if (name == "selfloop") return ParityPolicy::kSelfLoop;
  throw CLI::ValidationError("--parity must be reject or selfloop");
}

OutputFormat format_from_name(const std::string& name) {
  if (name == "edgelist") return OutputFormat::kEdgeList;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw CLI::ValidationError("--format must be edgelist, csv or json");
}

// Writes to the output path, or stdout when the path is empty.
void emit(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << payload;
}

MultiGraph sample_model_graph(const RunConfig& cfg, RngStream& stream,
                              const ModelParams& params) {
  switch (cfg.model) {
    case PipelineModel::kContiguous: {
      GiantOptions opt;
      opt.simple = cfg.simple;
      opt.parity = cfg.parity;
      return std::move(sample_giant(stream, params, opt).anatomy.giant);
    }
    case PipelineModel::kDirect:
      return sample_gnp(stream, static_cast<std::uint32_t>(params.n),
                        params.lambda / static_cast<double>(params.n));
    case PipelineModel::kCloning:
      return full_cloning_graph(stream, static_cast<std::uint32_t>(params.n),
                                params.lambda);
    case PipelineModel::kPoissonConfig:
      return std::move(sample_poisson_configuration(stream, params, cfg.parity).graph);
    case PipelineModel::kPoissonGeometric:
      return std::move(sample_poisson_geometric(stream, params, cfg.parity).core);
  }
  throw std::logic_error("sample_model_graph: unreachable");
}

int run_sample(const RunConfig& cfg) {
  const ModelParams params = make_params(cfg.n, cfg.lambda);
  RngStream stream = replicate_stream(cfg.seed, 0);
  const MultiGraph graph = sample_model_graph(cfg, stream, params);
  const std::string sidecar = to_json(summarize(extract_anatomy(graph)));

  std::ostringstream edges;
  write_edge_list(graph, edges);
  if (cfg.output.empty()) {
    std::cout << edges.str() << sidecar << '\n';
  } else {
    emit(cfg.output, edges.str());
    emit(cfg.output + ".anatomy.json", sidecar + "\n");
  }
  return kExitPass;
}

int run_anatomy(const RunConfig& cfg) {
  const MultiGraph graph = read_edge_list_file(cfg.input);
  const AnatomySummary summary = summarize(extract_anatomy(graph));
  if (cfg.format == OutputFormat::kCsv) {
    std::ostringstream out;
    write_summaries_csv({summary}, out);
    emit(cfg.output, out.str());
  } else {
    emit(cfg.output, to_json(summary) + "\n");
  }
  return kExitPass;
}

int run_cola(const RunConfig& cfg) {
  const ModelParams params = make_params(cfg.n, cfg.lambda);
  const std::vector<double> taus =
      monte_carlo_tau(params, cfg.reps, cfg.seed, cfg.threads);
  std::ostringstream out;
  out << "rep,tau\n";
  out.precision(17);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    out << i << ',' << taus[i] << '\n';
  }
  emit(cfg.output, out.str());
  return kExitPass;
}

int run_theory(const RunConfig& cfg) {
  const ModelParams params = make_params(cfg.n, cfg.lambda);
  SamplerSpec spec{cfg.model, params, cfg.simple, cfg.parity};
  const std::vector<AnatomySummary> dataset =
      monte_carlo(spec, cfg.reps, cfg.seed, cfg.threads);
  if (!cfg.dataset_out.empty()) {
    std::ofstream csv(cfg.dataset_out);
    if (!csv) throw std::runtime_error("cannot write: " + cfg.dataset_out);
    write_summaries_csv(dataset, csv);
  }
  const TheoryReport report = theory_check(dataset, params);
  emit(cfg.output, to_json(report) + "\n");
  return report.pass ? kExitPass : kExitFail;
}

int run_compare(const RunConfig& cfg) {
  const ModelParams params_a = make_params(cfg.n, cfg.lambda);
  const ModelParams params_b =
      make_params(cfg.n, cfg.lambda_b > 0.0 ? cfg.lambda_b : cfg.lambda);
  SamplerSpec spec_a{cfg.model, params_a, cfg.simple, cfg.parity};
  SamplerSpec spec_b{cfg.model_b, params_b, false, cfg.parity};
  const std::vector<AnatomySummary> a =
      monte_carlo(spec_a, cfg.reps, cfg.seed, cfg.threads);
  // Side B replicates get the stream ids after side A's, keeping the two
  // datasets independent under one seed.
  const std::vector<AnatomySummary> b = monte_carlo(
      spec_b, cfg.reps, cfg.seed + static_cast<std::uint64_t>(cfg.reps), cfg.threads);
  const ComparisonReport report = compare(a, b, cfg.significance);
  emit(cfg.output, to_json(report) + "\n");
  return report.pass ? kExitPass : kExitFail;
}

}  // namespace

ParseResult parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string model = "contiguous";
  std::string model_b = "direct";
  std::string parity = "reject";
  std::string format;

  CLI::App app{"giant: sampling and cross-validation of supercritical giant components"};
  app.require_subcommand(1);

  auto add_model_params = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "vertex count of the underlying graph");
    sub->add_option("--lambda", cfg.lambda, "edge density (> 1)");
    sub->add_option("--seed", cfg.seed, "base seed");
    sub->add_option("--threads", cfg.threads, "worker cap (0: GIANT_ANATOMY_THREADS or auto)");
  };

  CLI::App* sample = app.add_subcommand("sample", "emit one sampled graph plus an anatomy sidecar");
  add_model_params(sample);
  sample->add_option("--model", model, "contiguous|direct|cloning|poisson-config|poisson-geometric");
  sample->add_flag("--simple", cfg.simple, "condition the contiguous model on simplicity");
  sample->add_option("--parity", parity, "reject|selfloop");
  sample->add_option("-o,--output", cfg.output, "edge-list path (sidecar gets .anatomy.json)");
  sample->add_option("--format", format, "edgelist (default)");

  CLI::App* anatomy = app.add_subcommand("anatomy", "summarize an edge-list file");
  anatomy->add_option("-i,--input", cfg.input, "edge-list path")->required();
  anatomy->add_option("-o,--output", cfg.output, "output path");
  anatomy->add_option("--format", format, "json (default) or csv");

  CLI::App* colacmd = app.add_subcommand("cola", "cut-off line stopping positions as CSV");
  add_model_params(colacmd);
  colacmd->add_option("--reps", cfg.reps, "number of runs");
  colacmd->add_option("-o,--output", cfg.output, "output path");

  CLI::App* theory = app.add_subcommand("theory", "Monte-Carlo means against closed-form predictions");
  add_model_params(theory);
  theory->add_option("--model", model, "pipeline to sample");
  theory->add_flag("--simple", cfg.simple, "condition the contiguous model on simplicity");
  theory->add_option("--parity", parity, "reject|selfloop");
  theory->add_option("--reps", cfg.reps, "number of replicates");
  theory->add_option("--dataset-out", cfg.dataset_out, "also dump the dataset CSV here");
  theory->add_option("-o,--output", cfg.output, "report path");

  bool multigraph_a = false;
  CLI::App* comparecmd = app.add_subcommand("compare", "two-pipeline distribution comparison");
  add_model_params(comparecmd);
  comparecmd->add_option("--model-a", model, "side A (default contiguous, simple)");
  comparecmd->add_option("--model-b", model_b, "side B (default direct)");
  comparecmd->add_flag("--multigraph-a", multigraph_a, "side A without simplicity conditioning");
  comparecmd->add_option("--lambda-b", cfg.lambda_b, "side B density (default: --lambda)");
  comparecmd->add_option("--reps", cfg.reps, "replicates per side");
  comparecmd->add_option("--significance", cfg.significance, "family significance");
  comparecmd->add_option("-o,--output", cfg.output, "report path");

  ParseResult result;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e) == 0 ? kExitPass : kExitUsage;
    return result;
  }

  try {
    if (sample->parsed()) cfg.command = Command::kSample;
    if (anatomy->parsed()) cfg.command = Command::kAnatomy;
    if (colacmd->parsed()) cfg.command = Command::kCola;
    if (theory->parsed()) cfg.command = Command::kTheory;
    if (comparecmd->parsed()) {
      cfg.command = Command::kCompare;
      cfg.simple = !multigraph_a;  // side A defaults to the simplicity-conditioned model
      cfg.model_b = pipeline_model_from_name(model_b);
    }
    cfg.model = pipeline_model_from_name(model);
    cfg.parity = parity_from_name(parity);
    if (!format.empty()) {
      cfg.format = format_from_name(format);
      cfg.format_given = true;
    } else {
      cfg.format = cfg.command == Command::kSample ? OutputFormat::kEdgeList
                   : cfg.command == Command::kCola ? OutputFormat::kCsv
                                                   : OutputFormat::kJson;
    }

    // RunConfig invariants and per-command flag compatibility.
    if (cfg.command != Command::kAnatomy) {
      if (!(cfg.lambda > 1.0)) throw std::invalid_argument("--lambda must exceed 1");
      if (cfg.n < 10) throw std::invalid_argument("--n must be at least 10");
      if (cfg.reps < 1) throw std::invalid_argument("--reps must be at least 1");
    }
    if (cfg.simple && cfg.command != Command::kCompare &&
        cfg.model != PipelineModel::kContiguous) {
      throw std::invalid_argument(
          "--simple applies only to the contiguous model; the " +
          pipeline_model_name(cfg.model) + " output is inherently a multigraph");
    }
    if (cfg.command == Command::kCompare && cfg.model != PipelineModel::kContiguous &&
        cfg.simple) {
      throw std::invalid_argument("--model-a " + pipeline_model_name(cfg.model) +
                                  " cannot be simplicity-conditioned; pass --multigraph-a");
    }
    if (cfg.command == Command::kSample && cfg.format != OutputFormat::kEdgeList) {
      throw std::invalid_argument("sample emits edge lists; drop --format");
    }
    if (cfg.command == Command::kCola && cfg.format != OutputFormat::kCsv) {
      throw std::invalid_argument("cola emits CSV; drop --format");
    }
    if ((cfg.command == Command::kTheory || cfg.command == Command::kCompare) &&
        cfg.format != OutputFormat::kJson) {
      throw std::invalid_argument("reports are JSON; drop --format");
    }
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    result.exit_code = kExitUsage;
    return result;
  }

  result.ok = true;
  result.config = cfg;
  return result;
}

int run(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case Command::kSample: return run_sample(cfg);
      case Command::kAnatomy: return run_anatomy(cfg);
      case Command::kCola: return run_cola(cfg);
      case Command::kTheory: return run_theory(cfg);
      case Command::kCompare: return run_compare(cfg);
    }
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace giant::cli
