#include "giant/contiguous.hpp"

#include <cmath>
#include <stdexcept>

#include "giant/dists.hpp"

namespace giant {

namespace {

void fill_counts(DegreeDraw& draw) {
  draw.counts.clear();
  for (std::uint32_t d : draw.degree_of) {
    if (d >= draw.counts.size()) draw.counts.resize(d + 1, 0);
    ++draw.counts[d];
  }
}

// Vertex chosen with probability proportional to degree among vertices with
// degree >= threshold.
std::int64_t pick_proportional_to_degree(RngStream& stream,
                                         const std::vector<std::uint32_t>& deg,
                                         int threshold, std::uint64_t total) {
  std::uint64_t r = stream.next_below(total);
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] < static_cast<std::uint32_t>(threshold)) continue;
    if (r < deg[v]) return static_cast<std::int64_t>(v);
    r -= deg[v];
  }
  throw std::logic_error("pick_proportional_to_degree: ran past total");
}

}  // namespace

DegreeDraw draw_degrees(RngStream& stream, const ModelParams& params,
                        int threshold, ParityPolicy parity) {
  if (threshold != 2 && threshold != 3) {
    throw std::invalid_argument("draw_degrees: threshold must be 2 or 3");
  }
  DegreeDraw draw;
  // A nonpositive rate draw is possible only at tiny n; redraw and count it.
  do {
    draw.lambda_draw = sample_gaussian(stream, params.lambda0,
                                       1.0 / static_cast<double>(params.n));
    if (draw.lambda_draw <= 0.0) ++draw.parity_fixups;
  } while (draw.lambda_draw <= 0.0);

  const detail::PoissonCdf cdf(draw.lambda_draw);
  const auto thr = static_cast<std::uint32_t>(threshold);
  draw.degree_of.resize(static_cast<std::size_t>(params.n));
  for (;;) {
    std::uint64_t sum = 0;
    for (auto& d : draw.degree_of) {
      d = static_cast<std::uint32_t>(cdf.sample(stream));
      if (d >= thr) sum += d;
    }
    if (sum % 2 == 0) break;
    if (parity == ParityPolicy::kSelfLoop) {
      draw.selfloop_vertex =
          pick_proportional_to_degree(stream, draw.degree_of, threshold, sum);
      ++draw.parity_fixups;
      break;
    }
    // kReject: the degree vector is redrawn conditioned on the realized rate.
    ++draw.parity_fixups;
  }
  fill_counts(draw);
  return draw;
}

namespace {

// Pairing restricted to vertices at or above the threshold. The self-loop
// parity vertex (if any) contributes degree-1 stubs plus an explicit loop.
struct RestrictedPairing {
  MultiGraph graph;
  std::vector<VertexId> orig_vertex;
};

RestrictedPairing pair_thresholded(RngStream& stream, const DegreeDraw& draw,
                                   int threshold) {
  RestrictedPairing out;
  std::vector<std::uint32_t> stub_degrees;
  std::int64_t loop_local = -1;
  for (std::size_t v = 0; v < draw.degree_of.size(); ++v) {
    const std::uint32_t d = draw.degree_of[v];
    if (d < static_cast<std::uint32_t>(threshold)) continue;
    if (static_cast<std::int64_t>(v) == draw.selfloop_vertex) {
      loop_local = static_cast<std::int64_t>(out.orig_vertex.size());
      stub_degrees.push_back(d - 1);
    } else {
      stub_degrees.push_back(d);
    }
    out.orig_vertex.push_back(static_cast<VertexId>(v));
  }
  out.graph = configuration_pairing(stream, stub_degrees);
  if (loop_local >= 0) {
    out.graph.add_edge(static_cast<VertexId>(loop_local),
                       static_cast<VertexId>(loop_local));
  }
  return out;
}

}  // namespace

PoissonConfigSample sample_poisson_configuration(RngStream& stream,
                                                 const ModelParams& params,
                                                 ParityPolicy parity) {
  PoissonConfigSample out;
  out.draw = draw_degrees(stream, params, 2, parity);
  RestrictedPairing pairing = pair_thresholded(stream, out.draw, 2);
  out.graph = std::move(pairing.graph);
  out.orig_vertex = std::move(pairing.orig_vertex);
  return out;
}

PoissonGeometricSample sample_poisson_geometric(RngStream& stream,
                                                const ModelParams& params,
                                                ParityPolicy parity) {
  PoissonGeometricSample out;
  out.draw = draw_degrees(stream, params, 3, parity);
  RestrictedPairing pairing = pair_thresholded(stream, out.draw, 3);
  out.kernel = std::move(pairing.graph);
  out.kernel_orig_vertex = std::move(pairing.orig_vertex);
  SubdivideResult sub = subdivide_edges(stream, out.kernel, params.mu);
  out.core = std::move(sub.core);
  out.path_lengths = std::move(sub.path_lengths);
  return out;
}

GiantSample sample_giant(RngStream& stream, const ModelParams& params,
                         const GiantOptions& options) {
  for (int attempt = 1; attempt <= options.max_resample; ++attempt) {
    PoissonGeometricSample pg = sample_poisson_geometric(stream, params, options.parity);
    AttachResult attached = attach_trees(stream, pg.core, params.mu, options.tree_cap);
    if (options.simple && !is_simple(attached.graph)) continue;

    GiantSample out;
    out.anatomy.giant = std::move(attached.graph);
    out.anatomy.core = std::move(pg.core);
    out.anatomy.kernel = std::move(pg.kernel);
    out.anatomy.path_lengths = std::move(pg.path_lengths);
    out.anatomy.disjoint_cycles = {};  // kernel degrees >= 3 leave no pure cycles
    out.anatomy.tree_sizes = std::move(attached.tree_sizes);
    out.lambda_draw = pg.draw.lambda_draw;
    out.parity_fixups = pg.draw.parity_fixups;
    out.attempts = attempt;
    return out;
  }
  throw std::runtime_error(
      "sample_giant: simplicity rejection failed " +
      std::to_string(options.max_resample) +
      " consecutive times; parameters are likely pathological");
}

}  // namespace giant
