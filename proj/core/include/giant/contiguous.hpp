#ifndef GIANT_CONTIGUOUS_HPP
#define GIANT_CONTIGUOUS_HPP

#include <cstdint>
#include <vector>

#include "giant/graph_ops.hpp"
#include "giant/multigraph.hpp"
#include "giant/rng.hpp"
#include "giant/scalar.hpp"

namespace giant {

/// How the even-degree-sum requirement of the pairing step is met.
///   kReject:   redraw the whole degree vector (keeping the realized rate)
///              until the thresholded degree sum is even. Canonical.
///   kSelfLoop: on an odd sum, one vertex chosen with probability
///              proportional to its degree (among those at or above the
///              threshold) contributes degree-1 stubs plus a self-loop.
enum class ParityPolicy { kReject, kSelfLoop };

/// One realized degree environment: the Gaussian rate draw, the n i.i.d.
/// Poisson degrees, their histogram, and how many fixups (rejection rounds,
/// rate redraws, or self-loop insertions) were needed.
struct DegreeDraw {
  double lambda_draw = 0.0;
  std::vector<std::uint32_t> degree_of;   // D_u for u in [n]
  std::vector<std::int64_t> counts;       // counts[k] = #{u : D_u = k}
  std::int64_t parity_fixups = 0;
  std::int64_t selfloop_vertex = -1;      // set only under kSelfLoop on odd sums
};

/// Draws the rate Lambda ~ N(lambda - mu, 1/n) once, then n i.i.d.
/// Poisson(Lambda) degrees, enforcing that the sum of degrees >= threshold
/// is even per the parity policy. threshold is 2 or 3.
DegreeDraw draw_degrees(RngStream& stream, const ModelParams& params,
                        int threshold, ParityPolicy parity);

/// Degree-at-least-2 model: uniform multigraph over all graphs whose
/// degree-k vertex counts match the draw for k >= 2. This is the whole
/// 2-core candidate (the giant's 2-core plus stray disjoint cycles).
struct PoissonConfigSample {
  MultiGraph graph;                    // on the degree->=2 vertices, relabeled
  std::vector<VertexId> orig_vertex;   // graph label -> [n] label
  DegreeDraw draw;
};
PoissonConfigSample sample_poisson_configuration(
    RngStream& stream, const ModelParams& params,
    ParityPolicy parity = ParityPolicy::kReject);

/// Kernel-plus-geometric-paths model: uniform multigraph on the
/// degree->=3 vertices, every edge then subdivided into a Geom(1-mu) path.
struct PoissonGeometricSample {
  MultiGraph core;                     // kernel labels 0..K-1 come first
  MultiGraph kernel;
  std::vector<std::int64_t> path_lengths;   // aligned with kernel.edges
  std::vector<VertexId> kernel_orig_vertex; // kernel label -> [n] label
  DegreeDraw draw;
};
PoissonGeometricSample sample_poisson_geometric(
    RngStream& stream, const ModelParams& params,
    ParityPolicy parity = ParityPolicy::kReject);

struct GiantOptions {
  bool simple = false;          // resample until the output graph is simple
  ParityPolicy parity = ParityPolicy::kReject;
  std::int64_t tree_cap = 100000000;
  int max_resample = 1000;      // simple=true attempts before giving up
};

/// One sampled giant with its full anatomy. Labels nest: kernel vertices are
/// core labels 0..K-1, core vertices are giant labels 0..C-1, pendant tree
/// vertices follow in sampling order.
struct GiantSample {
  Anatomy anatomy;              // anatomy.giant is the sampled graph
  double lambda_draw = 0.0;
  std::int64_t parity_fixups = 0;
  int attempts = 1;             // pipeline restarts when simple=true
};

/// The three-step generative model of the giant: degree draw and uniform
/// pairing (kernel), geometric edge subdivision (2-core), Poisson(mu)
/// Galton-Watson tree attachment (giant). With options.simple the whole
/// pipeline is rejection-sampled until the output has no loops or multiple
/// edges; std::runtime_error after options.max_resample failures.
GiantSample sample_giant(RngStream& stream, const ModelParams& params,
                         const GiantOptions& options = {});

}  // namespace giant

#endif  // GIANT_CONTIGUOUS_HPP
