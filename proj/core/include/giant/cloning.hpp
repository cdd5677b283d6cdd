#ifndef GIANT_CLONING_HPP
#define GIANT_CLONING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "giant/multigraph.hpp"
#include "giant/rng.hpp"

namespace giant {

/// Poisson lambda-cell: per vertex, a rate-1 Poisson point process on
/// (0, lambda], i.e. Poisson(lambda) many clones with i.i.d. uniform
/// coordinates, stored sorted descending.
struct PoissonCell {
  std::uint32_t n = 0;
  double lambda = 0.0;
  std::vector<std::vector<double>> clones;

  std::int64_t clone_count() const {
    std::int64_t total = 0;
    for (const auto& c : clones) total += static_cast<std::int64_t>(c.size());
    return total;
  }
};

PoissonCell sample_cell(RngStream& stream, std::uint32_t n, double lambda);

/// Outcome of the cut-off line algorithm. Clones are globally indexed in
/// cell order (vertex by vertex, coordinates descending). tau is the final
/// line position; every clone is either in exactly one matched pair or
/// among the survivors, and (unless degenerate) every vertex with survivors
/// has at least two of them.
struct ColaResult {
  double tau = 0.0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> matched_pairs;
  std::vector<std::uint64_t> surviving_clones;       // ascending clone ids
  std::vector<std::uint32_t> core_degree;            // survivors per vertex
  bool degenerate = false;  // line hit 0 with light clones left (odd totals)
};

/// Cut-off line algorithm: a stack of light clones (a vertex is light while
/// it has at most one unmatched clone) is seeded in vertex-index order and
/// served first-in first-out; each served clone is matched to the highest
/// unmatched coordinate below the line. The survivors are the 2-core's
/// clones. Any coordinate-oblivious service order gives the same law.
ColaResult cola(const PoissonCell& cell);

/// Uniform pairing of the surviving clones, contracted to a multigraph on
/// the vertices that kept at least one survivor (an odd survivor count turns
/// one uniform clone into a self-loop). This is the 2-core candidate.
struct CoreFromCola {
  MultiGraph graph;
  std::vector<VertexId> orig_vertex;  // graph label -> cell vertex
};
CoreFromCola core_from_cola(RngStream& stream, const PoissonCell& cell,
                            const ColaResult& result);

/// The full cloning multigraph on n vertices: Poisson(lambda) clones per
/// vertex, a uniform perfect matching of all clones (odd totals turn one
/// uniform clone into a self-loop), contracted.
MultiGraph full_cloning_graph(RngStream& stream, std::uint32_t n, double lambda);

}  // namespace giant

#endif  // GIANT_CLONING_HPP
