#ifndef GIANT_GRAPH_OPS_HPP
#define GIANT_GRAPH_OPS_HPP

#include <cstdint>
#include <vector>

#include "giant/multigraph.hpp"
#include "giant/rng.hpp"

namespace giant {

/// Uniform pairing model: one stub per unit of degree, a uniform perfect
/// matching of the stubs, contracted to a multigraph on degrees.size()
/// vertices. Throws std::invalid_argument when the degree sum is odd.
MultiGraph configuration_pairing(RngStream& stream,
                                 const std::vector<std::uint32_t>& degree_seq);

/// 2-core: the maximum subgraph with every degree >= 2, as a compact
/// relabeled graph plus the survival mask over the input labels.
struct TwoCoreResult {
  MultiGraph core;
  std::vector<VertexId> orig_vertex;  // core label -> input label
  std::vector<char> survives;        // indexed by input label
};
TwoCoreResult two_core(const MultiGraph& g);

/// Kernel extraction from a graph of minimum degree 2: components that are
/// pure cycles are reported by length and excluded; every maximal path whose
/// internal vertices have degree 2 contracts to one kernel edge whose
/// path_lengths entry counts the input edges on it. Kernel degrees are all
/// >= 3. Throws std::invalid_argument if some input degree is < 2.
struct KernelResult {
  MultiGraph kernel;
  std::vector<VertexId> orig_vertex;            // kernel label -> input label
  std::vector<std::int64_t> path_lengths;       // aligned with kernel.edges
  std::vector<std::int64_t> disjoint_cycles;    // lengths, ascending
};
KernelResult contract_kernel(const MultiGraph& core);

/// Inverse of kernel contraction: each kernel edge independently becomes a
/// path of Geom(1-mu) length (length 1 keeps the edge; a length-L self-loop
/// becomes a closed walk of L edges through its vertex). Kernel vertices keep
/// labels 0..K-1; inserted degree-2 vertices are appended in edge order.
/// Requires kernel minimum degree >= 3 (or an empty kernel).
struct SubdivideResult {
  MultiGraph core;
  std::vector<std::int64_t> path_lengths;  // aligned with kernel.edges
};
SubdivideResult subdivide_edges(RngStream& stream, const MultiGraph& kernel, double mu);

/// Attaches an independent Poisson(mu)-Galton-Watson tree to every vertex,
/// identifying each root with its vertex; non-root tree vertices are fresh
/// labels appended in sampling order. tree_sizes[v] >= 1 counts the root.
struct AttachResult {
  MultiGraph graph;
  std::vector<std::int64_t> tree_sizes;  // indexed by input vertex
};
AttachResult attach_trees(RngStream& stream, const MultiGraph& core, double mu,
                          std::int64_t cap = 100000000);

/// Full decomposition of a giant component: its 2-core, the kernel with
/// per-edge path lengths, pure cycles of the 2-core, and the pendant tree
/// sizes per 2-core vertex. In samples produced by the generative pipeline
/// the labelings nest: kernel vertices are core labels 0..K-1 and core
/// vertices are giant labels 0..C-1.
struct Anatomy {
  MultiGraph giant;
  MultiGraph core;
  MultiGraph kernel;
  std::vector<std::int64_t> path_lengths;
  std::vector<std::int64_t> disjoint_cycles;
  std::vector<std::int64_t> tree_sizes;  // indexed by core vertex; >= 1
};

}  // namespace giant

#endif  // GIANT_GRAPH_OPS_HPP
