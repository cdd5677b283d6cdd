#include "giant/direct.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace giant {

MultiGraph sample_gnp(RngStream& stream, std::uint32_t n, double p) {
  if (n < 1) throw std::domain_error("sample_gnp: n must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("sample_gnp: p must be in (0,1)");

  MultiGraph g;
  g.vertex_count = n;
  const double log_q = std::log1p(-p);
  // Walk the pairs (u,v), u < v, jumping Geometric(p) gaps.
  std::uint64_t u = 0;
  std::uint64_t v = 0;  // v==u means "row not entered yet"
  for (;;) {
    const double r = stream.next_double_pos();
    std::uint64_t skip = static_cast<std::uint64_t>(std::floor(std::log(r) / log_q));
    v += skip + 1;
    while (v >= n) {
      ++u;
      if (u >= n - 1) return g;
      v = u + (v - n) + 1;
    }
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
}

Anatomy extract_anatomy(const MultiGraph& g) {
  if (g.edges.empty()) {
    throw std::invalid_argument("extract_anatomy: graph has no edges");
  }

  Anatomy anatomy;
  InducedSubgraph giant = largest_component(g);
  TwoCoreResult core = two_core(giant.graph);
  KernelResult kernel = contract_kernel(core.core);

  // Pendant trees: every peeled vertex hangs off exactly one core vertex;
  // count them by search from each core vertex through peeled territory.
  anatomy.tree_sizes.assign(core.core.vertex_count, 1);
  if (core.core.vertex_count > 0) {
    const Adjacency adj = Adjacency::build(giant.graph);
    std::vector<char> seen(giant.graph.vertex_count, 0);
    std::vector<VertexId> frontier;
    for (VertexId cv = 0; cv < core.core.vertex_count; ++cv) {
      const VertexId root = core.orig_vertex[cv];
      frontier.clear();
      frontier.push_back(root);
      seen[root] = 1;
      std::int64_t reached = 0;
      while (!frontier.empty()) {
        const VertexId x = frontier.back();
        frontier.pop_back();
        for (std::uint32_t s = adj.offset[x]; s < adj.offset[x + 1]; ++s) {
          const VertexId w = adj.slots[s].neighbor;
          if (core.survives[w] || seen[w]) continue;
          seen[w] = 1;
          ++reached;
          frontier.push_back(w);
        }
      }
      anatomy.tree_sizes[cv] = 1 + reached;
    }
  }

  anatomy.giant = std::move(giant.graph);
  anatomy.core = std::move(core.core);
  anatomy.kernel = std::move(kernel.kernel);
  anatomy.path_lengths = std::move(kernel.path_lengths);
  anatomy.disjoint_cycles = std::move(kernel.disjoint_cycles);
  return anatomy;
}

}  // namespace giant
