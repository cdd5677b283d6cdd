#include "giant/graph_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "giant/dists.hpp"

namespace giant {

MultiGraph configuration_pairing(RngStream& stream,
                                 const std::vector<std::uint32_t>& degree_seq) {
  std::uint64_t total = 0;
  for (std::uint32_t d : degree_seq) total += d;
  if (total % 2 != 0) {
    throw std::invalid_argument("configuration_pairing: degree sum is odd");
  }

  std::vector<VertexId> stubs;
  stubs.reserve(total);
  for (VertexId v = 0; v < degree_seq.size(); ++v) {
    for (std::uint32_t d = 0; d < degree_seq[v]; ++d) stubs.push_back(v);
  }

  MultiGraph g;
  g.vertex_count = static_cast<VertexId>(degree_seq.size());
  g.edges.reserve(total / 2);
  // Sequential uniform matching: the first unmatched stub is paired with a
  // uniform pick among the rest, which is the uniform perfect matching.
  for (std::uint64_t i = 0; i + 1 < total; i += 2) {
    const std::uint64_t j = i + 1 + stream.next_below(total - i - 1);
    std::swap(stubs[i + 1], stubs[j]);
    g.add_edge(stubs[i], stubs[i + 1]);
  }
  return g;
}

TwoCoreResult two_core(const MultiGraph& g) {
  const Adjacency adj = Adjacency::build(g);
  std::vector<std::uint32_t> deg = degrees(g);
  std::vector<char> removed(g.vertex_count, 0);
  std::vector<char> edge_dead(g.edges.size(), 0);

  std::vector<VertexId> queue;
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (deg[v] < 2) queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    for (std::uint32_t s = adj.offset[v]; s < adj.offset[v + 1]; ++s) {
      const auto [w, e] = adj.slots[s];
      if (edge_dead[e]) continue;
      edge_dead[e] = 1;
      deg[v] = deg[v] > 0 ? deg[v] - 1 : 0;
      if (w != v) {
        if (--deg[w] < 2 && !removed[w]) queue.push_back(w);
      } else {
        deg[v] = deg[v] > 0 ? deg[v] - 1 : 0;
      }
    }
  }

  TwoCoreResult out;
  std::vector<VertexId> new_id(g.vertex_count, 0);
  out.survives.assign(g.vertex_count, 0);
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (!removed[v]) {
      new_id[v] = static_cast<VertexId>(out.orig_vertex.size());
      out.orig_vertex.push_back(v);
      out.survives[v] = 1;
    }
  }
  out.core.vertex_count = static_cast<VertexId>(out.orig_vertex.size());
  for (std::uint32_t e = 0; e < g.edges.size(); ++e) {
    if (!edge_dead[e]) {
      out.core.add_edge(new_id[g.edges[e].u], new_id[g.edges[e].v]);
    }
  }
  return out;
}

KernelResult contract_kernel(const MultiGraph& core) {
  const std::vector<std::uint32_t> deg = degrees(core);
  for (VertexId v = 0; v < core.vertex_count; ++v) {
    if (deg[v] < 2) {
      throw std::invalid_argument("contract_kernel: vertex of degree < 2");
    }
  }
  const Adjacency adj = Adjacency::build(core);

  KernelResult out;
  std::vector<VertexId> kernel_id(core.vertex_count, 0);
  for (VertexId v = 0; v < core.vertex_count; ++v) {
    if (deg[v] >= 3) {
      kernel_id[v] = static_cast<VertexId>(out.orig_vertex.size());
      out.orig_vertex.push_back(v);
    }
  }
  out.kernel.vertex_count = static_cast<VertexId>(out.orig_vertex.size());

  std::vector<char> used(core.edges.size(), 0);

  // Walks one degree-2 chain starting with edge `e` out of vertex `v`,
  // returning (terminal vertex, chain length in edges). Chains cannot revisit
  // a degree-2 vertex, so this terminates at a degree->=3 vertex.
  auto walk_chain = [&](VertexId v, std::uint32_t e) {
    used[e] = 1;
    std::int64_t len = 1;
    std::uint32_t prev_edge = e;
    const Edge& first = core.edges[e];
    VertexId cur = first.u == v ? first.v : first.u;
    if (first.u == first.v) cur = v;  // self-loop: both ends at v
    while (deg[cur] == 2) {
      std::uint32_t next_edge = prev_edge;
      for (std::uint32_t s = adj.offset[cur]; s < adj.offset[cur + 1]; ++s) {
        if (adj.slots[s].edge != prev_edge) {
          next_edge = adj.slots[s].edge;
          break;
        }
      }
      // next_edge == prev_edge would mean a degree-2 self-loop reachable from
      // a chain, which min-degree-2 structure rules out.
      used[next_edge] = 1;
      ++len;
      const Edge& ne = core.edges[next_edge];
      cur = ne.u == cur ? ne.v : ne.u;
      prev_edge = next_edge;
    }
    return std::pair<VertexId, std::int64_t>{cur, len};
  };

  for (VertexId kv = 0; kv < out.orig_vertex.size(); ++kv) {
    const VertexId v = out.orig_vertex[kv];
    for (std::uint32_t s = adj.offset[v]; s < adj.offset[v + 1]; ++s) {
      const std::uint32_t e = adj.slots[s].edge;
      if (used[e]) continue;
      const auto [end, len] = walk_chain(v, e);
      out.kernel.add_edge(kv, kernel_id[end]);
      out.path_lengths.push_back(len);
    }
  }

  // Everything not consumed lies in components where all degrees are 2:
  // pure cycles (a lone degree-2 self-loop counts as a cycle of length 1).
  for (std::uint32_t e = 0; e < core.edges.size(); ++e) {
    if (used[e]) continue;
    used[e] = 1;
    const VertexId start = core.edges[e].u;
    std::int64_t len = 1;
    std::uint32_t prev_edge = e;
    VertexId cur = core.edges[e].v;
    if (core.edges[e].u == core.edges[e].v) cur = start;
    while (cur != start) {
      std::uint32_t next_edge = prev_edge;
      for (std::uint32_t s = adj.offset[cur]; s < adj.offset[cur + 1]; ++s) {
        if (adj.slots[s].edge != prev_edge) {
          next_edge = adj.slots[s].edge;
          break;
        }
      }
      used[next_edge] = 1;
      ++len;
      const Edge& ne = core.edges[next_edge];
      cur = ne.u == cur ? ne.v : ne.u;
      prev_edge = next_edge;
    }
    out.disjoint_cycles.push_back(len);
  }
  std::sort(out.disjoint_cycles.begin(), out.disjoint_cycles.end());
  return out;
}

SubdivideResult subdivide_edges(RngStream& stream, const MultiGraph& kernel, double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("subdivide_edges: mu must be in (0,1)");
  for (std::uint32_t d : degrees(kernel)) {
    if (d < 3) throw std::invalid_argument("subdivide_edges: kernel degree < 3");
  }

  SubdivideResult out;
  out.path_lengths.reserve(kernel.edges.size());
  const double log_mu = std::log(mu);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < kernel.edges.size(); ++i) {
    const std::int64_t len =
        1 + static_cast<std::int64_t>(std::floor(std::log(stream.next_double_pos()) / log_mu));
    out.path_lengths.push_back(len);
    total += len;
  }
  out.core.edges.reserve(static_cast<std::size_t>(total));
  VertexId next_vertex = kernel.vertex_count;
  for (std::size_t i = 0; i < kernel.edges.size(); ++i) {
    const Edge& e = kernel.edges[i];
    VertexId prev = e.u;
    for (std::int64_t j = 1; j < out.path_lengths[i]; ++j) {
      out.core.add_edge(prev, next_vertex);
      prev = next_vertex++;
    }
    out.core.add_edge(prev, e.v);
  }
  out.core.vertex_count = next_vertex;
  return out;
}

AttachResult attach_trees(RngStream& stream, const MultiGraph& core, double mu,
                          std::int64_t cap) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("attach_trees: mu must be in (0,1)");
  AttachResult out;
  out.graph = core;
  out.graph.edges.reserve(core.edges.size() + core.vertex_count / 2);
  out.tree_sizes.assign(core.vertex_count, 1);
  const detail::PoissonCdf offspring(mu);
  VertexId next_vertex = core.vertex_count;
  // The branching walk of sample_pgw_tree, run in global labels with a
  // reusable bfs buffer; the per-node draw order is identical.
  std::vector<VertexId> bfs;
  for (VertexId v = 0; v < core.vertex_count; ++v) {
    bfs.clear();
    bfs.push_back(v);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      const std::int64_t children = offspring.sample(stream);
      for (std::int64_t c = 0; c < children; ++c) {
        if (static_cast<std::int64_t>(bfs.size()) >= cap) {
          throw std::runtime_error("attach_trees: tree size cap exceeded");
        }
        out.graph.add_edge(bfs[i], next_vertex);
        bfs.push_back(next_vertex++);
      }
    }
    out.tree_sizes[v] = static_cast<std::int64_t>(bfs.size());
  }
  out.graph.vertex_count = next_vertex;
  return out;
}

}  // namespace giant
