#ifndef GIANT_MULTIGRAPH_HPP
#define GIANT_MULTIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace giant {

using VertexId = std::uint32_t;

/// Unordered vertex pair, stored with u <= v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
  return a <= b ? Edge{a, b} : Edge{b, a};
}

/// Labeled multigraph: repeated pairs and self-loops are permitted.
/// A self-loop contributes 2 to its endpoint's degree.
struct MultiGraph {
  VertexId vertex_count = 0;
  std::vector<Edge> edges;

  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }

  void add_edge(VertexId a, VertexId b) { edges.push_back(make_edge(a, b)); }
};

/// Per-vertex degrees (self-loops count 2).
std::vector<std::uint32_t> degrees(const MultiGraph& g);

/// Incidence lists in CSR form; a self-loop appears twice at its vertex.
/// Entry j of vertex v lives in [offset[v], offset[v+1]) and names the
/// neighbour plus the edge index it came from.
struct Adjacency {
  struct Slot {
    VertexId neighbor;
    std::uint32_t edge;
  };
  std::vector<std::uint32_t> offset;
  std::vector<Slot> slots;

  static Adjacency build(const MultiGraph& g);
};

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const MultiGraph& g);

/// A vertex-induced subgraph relabeled to 0..k-1 (ascending original label),
/// together with the original labels.
struct InducedSubgraph {
  MultiGraph graph;
  std::vector<VertexId> orig_vertex;
};

/// The largest component; ties broken toward the smallest minimum label.
InducedSubgraph largest_component(const MultiGraph& g);

/// True iff the graph has no self-loops and no repeated pairs.
bool is_simple(const MultiGraph& g);

/// Edge-list text format: one "u v" line per edge with u <= v, lines sorted
/// by (u, v), 0-indexed. Isolated vertices are not representable; reading
/// infers vertex_count as max endpoint + 1.
void write_edge_list(const MultiGraph& g, std::ostream& out);
MultiGraph read_edge_list(std::istream& in);
MultiGraph read_edge_list_file(const std::string& path);
void write_edge_list_file(const MultiGraph& g, const std::string& path);

}  // namespace giant

#endif  // GIANT_MULTIGRAPH_HPP
