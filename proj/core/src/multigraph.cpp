#include "giant/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace giant {

std::vector<std::uint32_t> degrees(const MultiGraph& g) {
  std::vector<std::uint32_t> deg(g.vertex_count, 0);
  for (const Edge& e : g.edges) {
    deg[e.u] += 1;
    deg[e.v] += 1;  // e.u == e.v adds 2 in total
  }
  return deg;
}

Adjacency Adjacency::build(const MultiGraph& g) {
  Adjacency adj;
  adj.offset.assign(g.vertex_count + 1, 0);
  for (const Edge& e : g.edges) {
    ++adj.offset[e.u + 1];
    ++adj.offset[e.v + 1];
  }
  for (std::size_t v = 1; v < adj.offset.size(); ++v) adj.offset[v] += adj.offset[v - 1];
  adj.slots.resize(adj.offset.back());
  std::vector<std::uint32_t> cursor(adj.offset.begin(), adj.offset.end() - 1);
  for (std::uint32_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    adj.slots[cursor[e.u]++] = {e.v, i};
    adj.slots[cursor[e.v]++] = {e.u, i};
  }
  return adj;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId x) {
    VertexId root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      VertexId next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

std::vector<std::vector<VertexId>> components(const MultiGraph& g) {
  UnionFind uf(g.vertex_count);
  for (const Edge& e : g.edges) uf.unite(e.u, e.v);

  std::vector<std::vector<VertexId>> out;
  std::vector<std::int64_t> slot_of_root(g.vertex_count, -1);
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    const VertexId r = uf.find(v);
    if (slot_of_root[r] < 0) {
      slot_of_root[r] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot_of_root[r])].push_back(v);
  }
  // Scanning vertices in order makes each list sorted and orders the lists
  // by their minimum element already.
  return out;
}

InducedSubgraph largest_component(const MultiGraph& g) {
  auto comps = components(g);
  if (comps.empty()) return {};
  std::size_t best = 0;
  for (std::size_t i = 1; i < comps.size(); ++i) {
    if (comps[i].size() > comps[best].size()) best = i;
    // equal sizes: the earlier list already has the smaller minimum label
  }

  InducedSubgraph out;
  out.orig_vertex = std::move(comps[best]);
  out.graph.vertex_count = static_cast<VertexId>(out.orig_vertex.size());
  std::vector<VertexId> new_id(g.vertex_count, 0);
  std::vector<char> member(g.vertex_count, 0);
  for (VertexId i = 0; i < out.orig_vertex.size(); ++i) {
    new_id[out.orig_vertex[i]] = i;
    member[out.orig_vertex[i]] = 1;
  }
  for (const Edge& e : g.edges) {
    if (member[e.u]) out.graph.add_edge(new_id[e.u], new_id[e.v]);
  }
  return out;
}

bool is_simple(const MultiGraph& g) {
  std::vector<Edge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].u == sorted[i].v) return false;
    if (i > 0 && sorted[i] == sorted[i - 1]) return false;
  }
  return true;
}

void write_edge_list(const MultiGraph& g, std::ostream& out) {
  std::vector<Edge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  for (const Edge& e : sorted) {
    out << e.u << ' ' << e.v << '\n';
  }
}

MultiGraph read_edge_list(std::istream& in) {
  MultiGraph g;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::int64_t a = -1, b = -1;
    if (!(ls >> a >> b) || a < 0 || b < 0) {
      throw std::runtime_error("read_edge_list: malformed line: " + line);
    }
    g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    const VertexId hi = std::max(g.edges.back().u, g.edges.back().v);
    if (hi >= g.vertex_count) g.vertex_count = hi + 1;
  }
  return g;
}

MultiGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return read_edge_list(in);
}

void write_edge_list_file(const MultiGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write edge list: " + path);
  write_edge_list(g, out);
}

}  // namespace giant
