#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>
#include <stdexcept>

#include "giant/direct.hpp"
#include "giant/graph_ops.hpp"
#include "giant/multigraph.hpp"
#include "testutil.hpp"

using namespace giant;
namespace tu = giant::testutil;

namespace {

MultiGraph path_graph(VertexId n) {
  MultiGraph g;
  g.vertex_count = n;
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

MultiGraph cycle_graph(VertexId n) {
  MultiGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

// Two vertices joined by three internally-disjoint paths of lengths 2, 2, 3.
MultiGraph theta_graph() {
  MultiGraph g;
  g.vertex_count = 6;
  g.add_edge(0, 2);
  g.add_edge(2, 1);  // length 2
  g.add_edge(0, 3);
  g.add_edge(3, 1);  // length 2
  g.add_edge(0, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 1);  // length 3
  return g;
}

}  // namespace

TEST_CASE("degrees count self-loops twice") {
  MultiGraph g;
  g.vertex_count = 3;
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  const auto deg = degrees(g);
  CHECK(deg[0] == 3);
  CHECK(deg[1] == 1);
  CHECK(deg[2] == 0);
}

TEST_CASE("configuration pairing of [3,3] matches exact enumeration") {
  const std::vector<std::uint32_t> degs = {3, 3};
  const auto exact = tu::enumerate_pairings(degs);
  std::int64_t total = 0, triple = 0;
  for (const auto& [edges, count] : exact) total += count;
  CHECK(total == 15);  // 5!! * 3 = matchings of 6 stubs
  const std::vector<Edge> triple_edge = {{0, 1}, {0, 1}, {0, 1}};
  CHECK(exact.at(triple_edge) == 6);  // probability 2/5

  RngStream s(31, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const MultiGraph g = configuration_pairing(s, degs);
    triple += tu::sorted_edges(g) == triple_edge;
  }
  CHECK(std::abs(static_cast<double>(triple) / draws - 0.4) <= 0.01);
}

TEST_CASE("configuration pairing of [3,3,3,3] matches enumeration per iso class") {
  const std::vector<std::uint32_t> degs = {3, 3, 3, 3};
  std::map<std::vector<Edge>, double> class_prob;
  std::int64_t total = 0;
  for (const auto& [edges, count] : tu::enumerate_pairings(degs)) {
    MultiGraph g;
    g.vertex_count = 4;
    g.edges = edges;
    class_prob[tu::canonical_form(g)] += static_cast<double>(count);
    total += count;
  }
  CHECK(total == 10395);  // 11!!
  for (auto& [k, v] : class_prob) v /= static_cast<double>(total);

  RngStream s(32, 0);
  const int draws = 100000;
  std::map<std::vector<Edge>, std::int64_t> observed;
  for (int i = 0; i < draws; ++i) {
    ++observed[tu::canonical_form(configuration_pairing(s, degs))];
  }
  for (const auto& [cls, count] : observed) {
    REQUIRE(class_prob.count(cls) == 1);
    CHECK(std::abs(static_cast<double>(count) / draws - class_prob[cls]) <= 0.01);
  }
}

TEST_CASE("configuration pairing degenerate degree sequences") {
  RngStream s(33, 0);
  const MultiGraph loop = configuration_pairing(s, {2});
  CHECK(loop.vertex_count == 1);
  REQUIRE(loop.edge_count() == 1);
  CHECK(loop.edges[0] == Edge{0, 0});

  const MultiGraph empty = configuration_pairing(s, {0, 0, 0});
  CHECK(empty.vertex_count == 3);
  CHECK(empty.edge_count() == 0);

  CHECK_THROWS_AS(configuration_pairing(s, {3, 2}), std::invalid_argument);
}

TEST_CASE("configuration pairing conserves degrees") {
  RngStream s(34, 0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint32_t> degs(5 + s.next_below(20));
    std::uint32_t sum = 0;
    for (auto& d : degs) {
      d = static_cast<std::uint32_t>(s.next_below(6));
      sum += d;
    }
    if (sum % 2 != 0) degs[0] += 1;
    const MultiGraph g = configuration_pairing(s, degs);
    CHECK(degrees(g) == degs);
  }
}

TEST_CASE("two_core of trees and cycles") {
  const TwoCoreResult peeled = two_core(path_graph(5));
  CHECK(peeled.core.vertex_count == 0);
  CHECK(peeled.core.edge_count() == 0);

  const TwoCoreResult cyc = two_core(cycle_graph(7));
  CHECK(cyc.core.vertex_count == 7);
  CHECK(cyc.core.edge_count() == 7);
  CHECK(tu::sorted_edges(cyc.core) == tu::sorted_edges(cycle_graph(7)));
}

TEST_CASE("two_core keeps a lone self-loop") {
  MultiGraph g;
  g.vertex_count = 2;
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  const TwoCoreResult r = two_core(g);
  CHECK(r.core.vertex_count == 1);
  REQUIRE(r.core.edge_count() == 1);
  CHECK(r.core.edges[0] == Edge{0, 0});
  CHECK(r.orig_vertex[0] == 0);
}

TEST_CASE("two_core equals randomized-order peeling on 1000 mixed instances") {
  RngStream s(35, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    MultiGraph g;
    if (trial % 2 == 0) {
      g = sample_gnp(s, 10 + static_cast<std::uint32_t>(s.next_below(50)), 0.08);
    } else {
      std::vector<std::uint32_t> degs(5 + s.next_below(30));
      std::uint32_t sum = 0;
      for (auto& d : degs) {
        d = static_cast<std::uint32_t>(s.next_below(4));
        sum += d;
      }
      if (sum % 2 != 0) degs[0] += 1;
      g = configuration_pairing(s, degs);  // multigraph path: loops, multi-edges
    }
    const TwoCoreResult fast = two_core(g);
    const std::vector<char> oracle = tu::randomized_peel(g, s);
    REQUIRE(fast.survives.size() == oracle.size());
    for (VertexId v = 0; v < g.vertex_count; ++v) {
      CHECK(static_cast<bool>(fast.survives[v]) == static_cast<bool>(oracle[v]));
    }
  }
}

TEST_CASE("two_core is idempotent") {
  RngStream s(36, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiGraph g = sample_gnp(s, 200, 2.0 / 200.0);
    const TwoCoreResult once = two_core(g);
    const TwoCoreResult twice = two_core(once.core);
    CHECK(twice.core.vertex_count == once.core.vertex_count);
    CHECK(tu::sorted_edges(twice.core) == tu::sorted_edges(once.core));
  }
}

TEST_CASE("contract_kernel on a pure cycle") {
  const KernelResult r = contract_kernel(cycle_graph(9));
  CHECK(r.kernel.vertex_count == 0);
  CHECK(r.path_lengths.empty());
  CHECK(r.disjoint_cycles == std::vector<std::int64_t>{9});
}

TEST_CASE("contract_kernel on the theta graph") {
  const KernelResult r = contract_kernel(theta_graph());
  CHECK(r.kernel.vertex_count == 2);
  REQUIRE(r.kernel.edge_count() == 3);
  CHECK(tu::sorted_edges(r.kernel) == std::vector<Edge>{{0, 1}, {0, 1}, {0, 1}});
  CHECK(tu::same_multiset(r.path_lengths, {2, 2, 3}));
  CHECK(r.disjoint_cycles.empty());
}

TEST_CASE("contract_kernel on a figure-eight keeps the degree-4 vertex") {
  // two triangles sharing vertex 0: degree 4 means kernel vertex, not cycle
  MultiGraph g;
  g.vertex_count = 5;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 0);
  const KernelResult r = contract_kernel(g);
  CHECK(r.kernel.vertex_count == 1);
  REQUIRE(r.kernel.edge_count() == 2);
  CHECK(tu::sorted_edges(r.kernel) == std::vector<Edge>{{0, 0}, {0, 0}});
  CHECK(tu::same_multiset(r.path_lengths, {3, 3}));
  CHECK(r.disjoint_cycles.empty());
}

TEST_CASE("contract_kernel edge accounting on sampled cores") {
  RngStream s(37, 0);
  int nonempty = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const MultiGraph g = sample_gnp(s, 1000, 2.0 / 1000.0);
    const InducedSubgraph giant = largest_component(g);
    const TwoCoreResult core = two_core(giant.graph);
    if (core.core.vertex_count == 0) continue;
    ++nonempty;
    const KernelResult r = contract_kernel(core.core);
    std::int64_t total = 0;
    for (auto len : r.path_lengths) total += len;
    for (auto len : r.disjoint_cycles) total += len;
    CHECK(total == core.core.edge_count());
    for (std::uint32_t d : degrees(r.kernel)) CHECK(d >= 3);
  }
  CHECK(nonempty >= 45);
}

TEST_CASE("contract_kernel rejects degree-deficient input") {
  CHECK_THROWS_AS(contract_kernel(path_graph(4)), std::invalid_argument);
}

TEST_CASE("subdivide then contract is the identity on sampled kernels") {
  RngStream s(38, 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint32_t> degs(4 + s.next_below(40));
    std::uint32_t sum = 0;
    for (auto& d : degs) {
      d = static_cast<std::uint32_t>(3 + s.next_below(3));
      sum += d;
    }
    if (sum % 2 != 0) degs[0] += 1;
    const MultiGraph kernel = configuration_pairing(s, degs);
    const SubdivideResult sub = subdivide_edges(s, kernel, 0.4063757);
    const KernelResult back = contract_kernel(sub.core);

    REQUIRE(back.kernel.vertex_count == kernel.vertex_count);
    // kernel vertices keep their labels through the round trip
    for (VertexId kv = 0; kv < back.orig_vertex.size(); ++kv) {
      CHECK(back.orig_vertex[kv] == kv);
    }
    CHECK(back.disjoint_cycles.empty());

    // edges with their lengths must match as multisets of (u, v, len)
    auto keyed = [](const MultiGraph& k, const std::vector<std::int64_t>& lens) {
      std::vector<std::tuple<VertexId, VertexId, std::int64_t>> out;
      for (std::size_t i = 0; i < k.edges.size(); ++i) {
        out.emplace_back(k.edges[i].u, k.edges[i].v, lens[i]);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(keyed(kernel, sub.path_lengths) == keyed(back.kernel, back.path_lengths));
  }
}

TEST_CASE("subdivide at vanishing mu keeps the kernel") {
  RngStream s(39, 0);
  const MultiGraph kernel = configuration_pairing(s, {3, 3, 4, 4});
  const SubdivideResult sub = subdivide_edges(s, kernel, 1e-9);
  CHECK(sub.core.vertex_count == kernel.vertex_count);
  CHECK(tu::sorted_edges(sub.core) == tu::sorted_edges(kernel));
  for (auto len : sub.path_lengths) CHECK(len == 1);
}

TEST_CASE("subdivided edge lengths have the geometric mean") {
  RngStream s(40, 0);
  std::vector<std::uint32_t> degs(70000, 3);
  const MultiGraph kernel = configuration_pairing(s, degs);  // 105000 edges
  const SubdivideResult sub = subdivide_edges(s, kernel, 0.4063757);
  double sum = 0;
  for (auto len : sub.path_lengths) sum += static_cast<double>(len);
  CHECK(std::abs(sum / static_cast<double>(sub.path_lengths.size()) - 1.68457) <= 0.01);
}

TEST_CASE("subdivide validates the kernel precondition") {
  RngStream s(41, 0);
  CHECK_THROWS_AS(subdivide_edges(s, cycle_graph(4), 0.5), std::invalid_argument);
}

TEST_CASE("attach_trees accounting and peelability") {
  RngStream s(42, 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint32_t> degs(4 + s.next_below(20), 3);
    if ((3 * degs.size()) % 2 != 0) degs[0] = 4;
    const MultiGraph kernel = configuration_pairing(s, degs);
    const SubdivideResult sub = subdivide_edges(s, kernel, 0.5);
    const AttachResult att = attach_trees(s, sub.core, 0.5);

    std::int64_t extra = 0;
    for (auto t : att.tree_sizes) {
      CHECK(t >= 1);
      extra += t - 1;
    }
    CHECK(att.graph.vertex_count == sub.core.vertex_count + extra);

    // peeling removes exactly the attached trees
    const TwoCoreResult peeled = two_core(att.graph);
    REQUIRE(peeled.core.vertex_count == sub.core.vertex_count);
    for (VertexId v = 0; v < peeled.orig_vertex.size(); ++v) {
      CHECK(peeled.orig_vertex[v] == v);
    }
    CHECK(tu::sorted_edges(peeled.core) == tu::sorted_edges(sub.core));
  }
}

TEST_CASE("attach_trees at vanishing mu is a no-op") {
  RngStream s(43, 0);
  const MultiGraph kernel = configuration_pairing(s, {3, 3, 3, 3});
  const AttachResult att = attach_trees(s, kernel, 1e-9);
  CHECK(att.graph.vertex_count == kernel.vertex_count);
  CHECK(att.graph.edge_count() == kernel.edge_count());
}

TEST_CASE("components and largest_component") {
  MultiGraph empty;
  empty.vertex_count = 5;
  CHECK(components(empty).size() == 5);

  MultiGraph two_triangles;
  two_triangles.vertex_count = 6;
  for (VertexId base : {VertexId{0}, VertexId{3}}) {
    two_triangles.add_edge(base, base + 1);
    two_triangles.add_edge(base + 1, base + 2);
    two_triangles.add_edge(base + 2, base);
  }
  const auto comps = components(two_triangles);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 3);
  const InducedSubgraph big = largest_component(two_triangles);
  CHECK(big.graph.vertex_count == 3);
  CHECK(big.orig_vertex == std::vector<VertexId>{0, 1, 2});  // tie-break to vertex 0

  RngStream s(44, 0);
  const MultiGraph g = sample_gnp(s, 1000, 2.0 / 1000.0);
  std::size_t total = 0;
  for (const auto& c : components(g)) total += c.size();
  CHECK(total == 1000);
}

TEST_CASE("is_simple") {
  MultiGraph triangle;
  triangle.vertex_count = 3;
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(2, 0);
  CHECK(is_simple(triangle));

  MultiGraph loop;
  loop.vertex_count = 1;
  loop.add_edge(0, 0);
  CHECK_FALSE(is_simple(loop));

  MultiGraph doubled;
  doubled.vertex_count = 2;
  doubled.add_edge(0, 1);
  doubled.add_edge(1, 0);
  CHECK_FALSE(is_simple(doubled));
}

TEST_CASE("edge list round trip preserves the multiset of edges") {
  MultiGraph g;
  g.vertex_count = 5;
  g.add_edge(3, 1);
  g.add_edge(0, 0);
  g.add_edge(1, 3);
  g.add_edge(2, 4);

  std::stringstream io;
  write_edge_list(g, io);
  CHECK(io.str() == "0 0\n1 3\n1 3\n2 4\n");
  const MultiGraph back = read_edge_list(io);
  CHECK(back.vertex_count == 5);
  CHECK(tu::sorted_edges(back) == tu::sorted_edges(g));

  std::stringstream bad("1 x\n");
  CHECK_THROWS(read_edge_list(bad));

  // foreign files may order endpoints descending; normalize on read
  std::stringstream foreign("3 1\n");
  const MultiGraph f = read_edge_list(foreign);
  CHECK(f.edges[0] == Edge{1, 3});
  CHECK(f.vertex_count == 4);
}
