#include "giant/cloning.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>

#include "giant/dists.hpp"
#include "giant/graph_ops.hpp"

namespace giant {

PoissonCell sample_cell(RngStream& stream, std::uint32_t n, double lambda) {
  if (n < 1) throw std::domain_error("sample_cell: n must be >= 1");
  if (!(lambda > 0.0)) throw std::domain_error("sample_cell: lambda must be positive");
  PoissonCell cell;
  cell.n = n;
  cell.lambda = lambda;
  cell.clones.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::int64_t count = sample_poisson(stream, lambda);
    auto& coords = cell.clones[v];
    coords.resize(static_cast<std::size_t>(count));
    for (auto& x : coords) x = lambda * stream.next_double_pos();
    std::sort(coords.begin(), coords.end(), std::greater<>());
  }
  return cell;
}

ColaResult cola(const PoissonCell& cell) {
  // Flatten to global clone ids: vertex by vertex, coordinates descending.
  std::vector<std::uint64_t> first_clone(cell.n + 1, 0);
  for (std::uint32_t v = 0; v < cell.n; ++v) {
    first_clone[v + 1] = first_clone[v] + cell.clones[v].size();
  }
  const std::uint64_t total = first_clone[cell.n];
  std::vector<double> coord(total);
  std::vector<std::uint32_t> owner(total);
  for (std::uint32_t v = 0; v < cell.n; ++v) {
    for (std::size_t j = 0; j < cell.clones[v].size(); ++j) {
      coord[first_clone[v] + j] = cell.clones[v][j];
      owner[first_clone[v] + j] = v;
    }
  }

  std::vector<char> matched(total, 0);
  std::vector<std::uint32_t> unmatched_count(cell.n);
  for (std::uint32_t v = 0; v < cell.n; ++v) {
    unmatched_count[v] = static_cast<std::uint32_t>(cell.clones[v].size());
  }

  // Max-heap over (coordinate, id) with lazy deletion of matched entries.
  std::priority_queue<std::pair<double, std::uint64_t>> line_heap;
  for (std::uint64_t c = 0; c < total; ++c) line_heap.emplace(coord[c], c);

  // Light-clone stack, seeded in vertex-index order and served first-in
  // first-out ("the first clone in the stack"); any coordinate-oblivious
  // discipline yields the same law.
  std::deque<std::uint64_t> stack;
  for (std::uint32_t v = 0; v < cell.n; ++v) {
    if (unmatched_count[v] == 1) stack.push_back(first_clone[v]);
  }

  auto sole_unmatched_clone = [&](std::uint32_t v) {
    for (std::uint64_t c = first_clone[v]; c < first_clone[v + 1]; ++c) {
      if (!matched[c]) return c;
    }
    throw std::logic_error("cola: light vertex lost its unmatched clone");
  };

  ColaResult result;
  result.tau = cell.lambda;
  while (!stack.empty()) {
    const std::uint64_t x = stack.front();
    stack.pop_front();
    if (matched[x]) continue;  // stale entry; purge on pop

    // Sweep left to the highest unmatched coordinate other than x itself.
    std::int64_t y = -1;
    while (!line_heap.empty()) {
      const auto [c_coord, c_id] = line_heap.top();
      line_heap.pop();
      if (matched[c_id] || c_id == x) continue;
      y = static_cast<std::int64_t>(c_id);
      result.tau = c_coord;
      break;
    }
    if (y < 0) {
      // The line ran off the left end: only light clones remain. Match them
      // arbitrarily among themselves; an odd leftover survives unmatched.
      result.degenerate = true;
      result.tau = 0.0;
      std::vector<std::uint64_t> rest;
      for (std::uint64_t c = 0; c < total; ++c) {
        if (!matched[c]) rest.push_back(c);
      }
      for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
        matched[rest[i]] = matched[rest[i + 1]] = 1;
        result.matched_pairs.emplace_back(rest[i], rest[i + 1]);
        unmatched_count[owner[rest[i]]]--;
        unmatched_count[owner[rest[i + 1]]]--;
      }
      break;
    }

    matched[x] = 1;
    matched[static_cast<std::uint64_t>(y)] = 1;
    result.matched_pairs.emplace_back(x, static_cast<std::uint64_t>(y));
    const std::uint32_t u = owner[x];
    const std::uint32_t v = owner[static_cast<std::uint64_t>(y)];
    --unmatched_count[u];
    --unmatched_count[v];
    if (unmatched_count[u] == 1) stack.push_back(sole_unmatched_clone(u));
    if (v != u && unmatched_count[v] == 1) stack.push_back(sole_unmatched_clone(v));
  }

  result.core_degree.assign(unmatched_count.begin(), unmatched_count.end());
  for (std::uint64_t c = 0; c < total; ++c) {
    if (!matched[c]) result.surviving_clones.push_back(c);
  }
  return result;
}

namespace {

// Uniform pairing of clone multiplicities with the odd-total special
// self-loop of the cloning model: one uniform clone becomes a loop and the
// rest are matched. Degree counts index into `degs`.
MultiGraph pair_clone_degrees(RngStream& stream, std::vector<std::uint32_t> degs) {
  std::uint64_t total = 0;
  for (auto d : degs) total += d;
  std::int64_t loop_vertex = -1;
  if (total % 2 != 0) {
    std::uint64_t r = stream.next_below(total);
    for (std::size_t v = 0; v < degs.size(); ++v) {
      if (r < degs[v]) {
        loop_vertex = static_cast<std::int64_t>(v);
        --degs[v];
        break;
      }
      r -= degs[v];
    }
  }
  MultiGraph g = configuration_pairing(stream, degs);
  if (loop_vertex >= 0) {
    g.add_edge(static_cast<VertexId>(loop_vertex), static_cast<VertexId>(loop_vertex));
  }
  return g;
}

}  // namespace

CoreFromCola core_from_cola(RngStream& stream, const PoissonCell& cell,
                            const ColaResult& result) {
  CoreFromCola out;
  std::vector<std::uint32_t> degs;
  for (std::uint32_t v = 0; v < cell.n; ++v) {
    if (result.core_degree[v] > 0) {
      out.orig_vertex.push_back(v);
      degs.push_back(result.core_degree[v]);
    }
  }
  out.graph = pair_clone_degrees(stream, std::move(degs));
  return out;
}

MultiGraph full_cloning_graph(RngStream& stream, std::uint32_t n, double lambda) {
  if (n < 1) throw std::domain_error("full_cloning_graph: n must be >= 1");
  if (!(lambda > 0.0)) throw std::domain_error("full_cloning_graph: lambda must be positive");
  std::vector<std::uint32_t> degs(n);
  for (auto& d : degs) {
    d = static_cast<std::uint32_t>(sample_poisson(stream, lambda));
  }
  return pair_clone_degrees(stream, std::move(degs));
}

}  // namespace giant
