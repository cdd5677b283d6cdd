#ifndef GIANT_DIRECT_HPP
#define GIANT_DIRECT_HPP

#include <cstdint>

#include "giant/graph_ops.hpp"
#include "giant/multigraph.hpp"
#include "giant/rng.hpp"

namespace giant {

/// Simple Erdos-Renyi graph: each of the C(n,2) pairs appears independently
/// with probability p, enumerated by geometric skip-sampling over the
/// lexicographic pair order (O(n + m) expected time).
MultiGraph sample_gnp(RngStream& stream, std::uint32_t n, double p);

/// Dissects a graph the way the giant is analyzed: largest component, its
/// own 2-core, kernel contraction, pendant-tree assignment by search from
/// the core into the peeled part. Throws std::invalid_argument on graphs
/// with no edges. A giant whose 2-core is empty (a tree) yields empty
/// tree_sizes.
Anatomy extract_anatomy(const MultiGraph& g);

}  // namespace giant

#endif  // GIANT_DIRECT_HPP
