#ifndef GIANT_DISTS_HPP
#define GIANT_DISTS_HPP

#include <cstdint>
#include <vector>

#include "giant/rng.hpp"

namespace giant {

/// Rooted tree in breadth-first labeling: parent[0] == -1 (root sentinel)
/// and parent[i] < i for every i >= 1, so the tree is connected and acyclic
/// by construction.
struct RootedTree {
  std::vector<std::int32_t> parent;

  std::int64_t size() const { return static_cast<std::int64_t>(parent.size()); }
};

/// Poisson(rate) variate by inversion search (rates here are O(1)).
/// Throws std::domain_error for negative rate; rate 0 always returns 0.
std::int64_t sample_poisson(RngStream& stream, double rate);

/// Geometric on {1,2,...} with P(k) = mu^{k-1}(1-mu), by inversion:
/// k = 1 + floor(log(U)/log(mu)). Throws std::domain_error unless mu in (0,1).
std::int64_t sample_geometric(RngStream& stream, double mu);

/// N(mean, variance) via Box-Muller. Throws std::domain_error for variance <= 0.
double sample_gaussian(RngStream& stream, double mean, double variance);

/// Poisson(mu)-Galton-Watson family tree, simulated breadth-first; its size
/// is Borel(mu)-distributed. `cap` guards against runaway configuration
/// mistakes (mu >= 1); exceeding it throws std::runtime_error.
RootedTree sample_pgw_tree(RngStream& stream, double mu,
                           std::int64_t cap = 100000000);

namespace detail {
/// Inversion step for rate <= ~10 with e^{-rate} precomputed by the caller;
/// shared by the scalar sampler and the bulk degree-drawing loops.
std::int64_t poisson_inv(RngStream& stream, double rate, double exp_neg_rate);

/// Cached Poisson CDF for bulk draws at one fixed rate. sample() consumes
/// one uniform and returns exactly what poisson_inv would for the same
/// uniform; the table just removes the per-draw recurrence.
class PoissonCdf {
 public:
  explicit PoissonCdf(double rate);

  std::int64_t sample(RngStream& stream) const {
    const double u = stream.next_double();
    std::size_t k = 0;
    while (u > cum_[k]) ++k;  // cum_ ends with an infinity sentinel
    if (k < sentinel_) return static_cast<std::int64_t>(k);
    return tail_sample(u);
  }

 private:
  std::int64_t tail_sample(double u) const;

  std::vector<double> cum_;
  std::size_t sentinel_ = 0;
  double rate_ = 0.0;
  double tail_p_ = 0.0;    // pmf at the last tabulated k
  double tail_cum_ = 0.0;  // cdf at the last tabulated k
};
}  // namespace detail

}  // namespace giant

#endif  // GIANT_DISTS_HPP
