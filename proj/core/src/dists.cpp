#include "giant/dists.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace giant {

namespace detail {

std::int64_t poisson_inv(RngStream& stream, double rate, double exp_neg_rate) {
  const double u = stream.next_double();
  double p = exp_neg_rate;
  double cum = p;
  std::int64_t k = 0;
  // cum saturates just below 1; the guard only matters for u within an ulp of 1.
  while (u > cum && k < 1000) {
    ++k;
    p *= rate / static_cast<double>(k);
    cum += p;
  }
  return k;
}

PoissonCdf::PoissonCdf(double rate) : rate_(rate) {
  double p = std::exp(-rate);
  double cum = p;
  std::int64_t k = 0;
  cum_.push_back(cum);
  // Extend with the same recurrence poisson_inv runs, until additions stop
  // registering; draws beyond that continue in tail_sample.
  while (k < 1000) {
    ++k;
    p *= rate / static_cast<double>(k);
    const double next = cum + p;
    if (next == cum) break;
    cum = next;
    cum_.push_back(cum);
  }
  tail_p_ = p;
  tail_cum_ = cum;
  sentinel_ = cum_.size();
  cum_.push_back(std::numeric_limits<double>::infinity());
}

std::int64_t PoissonCdf::tail_sample(double u) const {
  double p = tail_p_;
  double cum = tail_cum_;
  std::int64_t k = static_cast<std::int64_t>(sentinel_) - 1;
  while (u > cum && k < 1000) {
    ++k;
    p *= rate_ / static_cast<double>(k);
    cum += p;
  }
  return k;
}

}  // namespace detail

std::int64_t sample_poisson(RngStream& stream, double rate) {
  if (rate < 0.0) throw std::domain_error("sample_poisson: negative rate");
  if (rate == 0.0) return 0;
  std::int64_t total = 0;
  // Split large rates additively; every piece stays in inversion range.
  while (rate > 10.0) {
    total += detail::poisson_inv(stream, 10.0, 4.5399929762484854e-05);
    rate -= 10.0;
  }
  return total + detail::poisson_inv(stream, rate, std::exp(-rate));
}

std::int64_t sample_geometric(RngStream& stream, double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("sample_geometric: mu must be in (0,1)");
  const double u = stream.next_double_pos();
  return 1 + static_cast<std::int64_t>(std::floor(std::log(u) / std::log(mu)));
}

double sample_gaussian(RngStream& stream, double mean, double variance) {
  if (!(variance > 0.0)) throw std::domain_error("sample_gaussian: variance must be positive");
  const double u1 = stream.next_double_pos();
  const double u2 = stream.next_double();
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  return mean + std::sqrt(variance) * z;
}

RootedTree sample_pgw_tree(RngStream& stream, double mu, std::int64_t cap) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("sample_pgw_tree: mu must be in (0,1)");
  if (cap < 1) throw std::domain_error("sample_pgw_tree: cap must be >= 1");
  const double exp_neg_mu = std::exp(-mu);
  RootedTree tree;
  tree.parent.push_back(-1);
  // Nodes are processed in label order, so children always get larger labels.
  for (std::size_t i = 0; i < tree.parent.size(); ++i) {
    const std::int64_t children = detail::poisson_inv(stream, mu, exp_neg_mu);
    for (std::int64_t c = 0; c < children; ++c) {
      if (static_cast<std::int64_t>(tree.parent.size()) >= cap) {
        throw std::runtime_error("sample_pgw_tree: tree size cap exceeded");
      }
      tree.parent.push_back(static_cast<std::int32_t>(i));
    }
  }
  return tree;
}

}  // namespace giant
