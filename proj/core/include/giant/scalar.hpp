#ifndef GIANT_SCALAR_HPP
#define GIANT_SCALAR_HPP

#include <cstdint>

namespace giant {

/// Parameters of the supercritical regime: edge density lambda > 1, its
/// conjugate mu < 1 (the unique root of mu*exp(-mu) = lambda*exp(-lambda)
/// in (0,1)), and lambda0 = lambda - mu. All limiting proportions of the
/// giant component are functions of these three numbers.
struct ModelParams {
  std::int64_t n = 0;
  double lambda = 0.0;
  double mu = 0.0;
  double lambda0 = 0.0;  // lambda - mu
};

/// Builds validated ModelParams (computes mu from lambda).
/// Throws std::domain_error if lambda <= 1 + 1e-9 or n < 1.
ModelParams make_params(std::int64_t n, double lambda);

/// Per-vertex limiting means and the derived expected counts at a given n.
///   b1: 2-core share of n            b2: (giant minus 2-core) share
///   b3: 2-core excess edge share (edges minus vertices)
struct MomentVector {
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
  double core_vertices = 0.0;
  double core_edges = 0.0;
  double kernel_vertices = 0.0;
  double kernel_edges = 0.0;
};

/// The conjugate of lambda: the root mu in (0,1) of mu e^{-mu} = lambda e^{-lambda}.
/// Bisection to 1e-14 bracket width, then Newton polish; deterministic.
/// Throws std::domain_error if lambda <= 1 + 1e-9.
double conjugate(double lambda);

/// p2+(x) = P(Poisson(x) >= 2) = 1 - e^{-x} - x e^{-x}, for x >= 0.
double p2_plus(double x);

/// Closed-form expected anatomy counts at params.n.
MomentVector moments(const ModelParams& params);

/// Borel(mu) pmf: P(total progeny of a Poisson(mu) branching process = t),
///   t^{t-1} / (mu t!) * (mu e^{-mu})^t,
/// evaluated in log-space so t up to 1e6 is fine.
double borel_pmf(double mu, std::int64_t t);

/// Geometric pmf on {1,2,...}: P(k) = mu^{k-1} (1 - mu).
double geom_pmf(double mu, std::int64_t k);

/// log(t!) via a precomputed table up to 1e4 and a Stirling series beyond.
double log_factorial(std::int64_t t);

}  // namespace giant

#endif  // GIANT_SCALAR_HPP
