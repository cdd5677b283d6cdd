#include "giant/scalar.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace giant {

namespace {

constexpr double kLambdaFloor = 1.0 + 1e-9;
constexpr std::int64_t kLogFactTable = 10000;

}  // namespace

double conjugate(double lambda) {
  if (!(lambda > kLambdaFloor)) {
    throw std::domain_error("conjugate: lambda must exceed 1 (strictly supercritical)");
  }
  const double target = lambda * std::exp(-lambda);
  // f(m) = m e^{-m} - target is increasing on (0,1), negative at 0+ and
  // positive at 1- (since target < 1/e), so bisection always brackets.
  double lo = 1e-12;
  double hi = 1.0 - 1e-12;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::exp(-mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double mu = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const double em = std::exp(-mu);
    const double f = mu * em - target;
    const double df = em * (1.0 - mu);
    const double next = mu - f / df;
    if (next > 0.0 && next < 1.0) mu = next;
  }
  return mu;
}

ModelParams make_params(std::int64_t n, double lambda) {
  if (n < 1) throw std::domain_error("make_params: n must be positive");
  ModelParams p;
  p.n = n;
  p.lambda = lambda;
  p.mu = conjugate(lambda);
  p.lambda0 = lambda - p.mu;
  return p;
}

double p2_plus(double x) {
  if (x < 0.0) throw std::domain_error("p2_plus: x must be nonnegative");
  const double ex = std::exp(-x);
  return 1.0 - ex - x * ex;
}

MomentVector moments(const ModelParams& params) {
  const double n = static_cast<double>(params.n);
  const double mu = params.mu;
  const double lambda = params.lambda;
  const double l0 = params.lambda0;
  const double ratio = 1.0 - mu / lambda;
  const double el0 = std::exp(-l0);

  MomentVector m;
  m.b1 = (1.0 - mu) * ratio;
  m.b2 = mu * ratio;
  m.b3 = 0.5 * ratio * (lambda + mu - 2.0);
  m.core_vertices = m.b1 * n;
  m.core_edges = 0.5 * n * l0 * (1.0 - el0);
  m.kernel_vertices = n * (1.0 - el0 * (1.0 + l0 + 0.5 * l0 * l0));
  m.kernel_edges = 0.5 * n * l0 * (1.0 - el0 * (1.0 + l0));
  return m;
}

double log_factorial(std::int64_t t) {
  if (t < 0) throw std::domain_error("log_factorial: negative argument");
  static const std::vector<double> table = [] {
    std::vector<double> v(kLogFactTable + 1);
    v[0] = 0.0;
    for (std::int64_t i = 1; i <= kLogFactTable; ++i) {
      v[i] = v[i - 1] + std::log(static_cast<double>(i));
    }
    return v;
  }();
  if (t <= kLogFactTable) return table[t];
  // Stirling series; the n^-5 term is already below 1e-23 at n = 1e4.
  const double x = static_cast<double>(t);
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  return x * std::log(x) - x + 0.5 * std::log(2.0 * M_PI * x) +
         inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0));
}

double borel_pmf(double mu, std::int64_t t) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("borel_pmf: mu must be in (0,1)");
  if (t < 1) throw std::domain_error("borel_pmf: t must be >= 1");
  const double td = static_cast<double>(t);
  const double log_p = (td - 1.0) * std::log(td) - log_factorial(t) +
                       td * (std::log(mu) - mu) - std::log(mu);
  return std::exp(log_p);
}

double geom_pmf(double mu, std::int64_t k) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("geom_pmf: mu must be in (0,1)");
  if (k < 1) throw std::domain_error("geom_pmf: k must be >= 1");
  return std::pow(mu, static_cast<double>(k - 1)) * (1.0 - mu);
}

}  // namespace giant
