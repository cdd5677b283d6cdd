#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "giant/scalar.hpp"

using namespace giant;

namespace {

const double kLambdaGrid[] = {1.1, 1.5, 2.0, 3.0, 5.0, 10.0};

// Independent root oracle: plain bisection, no Newton polish.
double conjugate_oracle(double lambda) {
  const double target = lambda * std::exp(-lambda);
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::exp(-mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("conjugate satisfies its defining equation on the lambda grid") {
  for (double lambda : kLambdaGrid) {
    const double mu = conjugate(lambda);
    CHECK(mu > 0.0);
    CHECK(mu < 1.0);
    CHECK(std::abs(mu * std::exp(-mu) - lambda * std::exp(-lambda)) <= 1e-12);
    // exp(-(lambda-mu)) == mu/lambda is the identity form used downstream
    CHECK(std::abs(std::exp(-(lambda - mu)) - mu / lambda) <= 1e-10);
    CHECK(mu == doctest::Approx(conjugate_oracle(lambda)).epsilon(1e-12));
  }
}

TEST_CASE("conjugate frozen values") {
  CHECK(conjugate(2.0) == doctest::Approx(0.4063757399).epsilon(1e-9));
  CHECK(conjugate(4.0) == doctest::Approx(0.0793096051).epsilon(1e-8));
  // deterministic
  CHECK(conjugate(2.0) == conjugate(2.0));
}

TEST_CASE("conjugate rejects the subcritical and critical regime") {
  CHECK_THROWS_AS(conjugate(1.0), std::domain_error);
  CHECK_THROWS_AS(conjugate(0.5), std::domain_error);
  CHECK_THROWS_AS(conjugate(1.0 + 1e-10), std::domain_error);
  CHECK_NOTHROW(conjugate(1.0 + 2e-9));
}

TEST_CASE("make_params validity") {
  const ModelParams p = make_params(100000, 2.0);
  CHECK(p.lambda0 == p.lambda - p.mu);
  CHECK(std::abs(p.mu * std::exp(-p.mu) - 2.0 * std::exp(-2.0)) <= 1e-12);
  CHECK_THROWS_AS(make_params(0, 2.0), std::domain_error);
  CHECK_THROWS_AS(make_params(100, 1.0), std::domain_error);
}

TEST_CASE("p2_plus values and identities") {
  CHECK(p2_plus(0.0) == 0.0);
  CHECK(p2_plus(1.0) == doctest::Approx(0.2642411177).epsilon(1e-10));
  for (double lambda : kLambdaGrid) {
    const double mu = conjugate(lambda);
    CHECK(std::abs(p2_plus(lambda - mu) - (1.0 - mu) * (1.0 - mu / lambda)) <= 1e-12);
  }
  // strictly increasing on x > 0
  double prev = 0.0;
  for (double x = 0.25; x <= 8.0; x += 0.25) {
    CHECK(p2_plus(x) > prev);
    prev = p2_plus(x);
  }
  CHECK_THROWS_AS(p2_plus(-0.1), std::domain_error);
}

TEST_CASE("moments at lambda=2 match the closed forms") {
  const ModelParams p = make_params(100000, 2.0);
  const MomentVector m = moments(p);
  CHECK(m.b1 == doctest::Approx(0.473007011).epsilon(1e-8));
  CHECK(m.b2 == doctest::Approx(0.323805119).epsilon(1e-8));
  CHECK(m.b3 == doctest::Approx(0.161902559).epsilon(1e-8));
  CHECK(m.kernel_vertices == doctest::Approx(0.214995165 * 1e5).epsilon(1e-8));
  CHECK(m.kernel_edges == doctest::Approx(0.376897724 * 1e5).epsilon(1e-8));
  CHECK(m.core_edges == doctest::Approx(0.634909571 * 1e5).epsilon(1e-8));
  CHECK(m.core_vertices == doctest::Approx(m.b1 * 1e5));
  // at lambda=2, lambda+mu-2 == mu, so b3 is exactly b2/2
  CHECK(m.b3 == doctest::Approx(m.b2 / 2.0).epsilon(1e-14));
}

TEST_CASE("moment internal consistency across the grid") {
  for (double lambda : kLambdaGrid) {
    const ModelParams p = make_params(100000, lambda);
    const MomentVector m = moments(p);
    CHECK(std::abs(m.core_edges - m.core_vertices - m.b3 * 1e5) <= 1e-6 * 1e5);
  }
}

TEST_CASE("borel_pmf closed forms at small t") {
  const double mu = conjugate(2.0);
  CHECK(borel_pmf(mu, 1) == doctest::Approx(std::exp(-mu)).epsilon(1e-13));
  CHECK(borel_pmf(mu, 2) == doctest::Approx(mu * std::exp(-2.0 * mu)).epsilon(1e-13));
  CHECK(borel_pmf(0.5, 1) == doctest::Approx(std::exp(-0.5)).epsilon(1e-13));
}

TEST_CASE("borel_pmf sums to one") {
  const double mu = 0.4063757;
  double total = 0.0;
  for (std::int64_t t = 1; t <= 10000; ++t) total += borel_pmf(mu, t);
  CHECK(std::abs(total - 1.0) <= 1e-9);
}

TEST_CASE("borel mean and variance from partial sums") {
  for (double mu : {0.3, 0.5, 0.7, 0.9}) {
    double total = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::int64_t t = 1; t <= 1000000; ++t) {
      const double p = borel_pmf(mu, t);
      total += p;
      m1 += static_cast<double>(t) * p;
      m2 += static_cast<double>(t) * static_cast<double>(t) * p;
      if (static_cast<double>(t) * static_cast<double>(t) * p < 1e-18 && t > 10) break;
    }
    const double mean = 1.0 / (1.0 - mu);
    const double var = mu / std::pow(1.0 - mu, 3.0);
    CHECK(std::abs(total - 1.0) <= 1e-9);
    CHECK(std::abs(m1 - mean) <= 1e-6 * mean);
    CHECK(std::abs((m2 - m1 * m1) - var) <= 1e-6 * var);
  }
}

TEST_CASE("borel_pmf stays finite in log-space for huge t") {
  const double p = borel_pmf(0.9, 1000000);
  CHECK(std::isfinite(p));
  CHECK(p >= 0.0);
  CHECK(p < 1e-300);  // deep in the tail
}

TEST_CASE("geom_pmf") {
  CHECK(geom_pmf(0.4, 1) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(geom_pmf(0.5, 2) == doctest::Approx(0.25).epsilon(1e-14));
  double total = 0.0;
  for (std::int64_t k = 1; k <= 200; ++k) total += geom_pmf(0.5, k);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(geom_pmf(1.0, 1), std::domain_error);
  CHECK_THROWS_AS(geom_pmf(0.5, 0), std::domain_error);
}

TEST_CASE("log_factorial agrees with lgamma through the table boundary") {
  for (std::int64_t t : {0L, 1L, 5L, 170L, 9999L, 10000L, 10001L, 50000L, 1000000L}) {
    const double expect = std::lgamma(static_cast<double>(t) + 1.0);
    const double got = log_factorial(t);
    CHECK(std::abs(got - expect) <= 1e-10 * std::max(1.0, std::abs(expect)));
  }
}
