#include "fekete/errors.hpp"
#include "fekete/jacobi.hpp"
#include "fekete/minimize.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <random>
#include <vector>

using fekete::JacobiParams;

namespace {

double max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

fekete::kernels::Vector<double> grad(const std::vector<double>& x, double p, double q) {
  return fekete::gradient<double>(std::span<const double>(x), p, q);
}

}  // namespace

TEST_CASE("gradient") {
  CHECK(grad({0.0}, 1, 1)[0] == 0.0);
  CHECK(std::abs(grad({-1.0 / 3}, 2, 1)[0]) <= 1e-15);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = oracle::random_interior(rng, 1 + trial % 9);
    const auto g = grad(x, 0.75, 1.5);
    const auto fd = oracle::fd_gradient(x, 0.75, 1.5, 1e-6);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(g[static_cast<Eigen::Index>(i)] - fd[i]) <= 1e-6 * std::max(1.0, std::abs(fd[i])));
  }
  CHECK_THROWS_AS(grad({0.1, 0.1}, 1, 1), fekete::DomainError);
  CHECK_THROWS_AS(grad({-1.0, 0.1}, 1, 1), fekete::DomainError);
  fekete::Configuration<double> c{{0.1, 0.3}, std::nullopt};
  CHECK_THROWS_AS(fekete::gradient(c), fekete::DomainError);
}

TEST_CASE("Jacobi zeros are stationary") {
  for (int n : {1, 5, 20, 60, 100}) {
    for (const auto& [p, q] : {std::pair<double, double>{1, 1}, {0.75, 1.5}, {2, 0.6}}) {
      const auto z = fekete::zeros(n, JacobiParams<double>::from_charges(p, q));
      CHECK(grad(z.points, p, q).cwiseAbs().maxCoeff() <= 1e-8 * n);
    }
  }
}

TEST_CASE("minimize_potential") {
  const auto one = fekete::minimize_potential<double>(1, 1, 1);
  CHECK(one.converged);
  CHECK(std::abs(one.points.points[0]) <= 1e-12);
  const auto two = fekete::minimize_potential<double>(2, 1, 1);
  CHECK(std::abs(two.points.points[1] - 1 / std::sqrt(5.0)) <= 1e-8);
  CHECK(std::abs(two.points.points[0] + 1 / std::sqrt(5.0)) <= 1e-8);

  for (int n : {3, 20, 45}) {
    const auto r = fekete::minimize_potential<double>(n, 0.75, 1.5);
    CHECK(r.converged);
    CHECK(r.grad_norm <= 1e-10);
    CHECK(r.iterations <= fekete::kMaxNewtonIterations);
    const auto z = fekete::zeros(n, JacobiParams<double>(0.5, 2.0));
    CHECK(max_deviation(r.points.points, z.points) <= 1e-9);
    CHECK(r.energy >= fekete::potential_energy_exact<double>(n, 0.75, 1.5) - 1e-9);
    CHECK(oracle::rel_close(r.energy, fekete::potential_energy_exact<double>(n, 0.75, 1.5), 1e-12));
  }
  CHECK_THROWS_AS(fekete::minimize_potential<double>(0, 1, 1), fekete::DomainError);
  CHECK_THROWS_AS(fekete::minimize_potential<double>(3, 1, 1, 0.0), fekete::DomainError);

  // an unreachable tolerance is reported, not thrown
  const auto strict = fekete::minimize_potential<double>(30, 1, 1, 1e-300);
  CHECK_FALSE(strict.converged);
  CHECK(strict.grad_norm > 1e-300);

  const auto rq = fekete::minimize_potential<fekete::quad>(12, fekete::quad(2), fekete::quad(0.6), fekete::quad("1e-28"));
  CHECK(rq.converged);
}

TEST_CASE("random starts reach the same configuration") {
  std::mt19937_64 rng(99);
  for (const auto& [p, q] : {std::pair<double, double>{1, 1}, {0.75, 1.5}, {2, 0.6}}) {
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 1 + trial % 12;
      const auto reference = fekete::minimize_potential<double>(n, p, q);
      const auto r = fekete::minimize_potential_from<double>(oracle::random_interior(rng, n, 1e-3), p, q);
      CAPTURE(n);
      CHECK(r.converged);
      if (r.converged) CHECK(max_deviation(r.points.points, reference.points.points) <= 1e-7);
    }
  }
  CHECK_THROWS_AS(fekete::minimize_potential_from<double>({0.2, 0.1}, 1, 1), fekete::DomainError);
}

TEST_CASE("fekete_maximize") {
  const auto two = fekete::fekete_maximize<double>(2);
  CHECK(two.points.points == std::vector<double>{-1, 1});
  const auto three = fekete::fekete_maximize<double>(3);
  CHECK(max_deviation(three.points.points, {-1, 0, 1}) <= 1e-12);
  const double s5 = 1 / std::sqrt(5.0);
  const auto four = fekete::fekete_maximize<double>(4);
  CHECK(max_deviation(four.points.points, {-1, -s5, s5, 1}) <= 1e-12);
  CHECK_THROWS_AS(fekete::fekete_maximize<double>(1), fekete::DomainError);
  for (int N = 2; N <= 60; ++N) {
    const auto r = fekete::fekete_maximize<double>(N);
    CHECK(r.converged);
    const double e = fekete::log_energy_config<double>(std::span<const double>(r.points.points)).value();
    CHECK(std::abs(e - fekete::interval_energy_exact<double>(N)) <= 1e-8);
  }
}
