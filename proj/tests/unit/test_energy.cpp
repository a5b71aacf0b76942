#include "fekete/energy.hpp"
#include "fekete/errors.hpp"
#include "fekete/jacobi.hpp"
#include "fekete/specfun.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <random>
#include <vector>

using fekete::JacobiParams;

namespace {

double config_energy(const std::vector<double>& x) {
  return fekete::log_energy_config<double>(std::span<const double>(x)).value();
}

double potential_config(const std::vector<double>& x, double p, double q) {
  return fekete::potential_energy_config<double>(std::span<const double>(x), p, q).value();
}

const double kLog4 = std::log(4.0);

}  // namespace

TEST_CASE("configuration energies") {
  CHECK(config_energy({-1, 1}) == doctest::Approx(-kLog4).epsilon(1e-15));
  CHECK(config_energy({-1, 0, 1}) == doctest::Approx(-kLog4).epsilon(1e-15));
  CHECK(config_energy({0.2, -0.8}) == doctest::Approx(0.0));
  const std::vector<double> dup{0.1, -0.3, 0.1};
  CHECK(fekete::log_energy_config<double>(std::span<const double>(dup)).is_infinite());
  CHECK_THROWS_AS(fekete::log_energy_config<double>(std::span<const double>(dup)).value(), fekete::DomainError);
  const std::vector<double> outside{0.0, 1.5};
  CHECK_THROWS_AS(fekete::log_energy_config<double>(std::span<const double>(outside)), fekete::DomainError);

  CHECK(potential_config({0.0}, 1, 1) == 0.0);
  const double x = -1.0 / 3;
  CHECK(potential_config({x}, 2, 1) ==
        doctest::Approx(-2 * (2 * std::log(4.0 / 3) + std::log(2.0 / 3))).epsilon(1e-15));
  const std::vector<double> endpoint{-0.5, 1.0};
  CHECK(fekete::potential_energy_config<double>(std::span<const double>(endpoint), 1.0, 1.0).is_infinite());

  fekete::Configuration<double> c{{-0.2, 0.4}, std::nullopt};
  CHECK_THROWS_AS(fekete::potential_energy_config(c), fekete::DomainError);
  c.charges = fekete::Charges<double>{0.7, 1.3};
  CHECK(fekete::potential_energy_config(c).value() == doctest::Approx(oracle::potential_energy(c.points, 0.7, 1.3)));
}

TEST_CASE("exact potential and elliptic energies against the zeros") {
  CHECK(fekete::potential_energy_exact<double>(1, 0.8, 0.8) == doctest::Approx(0.0));
  const double s5 = 1 / std::sqrt(5.0);
  CHECK(std::abs(fekete::potential_energy_exact<double>(2, 1, 1) - potential_config({-s5, s5}, 1, 1)) <= 1e-12);
  CHECK(fekete::elliptic_log_energy_exact<double>(2, 1, 1) == doctest::Approx(std::log(5.0 / 4)).epsilon(1e-14));
  // zeros of P_2^{(0,0)} are +-1/sqrt(3), so the energy is -2 log(2/sqrt(3))
  CHECK(fekete::elliptic_log_energy_exact<double>(2, 0.5, 0.5) ==
        doctest::Approx(-std::log(4.0 / 3)).epsilon(1e-14));
  CHECK_THROWS_AS(fekete::elliptic_log_energy_exact<double>(1, 1, 1), fekete::DomainError);
  CHECK_THROWS_AS(fekete::potential_energy_exact<double>(3, 0, 1), fekete::DomainError);

  const auto z30 = fekete::zeros(30, JacobiParams<double>(1, 1));
  CHECK(oracle::rel_close(fekete::elliptic_log_energy_exact<double>(30, 1, 1), config_energy(z30.points), 1e-10));
  const auto z50 = fekete::zeros(50, JacobiParams<double>(0.4, 1.6));
  CHECK(oracle::rel_close(fekete::potential_energy_exact<double>(50, 0.7, 1.3),
                          oracle::potential_energy(z50.points, 0.7, 1.3), 1e-9));
}

TEST_CASE("zeros are a local minimum of the potential energy") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> noise(0, 1e-3);
  for (int n : {2, 10, 30}) {
    const auto z = fekete::zeros(n, JacobiParams<double>(0.5, 2.0));
    const double e0 = potential_config(z.points, 0.75, 1.5);
    for (int trial = 0; trial < 100; ++trial) {
      auto x = z.points;
      for (auto& v : x) v += noise(rng);
      std::sort(x.begin(), x.end());
      CHECK(potential_config(x, 0.75, 1.5) >= e0);
    }
  }
}

TEST_CASE("interval energies and discriminants") {
  CHECK(fekete::interval_energy_exact<double>(2) == doctest::Approx(-kLog4).epsilon(1e-15));
  CHECK(fekete::interval_energy_exact<double>(3) == doctest::Approx(-kLog4).epsilon(1e-15));
  const double s5 = 1 / std::sqrt(5.0);
  CHECK(std::abs(fekete::interval_energy_exact<double>(4) - config_energy({-1, -s5, s5, 1})) <= 1e-12);
  CHECK_THROWS_AS(fekete::interval_energy_exact<double>(1), fekete::DomainError);
  CHECK(fekete::discriminant_N_log<double>(2) == doctest::Approx(kLog4).epsilon(1e-15));
  CHECK(fekete::discriminant_N_log<double>(3) == doctest::Approx(kLog4).epsilon(1e-15));
  CHECK(oracle::rel_close(fekete::discriminant_N_log<double>(30), -fekete::interval_energy_exact<double>(30), 1e-11));

  // endpoint augmentation: the N-point optimum is the Jacobi(1,1) zeros plus +-1
  for (int n = 1; n <= 100; n += 11) {
    auto pts = fekete::zeros(n, JacobiParams<double>(1, 1)).points;
    pts.insert(pts.begin(), -1.0);
    pts.push_back(1.0);
    CHECK(oracle::rel_close(config_energy(pts), fekete::interval_energy_exact<double>(n + 2), 1e-10));
  }

  double previous = 1e300;
  for (int N = 10; N <= 200; ++N) {
    const double r = fekete::interval_energy_exact<double>(N) - (std::log(2.0) * N * N - N * std::log(N));
    CHECK(r < previous);
    previous = r;
  }
}

TEST_CASE("pq discriminant duality") {
  CHECK(fekete::pq_discriminant_log<double>(1, 0.9, 0.9) == doctest::Approx(0.0));
  CHECK(std::abs(fekete::pq_discriminant_log<double>(2, 1, 1) + fekete::potential_energy_exact<double>(2, 1, 1)) <=
        1e-12);
  CHECK(oracle::rel_close(fekete::pq_discriminant_log<double>(25, 0.6, 1.1),
                          -fekete::potential_energy_exact<double>(25, 0.6, 1.1), 1e-10));
}

TEST_CASE("shifted log sums") {
  CHECK(fekete::logsum_shifted<double>(0, 1, 0.0) == 0.0);
  CHECK(fekete::logsum_shifted<double>(0, 3, 0.0) == doctest::Approx(2 * std::log(2.0) + 3 * std::log(3.0)));
  CHECK(std::abs(fekete::logsum_shifted<double>(0, 100, 0.5) - fekete::logsum_shifted_zeta<double>(0, 100, 0.5)) <=
        1e-9);
  CHECK_THROWS_AS(fekete::logsum_shifted<double>(0, 3, -1.5), fekete::DomainError);
}

TEST_CASE("scaling laws") {
  const double l2 = std::log(2.0);
  CHECK(fekete::rescale_energy(fekete::EnergyKind::interval, 1.25, 1.0, 7, 1.0, 1.0) == 1.25);
  CHECK(fekete::rescale_energy(fekete::EnergyKind::potential, 0.0, 2.0, 1, 1.0, 1.0) ==
        doctest::Approx(-4 * l2));
  CHECK_THROWS_AS(fekete::rescale_energy(fekete::EnergyKind::interval, 0.0, 0.0, 3, 1.0, 1.0), fekete::DomainError);
  for (int N = 2; N <= 100; ++N) {
    const fekete::IntervalSpec<double> wide(-2, 2);
    CHECK(oracle::rel_close(fekete::interval_energy_exact(wide, N),
                            fekete::interval_energy_exact<double>(N) - l2 * (N * N - N), 1e-10));
  }
  const fekete::IntervalSpec<double> unit(0, 1);
  CHECK(unit.log_energy_constant() == doctest::Approx(std::log(4.0)));
  CHECK_THROWS_AS(fekete::IntervalSpec<double>(1, 1), fekete::DomainError);
}
