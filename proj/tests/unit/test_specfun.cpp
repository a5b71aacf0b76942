#include "fekete/errors.hpp"
#include "fekete/specfun.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <random>
#include <vector>

using fekete::quad;
using fekete::Rational;

namespace {

double slope_over(const std::vector<double>& xs, const std::function<double(double)>& err) {
  std::vector<double> e;
  for (double x : xs) e.push_back(err(x));
  return oracle::loglog_slope(xs, e);
}

}  // namespace

TEST_CASE("Bernoulli numbers match the Akiyama-Tanigawa oracle") {
  const auto& table = fekete::BernoulliTable::instance();
  for (int m = 0; m <= table.max_degree(); ++m) {
    CAPTURE(m);
    CHECK(table.number(m) == oracle::bernoulli_number(m));
  }
  CHECK(table.number(1) == Rational(-1, 2));
  for (int k = 1; 2 * k + 1 <= table.max_degree(); ++k) CHECK(table.number(2 * k + 1) == 0);
  CHECK_THROWS_AS(table.number(table.max_degree() + 1), fekete::CapacityError);
}

TEST_CASE("Bernoulli polynomials satisfy the difference equation exactly") {
  const auto& table = fekete::BernoulliTable::instance();
  const std::vector<Rational> xs{Rational(-2), Rational(-3, 7), Rational(0), Rational(5, 11),
                                 Rational(3)};
  for (int m = 1; m <= table.max_order(); ++m) {
    for (const auto& x : xs) {
      Rational xp = 1;
      for (int k = 0; k < m - 1; ++k) xp *= x;
      CHECK(table.poly(m, x + 1) - table.poly(m, x) == m * xp);
      CHECK(table.poly(m, x) == oracle::bernoulli_poly(m, x));
    }
  }
}

TEST_CASE("floating Bernoulli polynomials") {
  CHECK(fekete::bernoulli_poly<double>(0, 0.7) == 1.0);
  CHECK(fekete::bernoulli_poly<double>(1, 0.0) == -0.5);
  CHECK(fekete::bernoulli_poly<double>(4, 0.0) == doctest::Approx(-1.0 / 30).epsilon(1e-15));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2, 3);
  for (int m = 1; m <= 32; ++m) {
    const double x = u(rng);
    const double upper = fekete::bernoulli_poly<double>(m, x + 1);
    const double lower = fekete::bernoulli_poly<double>(m, x);
    const double rhs = m * std::pow(x, m - 1);
    // the coefficients are rounded, so the attainable accuracy is set by the
    // absolute coefficient sums rather than by the values themselves
    const double scale = std::max({1.0, oracle::bernoulli_poly_condition(m, x + 1),
                                   oracle::bernoulli_poly_condition(m, x), std::abs(rhs)});
    CAPTURE(m);
    CAPTURE(x);
    CHECK(std::abs((upper - lower) - rhs) <= 1e-14 * scale);
  }
  CHECK_THROWS_AS(fekete::bernoulli_poly<double>(35, 0.5), fekete::CapacityError);
}

TEST_CASE("Hurwitz zeta at negative integers") {
  CHECK(fekete::hurwitz_zeta_negint<double>(1, 1.0) == doctest::Approx(-1.0 / 12).epsilon(1e-15));
  CHECK(fekete::hurwitz_zeta_negint<double>(0, 1.0) == -0.5);
  CHECK(fekete::hurwitz_zeta_negint<double>(1, 2.0) == doctest::Approx(-13.0 / 12).epsilon(1e-15));
  CHECK(fekete::hurwitz_zeta_negint_exact(1, Rational(2)) == Rational(-13, 12));
  CHECK_THROWS_AS(fekete::hurwitz_zeta_negint<double>(2, -1.0), fekete::DomainError);
  for (int m = 0; m <= 20; ++m) {
    CHECK(fekete::riemann_zeta_negint<double>(m) == fekete::hurwitz_zeta_negint<double>(m, 1.0));
    for (const Rational a : {Rational(3, 10), Rational(7, 5), Rational(13, 4)}) {
      CHECK(fekete::hurwitz_zeta_negint_exact(m, a) == oracle::hurwitz_negint(m, a));
      // zeta(-m, a) - zeta(-m, a+1) = a^m
      Rational am = 1;
      for (int k = 0; k < m; ++k) am *= a;
      CHECK(fekete::hurwitz_zeta_negint_exact(m, a) - fekete::hurwitz_zeta_negint_exact(m, a + 1) == am);
    }
  }
}

TEST_CASE("log Gamma and its Stirling expansion") {
  CHECK(fekete::log_gamma<double>(1.0) == 0.0);
  CHECK(fekete::log_gamma<double>(2.0) == 0.0);
  CHECK(fekete::log_gamma<double>(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-15));
  CHECK_THROWS_AS(fekete::log_gamma<double>(0.0), fekete::DomainError);
  CHECK_THROWS_AS(fekete::log_gamma<double>(-1.5), fekete::DomainError);

  CHECK(std::abs(fekete::log_gamma_asym<double>(10, 1, 0) - fekete::log_gamma<double>(11)) <= 1.0 / 120);
  CHECK(fekete::log_gamma_asym<double>(10, 0, 0) ==
        doctest::Approx(9.5 * std::log(10.0) - 10 + 0.5 * std::log(2 * M_PI)).epsilon(1e-14));
  CHECK(std::abs(fekete::log_gamma_asym<double>(50, 1, 3) - fekete::log_gamma<double>(51)) <= 1e-8);

  const std::vector<double> xs{20, 40, 80, 160};
  for (int M = 0; M <= 3; ++M) {
    const double s = slope_over(xs, [&](double x) {
      return static_cast<double>(fekete::log_gamma_asym<quad>(x, 0.3, M) - fekete::log_gamma<quad>(quad(x) + 0.3));
    });
    CAPTURE(M);
    CHECK(std::abs(s + (M + 1)) <= 0.2);
  }
}

TEST_CASE("negapolygamma anchors and quadrature oracle") {
  CHECK(fekete::negapolygamma2<double>(0.0) == 0.0);
  CHECK(std::abs(fekete::negapolygamma2<double>(1.0) - 0.5 * std::log(2 * M_PI)) <= 1e-14);
  CHECK(std::abs(fekete::negapolygamma2<double>(2.0) - (std::log(2 * M_PI) - 1)) <= 1e-14);
  CHECK_THROWS_AS(fekete::negapolygamma2<double>(-0.1), fekete::DomainError);
  for (double x : {0.05, 0.3, 0.5, 0.9, 1.4, 2.6, 5.0, 12.25}) {
    CAPTURE(x);
    CHECK(std::abs(fekete::negapolygamma2<double>(x) - oracle::negapolygamma2_quadrature<double>(x)) <=
          1e-13 * std::max(1.0, std::abs(x * x)));
  }
  for (const char* text : {"0.3", "1.4", "2.6", "7.5"}) {
    const quad x(text);
    CHECK(abs(fekete::negapolygamma2<quad>(x) - oracle::negapolygamma2_quadrature<quad>(x)) <= quad("1e-30"));
  }
}

TEST_CASE("Glaisher constant and zeta'(-1)") {
  const auto& c = fekete::constants<double>();
  CHECK(std::abs(std::exp(c.log_glaisher) - 1.28242712) <= 1e-8);
  CHECK(c.zeta_prime_neg1 == 1.0 / 12 - c.log_glaisher);
  const quad zp = oracle::zeta_prime_at_minus_one();
  CHECK(abs(fekete::constants<quad>().zeta_prime_neg1 - zp) <= quad("1e-22"));

  CHECK(std::abs(fekete::zeta_prime_neg1_exact<double>(1.0) - c.zeta_prime_neg1) <= 1e-14);
  CHECK(std::abs(fekete::zeta_prime_neg1_exact<double>(2.0) - c.zeta_prime_neg1) <= 1e-14);
  CHECK_THROWS_AS(fekete::zeta_prime_neg1_exact<double>(0.0), fekete::DomainError);
}

TEST_CASE("zeta'(-1, x) asymptotics") {
  CHECK_THROWS_AS(fekete::zeta_prime_neg1_asym<double>(10, 1, 1), fekete::DomainError);
  CHECK(std::abs(fekete::zeta_prime_neg1_asym<double>(40, 1, 2) - fekete::zeta_prime_neg1_exact<double>(41)) <=
        2.0 / (40.0 * 40.0));
  const quad diff = fekete::zeta_prime_neg1_asym<quad>(40, quad(0.5), 6) - fekete::zeta_prime_neg1_exact<quad>(quad(40.5));
  CHECK(abs(diff) <= quad("1e-10"));

  const std::vector<double> xs{20, 40, 80, 160};
  for (int K = 2; K <= 5; ++K) {
    const double s = slope_over(xs, [&](double x) {
      return static_cast<double>(fekete::zeta_prime_neg1_asym<quad>(x, quad(0.3), K) -
                                 fekete::zeta_prime_neg1_exact<quad>(quad(x) + quad(0.3)));
    });
    CAPTURE(K);
    CHECK(std::abs(s + K) <= 0.2);
  }
}
