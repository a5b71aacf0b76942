#ifndef FEKETE_SPECFUN_HPP_
#define FEKETE_SPECFUN_HPP_

#include "fekete/precision.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace fekete {

using Rational = boost::multiprecision::cpp_rational;

/**
 * Exact Bernoulli numbers B_0..B_{max_order+2} and the coefficient rows of
 * the Bernoulli polynomials of degree <= max_order+2.
 *
 * Convention: B_1 = -1/2, so that B_1(x) = x - 1/2 and
 * zeta(-m, a) = -B_{m+1}(a)/(m+1) holds for every m >= 0.
 */
class BernoulliTable {
 public:
  static constexpr int kDefaultMaxOrder = 32;

  explicit BernoulliTable(int max_order = kDefaultMaxOrder);

  /// Process-wide table of the default size, built once.
  static const BernoulliTable& instance();

  int max_order() const { return max_order_; }
  int max_degree() const { return max_order_ + 2; }

  const Rational& number(int m) const;
  /// Coefficients c_k of x^k, k = 0..m.
  const std::vector<Rational>& poly_coeffs(int m) const;
  /// Exact B_m(x) at rational x.
  Rational poly(int m, const Rational& x) const;

 private:
  void check_degree(int m) const;

  int max_order_;
  std::vector<Rational> numbers_;
  std::vector<std::vector<Rational>> coeffs_;
};

/// Rational -> Real, rounded once.
template <class Real>
Real to_real(const Rational& r);

template <class Real>
struct Constants {
  Real log2;
  Real log_pi;
  Real half_log_2pi;
  Real euler_gamma;
  Real log_glaisher;     // log A
  Real zeta_prime_neg1;  // zeta'(-1) = 1/12 - log A
};

template <class Real>
const Constants<Real>& constants();

/// B_m(x), compensated Horner evaluation of the exact coefficient row.
template <class Real>
Real bernoulli_poly(int m, const Real& x);

/// zeta(-m, a) = -B_{m+1}(a)/(m+1) for a > -1.
template <class Real>
Real hurwitz_zeta_negint(int m, const Real& a);

Rational hurwitz_zeta_negint_exact(int m, const Rational& a);

/// zeta(-m) = zeta(-m, 1).
template <class Real>
Real riemann_zeta_negint(int m);

/// zeta(k) for integer k >= 2.
template <class Real>
Real riemann_zeta_int(int k);

template <class Real>
Real log_gamma(const Real& x);

/**
 * Stirling-type expansion of log Gamma(x + a) truncated after M terms:
 *   (x+a-1/2) log x - x + log(2 pi)/2 - sum_{m=1}^{M} (-1)^(m-1)/m zeta(-m,a) x^(-m).
 * Requires x >= 1.
 */
template <class Real>
Real log_gamma_asym(const Real& x, const Real& a, int M);

/**
 * psi^(-2)(x) = integral_0^x log Gamma(t) dt.
 *
 * The log singularity at t = 0 is integrated analytically through the series
 * log Gamma(t) = -log t - gamma t + sum_{k>=2} zeta(k) (-t)^k / k on
 * [0, min(x, 1/2)]; the rest uses 30-point Gauss-Legendre panels of unit width.
 */
template <class Real>
Real negapolygamma2(const Real& x);

/// d/ds zeta(s, x) at s = -1, through psi^(-2).
template <class Real>
Real zeta_prime_neg1_exact(const Real& x);

/// Large-x expansion of zeta'(-1, x + a) keeping the x^(-k) terms k < K.
template <class Real>
Real zeta_prime_neg1_asym(const Real& x, const Real& a, int K);

}  // namespace fekete

#endif  // FEKETE_SPECFUN_HPP_
