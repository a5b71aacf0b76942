#ifndef FEKETE_JACOBI_HPP_
#define FEKETE_JACOBI_HPP_

#include "fekete/precision.hpp"

#include <vector>

namespace fekete {

/// Exponents of the Jacobi weight (1-x)^alpha (1+x)^beta, alpha, beta > -1.
/// The endpoint charges are p = (alpha+1)/2 at x = 1 and q = (beta+1)/2 at x = -1.
template <class Real>
class JacobiParams {
 public:
  JacobiParams(const Real& alpha, const Real& beta);
  static JacobiParams from_charges(const Real& p, const Real& q);

  const Real& alpha() const { return alpha_; }
  const Real& beta() const { return beta_; }
  Real p() const { return (alpha_ + 1) / 2; }
  Real q() const { return (beta_ + 1) / 2; }
  JacobiParams swapped() const { return JacobiParams(beta_, alpha_); }

 private:
  Real alpha_;
  Real beta_;
};

/// Zeros of P_n^{(alpha,beta)}, ascending, all in (-1, 1).
template <class Real>
struct ZeroSet {
  int n = 0;
  std::vector<Real> points;
};

/// log lambda_n, lambda_n = 2^-n binom(2n+alpha+beta, n).
template <class Real>
Real leading_coeff_log(int n, const JacobiParams<Real>& params);

/// log P_n(1) = log[(1+alpha)_n / n!].
template <class Real>
Real value_at_one_log(int n, const JacobiParams<Real>& params);

/// log[(-1)^n P_n(-1)] = log[(1+beta)_n / n!].
template <class Real>
Real value_at_minus_one_signed_log(int n, const JacobiParams<Real>& params);

/// P_n(x) by the three-term recurrence.
template <class Real>
Real evaluate(int n, const JacobiParams<Real>& params, const Real& x);

/// d/dx P_n(x) = (n+alpha+beta+1)/2 * P_{n-1}^{(alpha+1,beta+1)}(x).
template <class Real>
Real evaluate_derivative(int n, const JacobiParams<Real>& params, const Real& x);

/**
 * Zeros from the eigenvalues of the symmetric tridiagonal Jacobi matrix,
 * followed by one Newton step on the recurrence. Throws NumericError if the
 * eigensolver fails or the Newton correction exceeds 1e-6 of the local gap.
 */
template <class Real>
ZeroSet<Real> zeros(int n, const JacobiParams<Real>& params);

/// log D_n from the closed product
///   2^{-n(n-1)} prod nu^{nu-2n+2} (nu+alpha)^{nu-1} (nu+beta)^{nu-1} (nu+n+alpha+beta)^{n-nu},
/// summed for nu = 1..n with compensation.
template <class Real>
Real discriminant_log(int n, const JacobiParams<Real>& params);

}  // namespace fekete

#endif  // FEKETE_JACOBI_HPP_
