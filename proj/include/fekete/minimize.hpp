#ifndef FEKETE_MINIMIZE_HPP_
#define FEKETE_MINIMIZE_HPP_

#include "fekete/energy.hpp"
#include "fekete/kernels.hpp"

#include <span>
#include <vector>

namespace fekete {

template <class Real>
struct SolveReport {
  Configuration<Real> points;
  int iterations = 0;
  Real grad_norm{0};  // max-norm of the gradient at the returned points
  bool converged = false;
  Real energy{0};
};

inline constexpr int kMaxNewtonIterations = 200;
inline constexpr double kDefaultSolveTolerance = 1e-10;

/// Gradient of the potential energy:
///   2[p/(1-x_i) - q/(1+x_i) - sum_{j != i} 1/(x_i - x_j)].
/// Throws DomainError for boundary or coincident points.
template <class Real>
kernels::Vector<Real> gradient(std::span<const Real> points, const Real& p, const Real& q);

/// Throws DomainError if the configuration carries no charges.
template <class Real>
kernels::Vector<Real> gradient(const Configuration<Real>& c);

/// Damped Newton from scaled Chebyshev points. Running out of iterations or
/// failing to find a descent step yields a report with converged = false.
template <class Real>
SolveReport<Real> minimize_potential(int n, const Real& p, const Real& q,
                                     const Real& tol = Real(kDefaultSolveTolerance));

/// The same iteration from a caller-supplied start, which must be strictly
/// increasing and inside (-1, 1).
template <class Real>
SolveReport<Real> minimize_potential_from(std::vector<Real> start, const Real& p, const Real& q,
                                          const Real& tol = Real(kDefaultSolveTolerance));

/// N-point Fekete configuration of [-1, 1]. Both endpoints always belong to
/// it, so only the N-2 interior points are optimised (with unit charges).
/// The report's energy is the logarithmic energy of all N points.
template <class Real>
SolveReport<Real> fekete_maximize(int N, const Real& tol = Real(kDefaultSolveTolerance));

}  // namespace fekete

#endif  // FEKETE_MINIMIZE_HPP_
