#ifndef FEKETE_CONVERGENCE_HPP_
#define FEKETE_CONVERGENCE_HPP_

#include "fekete/asym.hpp"

#include <span>
#include <vector>

namespace fekete {

/// One quantity with an exact finite-n value and an asymptotic expansion.
/// Jacobi quantities use alpha = 2p-1 and beta = 2q-1; [a, b] is used by
/// the general interval kind only.
template <class Real>
struct Problem {
  ExpansionKind kind{ExpansionKind::interval_E0};
  Real p{1};
  Real q{1};
  Real a{-1};
  Real b{1};
};

/// Smallest n (or N) at which the exact value is defined.
int min_degree(ExpansionKind kind);

template <class Real>
Real exact_value(const Problem<Real>& problem, int n);

template <class Real>
Expansion<Real> build_expansion(const Problem<Real>& problem, int M);

/// errors[i][k] = exact[i] - (expansion truncated after k tail terms), k = 0..M.
template <class Real>
struct ConvergenceTable {
  std::vector<int> ns;
  std::vector<Real> exact;
  std::vector<std::vector<Real>> truncated;
  std::vector<std::vector<Real>> errors;
};

/// Rows are computed in parallel and stored in the order of `ns`.
template <class Real>
ConvergenceTable<Real> convergence_table(const Problem<Real>& problem, std::span<const int> ns,
                                         int M);

/// Errors below this are dominated by rounding in the exact value.
template <class Real>
Real noise_floor(const Real& exact);

struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  int points_used = 0;
};

/// Least-squares fit of log|err| against log n over the points whose error
/// is nonzero and not flagged in `skip`. Fewer than two usable points leaves
/// points_used < 2 and slope 0.
SlopeFit fit_loglog_slope(std::span<const double> n, std::span<const double> err,
                          std::span<const bool> skip = {});

/// Truncation order with the smallest absolute error in one table row.
template <class Real>
int optimal_truncation(std::span<const Real> row_errors);

}  // namespace fekete

#endif  // FEKETE_CONVERGENCE_HPP_
