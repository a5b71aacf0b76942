#include "fekete/convergence.hpp"

#include "fekete/energy.hpp"
#include "fekete/errors.hpp"
#include "fekete/jacobi.hpp"
#include "fekete/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fekete {

int min_degree(ExpansionKind kind) {
  switch (kind) {
    case ExpansionKind::interval_E0:
    case ExpansionKind::general_interval_E0:
    case ExpansionKind::elliptic_E0:
      return 2;
    default:
      return 1;
  }
}

template <class Real>
Real exact_value(const Problem<Real>& problem, int n) {
  if (n < min_degree(problem.kind)) {
    throw DomainError("degree " + std::to_string(n) + " too small for " +
                      std::string(to_string(problem.kind)));
  }
  const auto params = JacobiParams<Real>::from_charges(problem.p, problem.q);
  switch (problem.kind) {
    case ExpansionKind::log_lambda:
      return leading_coeff_log(n, params);
    case ExpansionKind::log_P1:
      return value_at_one_log(n, params);
    case ExpansionKind::log_D:
      return discriminant_log(n, params);
    case ExpansionKind::potential:
      return potential_energy_exact(n, problem.p, problem.q);
    case ExpansionKind::elliptic_E0:
      return elliptic_log_energy_exact(n, problem.p, problem.q);
    case ExpansionKind::interval_E0:
      return interval_energy_exact<Real>(n);
    case ExpansionKind::general_interval_E0:
      return interval_energy_exact(IntervalSpec<Real>(problem.a, problem.b), n);
  }
  throw DomainError("unknown expansion kind");
}

template <class Real>
Expansion<Real> build_expansion(const Problem<Real>& problem, int M) {
  const auto params = JacobiParams<Real>::from_charges(problem.p, problem.q);
  switch (problem.kind) {
    case ExpansionKind::log_lambda:
      return leading_coeff_expansion(params, M);
    case ExpansionKind::log_P1:
      return value_at_one_expansion(params, M);
    case ExpansionKind::log_D:
      return discriminant_expansion(params, M);
    case ExpansionKind::potential:
      return potential_energy_expansion(problem.p, problem.q, M);
    case ExpansionKind::elliptic_E0:
      return elliptic_log_energy_expansion(problem.p, problem.q, M);
    case ExpansionKind::interval_E0:
      return interval_energy_expansion<Real>(M);
    case ExpansionKind::general_interval_E0:
      return general_interval_energy_expansion(IntervalSpec<Real>(problem.a, problem.b), M);
  }
  throw DomainError("unknown expansion kind");
}

template <class Real>
ConvergenceTable<Real> convergence_table(const Problem<Real>& problem, std::span<const int> ns,
                                         int M) {
  if (M < 0) throw DomainError("convergence_table: truncation order must be >= 0");
  // Some expansions need at least one tail term to be built; truncation at
  // M' = 0 is still available from them.
  const auto expansion = build_expansion(problem, std::max(M, 1));
  ConvergenceTable<Real> table;
  table.ns.assign(ns.begin(), ns.end());
  table.exact.resize(ns.size());
  table.truncated.resize(ns.size());
  table.errors.resize(ns.size());
  kernels::for_each_row(ns.size(), [&](std::size_t i) {
    const int n = ns[i];
    const Real exact = exact_value(problem, n);
    std::vector<Real> approx(static_cast<std::size_t>(M) + 1);
    std::vector<Real> err(approx.size());
    for (int k = 0; k <= M; ++k) {
      approx[static_cast<std::size_t>(k)] = evaluate_expansion(expansion, Real(n), k);
      err[static_cast<std::size_t>(k)] = exact - approx[static_cast<std::size_t>(k)];
    }
    table.exact[i] = exact;
    table.truncated[i] = std::move(approx);
    table.errors[i] = std::move(err);
  });
  return table;
}

template <class Real>
Real noise_floor(const Real& exact) {
  using std::abs;
  using std::max;
  return 256 * machine_epsilon<Real>() * max(Real(1), abs(exact));
}

SlopeFit fit_loglog_slope(std::span<const double> n, std::span<const double> err,
                          std::span<const bool> skip) {
  if (n.size() != err.size() || (!skip.empty() && skip.size() != n.size())) {
    throw DomainError("fit_loglog_slope: mismatched lengths");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!skip.empty() && skip[i]) continue;
    if (!(err[i] != 0) || !std::isfinite(err[i]) || !(n[i] > 0)) continue;
    xs.push_back(std::log(n[i]));
    ys.push_back(std::log(std::abs(err[i])));
  }
  SlopeFit fit;
  fit.points_used = static_cast<int>(xs.size());
  if (xs.size() < 2) return fit;
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) {
    fit.points_used = 1;
    return fit;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

template <class Real>
int optimal_truncation(std::span<const Real> row_errors) {
  using std::abs;
  if (row_errors.empty()) throw DomainError("optimal_truncation: empty row");
  int best = 0;
  for (std::size_t k = 1; k < row_errors.size(); ++k) {
    if (abs(row_errors[k]) < abs(row_errors[static_cast<std::size_t>(best)])) {
      best = static_cast<int>(k);
    }
  }
  return best;
}

#define FEKETE_INSTANTIATE_CONVERGENCE(R)                                                       \
  template R exact_value<R>(const Problem<R>&, int);                                            \
  template Expansion<R> build_expansion<R>(const Problem<R>&, int);                             \
  template ConvergenceTable<R> convergence_table<R>(const Problem<R>&, std::span<const int>,    \
                                                    int);                                       \
  template R noise_floor<R>(const R&);                                                          \
  template int optimal_truncation<R>(std::span<const R>);

FEKETE_INSTANTIATE_CONVERGENCE(double)
FEKETE_INSTANTIATE_CONVERGENCE(quad)

}  // namespace fekete
