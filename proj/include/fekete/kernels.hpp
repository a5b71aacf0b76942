#ifndef FEKETE_KERNELS_HPP_
#define FEKETE_KERNELS_HPP_

#include "fekete/precision.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

namespace fekete::kernels {

// Pairwise O(n^2) kernels behind the energy and the Newton solver. The serial
// versions are the reference implementations; the parallel versions split by
// row under OpenMP and combine the row partials in index order, so their
// result does not depend on the thread count.

template <class Real>
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <class Real>
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

namespace serial {

/// sum_{j<k} log|x_j - x_k|
template <class Real>
Real pairwise_log_distance_sum(std::span<const Real> x);

/// Gradient of -2[p sum log(1-x_i) + sum_{j<k} log|x_j-x_k| + q sum log(1+x_i)].
template <class Real>
Vector<Real> potential_gradient(std::span<const Real> x, const Real& p, const Real& q);

template <class Real>
Matrix<Real> potential_hessian(std::span<const Real> x, const Real& p, const Real& q);

}  // namespace serial

namespace parallel {

template <class Real>
Real pairwise_log_distance_sum(std::span<const Real> x);

template <class Real>
Vector<Real> potential_gradient(std::span<const Real> x, const Real& p, const Real& q);

template <class Real>
Matrix<Real> potential_hessian(std::span<const Real> x, const Real& p, const Real& q);

}  // namespace parallel

/// Number of OpenMP threads a parallel region would use (1 without OpenMP).
int max_threads();

/// Runs fn(i) for i in [0, count) across threads. Each call must write only
/// its own slot; the first exception (lowest i) is rethrown after the loop.
template <class Fn>
void for_each_row(std::size_t count, Fn&& fn) {
  std::vector<std::exception_ptr> failures(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

}  // namespace fekete::kernels

#endif  // FEKETE_KERNELS_HPP_
