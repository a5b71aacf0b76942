#include "fekete/kernels.hpp"

#include "fekete/summation.hpp"

#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fekete::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

template <class Real>
Real row_log_distance_sum(std::span<const Real> x, std::size_t j) {
  using std::abs;
  using std::log;
  CompensatedSum<Real> row;
  for (std::size_t k = j + 1; k < x.size(); ++k) row += log(abs(x[j] - x[k]));
  return row.value();
}

template <class Real>
Real gradient_component(std::span<const Real> x, std::size_t i, const Real& p, const Real& q) {
  CompensatedSum<Real> g;
  g += p / (1 - x[i]);
  g += -q / (1 + x[i]);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != i) g += -1 / (x[i] - x[j]);
  }
  return 2 * g.value();
}

template <class Real>
void hessian_row(std::span<const Real> x, std::size_t i, const Real& p, const Real& q,
                 Matrix<Real>& h) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto ii = static_cast<Eigen::Index>(i);
  CompensatedSum<Real> diag;
  diag += p / ((1 - x[i]) * (1 - x[i]));
  diag += q / ((1 + x[i]) * (1 + x[i]));
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j == ii) continue;
    const Real d = x[i] - x[static_cast<std::size_t>(j)];
    const Real w = 1 / (d * d);
    diag += w;
    h(ii, j) = -2 * w;
  }
  h(ii, ii) = 2 * diag.value();
}

}  // namespace

namespace serial {

template <class Real>
Real pairwise_log_distance_sum(std::span<const Real> x) {
  using std::abs;
  using std::log;
  CompensatedSum<Real> sum;
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t k = j + 1; k < x.size(); ++k) sum += log(abs(x[j] - x[k]));
  }
  return sum.value();
}

template <class Real>
Vector<Real> potential_gradient(std::span<const Real> x, const Real& p, const Real& q) {
  Vector<Real> g(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    g(static_cast<Eigen::Index>(i)) = gradient_component(x, i, p, q);
  }
  return g;
}

template <class Real>
Matrix<Real> potential_hessian(std::span<const Real> x, const Real& p, const Real& q) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Matrix<Real> h(n, n);
  for (std::size_t i = 0; i < x.size(); ++i) hessian_row(x, i, p, q, h);
  return h;
}

}  // namespace serial

namespace parallel {

template <class Real>
Real pairwise_log_distance_sum(std::span<const Real> x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  std::vector<Real> rows(x.size(), Real(0));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    rows[static_cast<std::size_t>(j)] = row_log_distance_sum(x, static_cast<std::size_t>(j));
  }
  CompensatedSum<Real> sum;
  for (const auto& r : rows) sum += r;
  return sum.value();
}

template <class Real>
Vector<Real> potential_gradient(std::span<const Real> x, const Real& p, const Real& q) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  Vector<Real> g(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    g(i) = gradient_component(x, static_cast<std::size_t>(i), p, q);
  }
  return g;
}

template <class Real>
Matrix<Real> potential_hessian(std::span<const Real> x, const Real& p, const Real& q) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  Matrix<Real> h(n, n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) hessian_row(x, static_cast<std::size_t>(i), p, q, h);
  return h;
}

}  // namespace parallel

#define FEKETE_INSTANTIATE_KERNELS(R)                                                          \
  template R serial::pairwise_log_distance_sum<R>(std::span<const R>);                        \
  template Vector<R> serial::potential_gradient<R>(std::span<const R>, const R&, const R&);   \
  template Matrix<R> serial::potential_hessian<R>(std::span<const R>, const R&, const R&);    \
  template R parallel::pairwise_log_distance_sum<R>(std::span<const R>);                      \
  template Vector<R> parallel::potential_gradient<R>(std::span<const R>, const R&, const R&); \
  template Matrix<R> parallel::potential_hessian<R>(std::span<const R>, const R&, const R&);

FEKETE_INSTANTIATE_KERNELS(double)
FEKETE_INSTANTIATE_KERNELS(quad)

}  // namespace fekete::kernels
