#include "fekete/minimize.hpp"

#include "fekete/errors.hpp"
#include "fekete/specfun.hpp"

#include <Eigen/Cholesky>
#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace fekete {

namespace {

template <class Real>
bool ordered_interior(const std::vector<Real>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > -1 && x[i] < 1)) return false;
    if (i > 0 && !(x[i] > x[i - 1])) return false;
  }
  return true;
}

template <class Real>
Real max_norm(const kernels::Vector<Real>& v) {
  using std::abs;
  Real m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max<Real>(m, abs(v[i]));
  return m;
}

template <class Real>
std::vector<Real> chebyshev_start(int n) {
  using std::cos;
  const Real pi = boost::math::constants::pi<Real>();
  const Real shrink = 1 - Real(1) / n;
  std::vector<Real> x(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    // ascending: k = 0 is closest to -1
    x[static_cast<std::size_t>(k)] = -shrink * cos((2 * k + 1) * pi / (2 * n));
  }
  return x;
}

}  // namespace

template <class Real>
kernels::Vector<Real> gradient(std::span<const Real> points, const Real& p, const Real& q) {
  std::vector<Real> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (!ordered_interior(sorted)) {
    throw DomainError("gradient: points must be distinct and strictly inside (-1, 1)");
  }
  return kernels::parallel::potential_gradient(points, p, q);
}

template <class Real>
kernels::Vector<Real> gradient(const Configuration<Real>& c) {
  if (!c.charges) throw DomainError("configuration has no endpoint charges");
  return gradient<Real>(std::span<const Real>(c.points), c.charges->p, c.charges->q);
}

template <class Real>
SolveReport<Real> minimize_potential(int n, const Real& p, const Real& q, const Real& tol) {
  if (n < 1) throw DomainError("minimize_potential: requires n >= 1");
  return minimize_potential_from<Real>(chebyshev_start<Real>(n), p, q, tol);
}

template <class Real>
SolveReport<Real> minimize_potential_from(std::vector<Real> x, const Real& p, const Real& q,
                                          const Real& tol) {
  using std::abs;
  using std::max;
  if (x.empty()) throw DomainError("minimize_potential: requires at least one point");
  if (!(p > 0) || !(q > 0)) throw DomainError("endpoint charges must be positive");
  if (!(tol > 0)) throw DomainError("minimize_potential: requires tol > 0");
  if (!ordered_interior(x)) {
    throw DomainError("minimize_potential: start must be increasing and inside (-1, 1)");
  }
  auto energy_at = [&](const std::vector<Real>& pts) {
    return potential_energy_config<Real>(std::span<const Real>(pts), p, q).value();
  };
  auto grad_at = [&](const std::vector<Real>& pts) {
    return kernels::parallel::potential_gradient<Real>(std::span<const Real>(pts), p, q);
  };

  SolveReport<Real> report;
  Real energy = energy_at(x);
  kernels::Vector<Real> g = grad_at(x);
  Real gnorm = max_norm(g);
  const Real slack = 64 * machine_epsilon<Real>();

  int it = 0;
  bool stalled = false;
  while (gnorm > tol && it < kMaxNewtonIterations) {
    ++it;
    const auto h = kernels::parallel::potential_hessian<Real>(std::span<const Real>(x), p, q);
    Eigen::LLT<kernels::Matrix<Real>> llt(h);
    kernels::Vector<Real> step;
    if (llt.info() == Eigen::Success) {
      step = -llt.solve(g);
    } else {
      step = -g;  // Hessian is SPD on the ordered chamber; this is a guard only
    }

    Real t = 1;
    bool accepted = false;
    std::vector<Real> trial(x.size());
    for (int halving = 0; halving < 60; ++halving, t /= 2) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        trial[i] = x[i] + t * step[static_cast<Eigen::Index>(i)];
      }
      if (!ordered_interior(trial)) continue;
      const Real e = energy_at(trial);
      if (e <= energy + slack * max(Real(1), abs(energy))) {
        x = trial;
        energy = e;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      stalled = true;
      break;
    }
    g = grad_at(x);
    gnorm = max_norm(g);
  }

  report.points.points = x;
  report.points.charges = Charges<Real>{p, q};
  report.iterations = it;
  report.grad_norm = gnorm;
  report.converged = !stalled && gnorm <= tol;
  report.energy = energy;
  return report;
}

template <class Real>
SolveReport<Real> fekete_maximize(int N, const Real& tol) {
  if (N < 2) throw DomainError("fekete_maximize: requires N >= 2");
  if (!(tol > 0)) throw DomainError("fekete_maximize: requires tol > 0");
  SolveReport<Real> report;
  std::vector<Real> pts{Real(-1)};
  if (N > 2) {
    const auto inner = minimize_potential<Real>(N - 2, Real(1), Real(1), tol);
    pts.insert(pts.end(), inner.points.points.begin(), inner.points.points.end());
    report.iterations = inner.iterations;
    report.grad_norm = inner.grad_norm;
    report.converged = inner.converged;
  } else {
    report.converged = true;
  }
  pts.push_back(Real(1));
  report.energy = log_energy_config<Real>(std::span<const Real>(pts)).value();
  report.points.points = std::move(pts);
  return report;
}

#define FEKETE_INSTANTIATE_MINIMIZE(R)                                                     \
  template kernels::Vector<R> gradient<R>(std::span<const R>, const R&, const R&);        \
  template kernels::Vector<R> gradient<R>(const Configuration<R>&);                       \
  template SolveReport<R> minimize_potential<R>(int, const R&, const R&, const R&);       \
  template SolveReport<R> minimize_potential_from<R>(std::vector<R>, const R&, const R&,  \
                                                     const R&);                           \
  template SolveReport<R> fekete_maximize<R>(int, const R&);

FEKETE_INSTANTIATE_MINIMIZE(double)
FEKETE_INSTANTIATE_MINIMIZE(quad)

}  // namespace fekete
