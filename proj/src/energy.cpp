#include "fekete/energy.hpp"

#include "fekete/errors.hpp"
#include "fekete/jacobi.hpp"
#include "fekete/kernels.hpp"
#include "fekete/specfun.hpp"
#include "fekete/summation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fekete {

template <class Real>
const Real& EnergyValue<Real>::value() const {
  if (infinite_) throw DomainError("energy is infinite (coincident or endpoint points)");
  return value_;
}

template <class Real>
IntervalSpec<Real>::IntervalSpec(const Real& a, const Real& b) : a_(a), b_(b) {
  if (!(b > a)) throw DomainError("interval requires b > a");
}

template <class Real>
Real IntervalSpec<Real>::log_energy_constant() const {
  using std::log;
  return -log(capacity());
}

namespace {

template <class Real>
bool has_coincident(std::span<const Real> points) {
  std::vector<Real> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

template <class Real>
void require_in_interval(std::span<const Real> points) {
  for (const auto& x : points) {
    if (!(x >= -1 && x <= 1)) throw DomainError("configuration point outside [-1, 1]");
  }
}

void require_degree(int n, int min_n, const char* what) {
  if (n < min_n) {
    throw DomainError(std::string(what) + ": requires at least " + std::to_string(min_n) +
                      " points");
  }
}

}  // namespace

template <class Real>
EnergyValue<Real> log_energy_config(std::span<const Real> points) {
  require_in_interval(points);
  if (has_coincident(points)) return EnergyValue<Real>::infinite();
  return EnergyValue<Real>::finite(-2 * kernels::parallel::pairwise_log_distance_sum(points));
}

template <class Real>
EnergyValue<Real> log_energy_config(const Configuration<Real>& c) {
  return log_energy_config<Real>(std::span<const Real>(c.points));
}

template <class Real>
EnergyValue<Real> potential_energy_config(std::span<const Real> points, const Real& p,
                                          const Real& q) {
  using std::log1p;
  if (!(p > 0) || !(q > 0)) throw DomainError("endpoint charges must be positive");
  require_in_interval(points);
  for (const auto& x : points) {
    if (x == -1 || x == 1) return EnergyValue<Real>::infinite();
  }
  if (has_coincident(points)) return EnergyValue<Real>::infinite();
  CompensatedSum<Real> right;
  CompensatedSum<Real> left;
  for (const auto& x : points) {
    right += log1p(-x);
    left += log1p(x);
  }
  CompensatedSum<Real> total;
  total += p * right.value();
  total += kernels::parallel::pairwise_log_distance_sum(points);
  total += q * left.value();
  return EnergyValue<Real>::finite(-2 * total.value());
}

template <class Real>
EnergyValue<Real> potential_energy_config(const Configuration<Real>& c) {
  if (!c.charges) throw DomainError("configuration has no endpoint charges");
  return potential_energy_config<Real>(std::span<const Real>(c.points), c.charges->p,
                                       c.charges->q);
}

template <class Real>
Real potential_energy_exact(int n, const Real& p, const Real& q) {
  require_degree(n, 1, "potential_energy_exact");
  const auto params = JacobiParams<Real>::from_charges(p, q);
  CompensatedSum<Real> sum;
  sum += 2 * (Real(n) + p + q - 1) * leading_coeff_log(n, params);
  sum += -discriminant_log(n, params);
  sum += -2 * p * value_at_one_log(n, params);
  sum += -2 * q * value_at_one_log(n, params.swapped());
  return sum.value();
}

template <class Real>
Real elliptic_log_energy_exact(int n, const Real& p, const Real& q) {
  require_degree(n, 2, "elliptic_log_energy_exact");
  const auto params = JacobiParams<Real>::from_charges(p, q);
  return 2 * Real(n - 1) * leading_coeff_log(n, params) - discriminant_log(n, params);
}

template <class Real>
Real interval_energy_exact(int N) {
  require_degree(N, 2, "interval_energy_exact");
  const Real log2 = constants<Real>().log2;
  const int n = N - 2;
  if (n == 0) return -2 * log2;  // lambda_0 = D_0 = P_0(1) = 1
  const JacobiParams<Real> params(Real(1), Real(1));
  CompensatedSum<Real> sum;
  sum += 2 * Real(N - 1) * leading_coeff_log(n, params);
  sum += -discriminant_log(n, params);
  sum += -4 * value_at_one_log(n, params);
  sum += -2 * log2;
  return sum.value();
}

template <class Real>
Real interval_energy_exact(const IntervalSpec<Real>& interval, int N) {
  return rescale_energy(EnergyKind::interval, interval_energy_exact<Real>(N), interval.scale(), N,
                        Real(1), Real(1));
}

template <class Real>
Real discriminant_N_log(int N) {
  using std::log;
  require_degree(N, 2, "discriminant_N_log");
  const Real NN = Real(N);
  CompensatedSum<Real> sum;
  sum += NN * (NN - 1) * constants<Real>().log2;
  sum += NN * log(NN);
  for (int k = 1; k <= N - 1; ++k) sum += 3 * Real(k) * log(Real(k));
  for (int k = N - 1; k <= 2 * (N - 1); ++k) sum += -Real(k) * log(Real(k));
  return sum.value();
}

template <class Real>
Real pq_discriminant_log(int n, const Real& p, const Real& q) {
  using std::log;
  require_degree(n, 1, "pq_discriminant_log");
  if (!(p > 0) || !(q > 0)) throw DomainError("endpoint charges must be positive");
  const Real nn = Real(n);
  auto xlogx = [](const Real& x) { return x * log(x); };
  CompensatedSum<Real> sum;
  sum += nn * (nn + 2 * p + 2 * q - 1) * constants<Real>().log2;
  for (int k = 1; k <= n; ++k) {
    const Real kk = Real(k);
    sum += xlogx(kk);
    sum += xlogx(kk + 2 * p - 1);
    sum += xlogx(kk + 2 * q - 1);
  }
  for (int k = n - 1; k <= 2 * (n - 1); ++k) sum += -xlogx(Real(k) + 2 * p + 2 * q);
  return sum.value();
}

template <class Real>
Real logsum_shifted(int m, int n, const Real& offset) {
  using std::log;
  if (m < 0 || n <= m) throw DomainError("logsum_shifted: requires 0 <= m < n");
  if (!(Real(m + 1) + offset > 0)) throw DomainError("logsum_shifted: nonpositive summand");
  CompensatedSum<Real> sum;
  for (int k = m + 1; k <= n; ++k) {
    const Real x = Real(k) + offset;
    sum += x * log(x);
  }
  return sum.value();
}

template <class Real>
Real logsum_shifted_zeta(int m, int n, const Real& offset) {
  if (m < 0 || n <= m) throw DomainError("logsum_shifted: requires 0 <= m < n");
  if (!(Real(m + 1) + offset > 0)) throw DomainError("logsum_shifted: nonpositive summand");
  return zeta_prime_neg1_exact(Real(n + 1) + offset) - zeta_prime_neg1_exact(Real(m + 1) + offset);
}

template <class Real>
Real rescale_energy(EnergyKind kind, const Real& base, const Real& eta, int n, const Real& p,
                    const Real& q) {
  using std::log;
  if (!(eta > 0)) throw DomainError("rescale_energy: requires eta > 0");
  const Real le = log(eta);
  const Real nn = Real(n);
  if (kind == EnergyKind::potential) return base - le * nn * nn - le * (2 * p + 2 * q - 1) * nn;
  return base - le * nn * (nn - 1);
}

#define FEKETE_INSTANTIATE_ENERGY(R)                                                        \
  template class EnergyValue<R>;                                                            \
  template class IntervalSpec<R>;                                                           \
  template EnergyValue<R> log_energy_config<R>(std::span<const R>);                         \
  template EnergyValue<R> log_energy_config<R>(const Configuration<R>&);                    \
  template EnergyValue<R> potential_energy_config<R>(std::span<const R>, const R&, const R&); \
  template EnergyValue<R> potential_energy_config<R>(const Configuration<R>&);              \
  template R potential_energy_exact<R>(int, const R&, const R&);                            \
  template R elliptic_log_energy_exact<R>(int, const R&, const R&);                         \
  template R interval_energy_exact<R>(int);                                                 \
  template R interval_energy_exact<R>(const IntervalSpec<R>&, int);                         \
  template R discriminant_N_log<R>(int);                                                    \
  template R pq_discriminant_log<R>(int, const R&, const R&);                               \
  template R logsum_shifted<R>(int, int, const R&);                                         \
  template R logsum_shifted_zeta<R>(int, int, const R&);                                    \
  template R rescale_energy<R>(EnergyKind, const R&, const R&, int, const R&, const R&);

FEKETE_INSTANTIATE_ENERGY(double)
FEKETE_INSTANTIATE_ENERGY(quad)

}  // namespace fekete
