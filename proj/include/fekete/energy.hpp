#ifndef FEKETE_ENERGY_HPP_
#define FEKETE_ENERGY_HPP_

#include "fekete/precision.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fekete {

/// Endpoint charges: p at x = +1, q at x = -1.
template <class Real>
struct Charges {
  Real p;
  Real q;
};

/// Ordered points in [-1, 1], with endpoint charges for the external-field problem.
template <class Real>
struct Configuration {
  std::vector<Real> points;
  std::optional<Charges<Real>> charges;
};

/// Energy of a configuration, or the signal that it is +infinity
/// (coincident points, or a point on a charged endpoint).
template <class Real>
class EnergyValue {
 public:
  static EnergyValue finite(const Real& v) { return EnergyValue(v, false); }
  static EnergyValue infinite() { return EnergyValue(Real(0), true); }

  bool is_infinite() const { return infinite_; }
  /// Throws DomainError when the energy is infinite.
  const Real& value() const;

 private:
  EnergyValue(const Real& v, bool inf) : value_(v), infinite_(inf) {}
  Real value_;
  bool infinite_;
};

/// The interval [a, b]; capacity (b-a)/4, W = -log capacity.
template <class Real>
class IntervalSpec {
 public:
  IntervalSpec(const Real& a, const Real& b);
  const Real& a() const { return a_; }
  const Real& b() const { return b_; }
  Real capacity() const { return (b_ - a_) / 4; }
  /// Dilation factor relative to [-1, 1].
  Real scale() const { return (b_ - a_) / 2; }
  Real log_energy_constant() const;  // W([a,b])

 private:
  Real a_;
  Real b_;
};

/// E_0 = sum_{j != k} log 1/|x_j - x_k| = -2 sum_{j<k} log|x_j - x_k|.
template <class Real>
EnergyValue<Real> log_energy_config(std::span<const Real> points);

template <class Real>
EnergyValue<Real> log_energy_config(const Configuration<Real>& c);

/// -2[p sum log(1-x_i) + sum_{j<k} log|x_j-x_k| + q sum log(1+x_i)].
template <class Real>
EnergyValue<Real> potential_energy_config(std::span<const Real> points, const Real& p, const Real& q);

/// Throws DomainError if the configuration carries no charges.
template <class Real>
EnergyValue<Real> potential_energy_config(const Configuration<Real>& c);

/// Minimal potential energy of n charges with endpoint charges p (at +1) and q (at -1):
///   2(n+p+q-1) log lambda_n - log D_n - 2p log P_n^{(a,b)}(1) - 2q log P_n^{(b,a)}(1).
template <class Real>
Real potential_energy_exact(int n, const Real& p, const Real& q);

/// Logarithmic energy of the zeros of P_n^{(2p-1,2q-1)}: 2(n-1) log lambda_n - log D_n.
template <class Real>
Real elliptic_log_energy_exact(int n, const Real& p, const Real& q);

/// Minimal N-point logarithmic energy of [-1, 1].
template <class Real>
Real interval_energy_exact(int N);

/// Minimal N-point logarithmic energy of [a, b].
template <class Real>
Real interval_energy_exact(const IntervalSpec<Real>& interval, int N);

/// log Delta_N([-1,1]) from the closed k^k product form.
template <class Real>
Real discriminant_N_log(int N);

/// log Delta_n^{(p,q)}([-1,1]) from the closed product form.
template <class Real>
Real pq_discriminant_log(int n, const Real& p, const Real& q);

/// sum_{k=m+1}^{n} (k+offset) log(k+offset).
template <class Real>
Real logsum_shifted(int m, int n, const Real& offset);

/// The same sum as zeta'(-1, n+offset+1) - zeta'(-1, m+offset+1).
template <class Real>
Real logsum_shifted_zeta(int m, int n, const Real& offset);

enum class EnergyKind { potential, interval };

/**
 * Value on eta*[-1,1] from the value on [-1,1]:
 *   potential: base - log(eta) n^2 - log(eta)(2p+2q-1) n
 *   interval:  base - log(eta) N(N-1)
 */
template <class Real>
Real rescale_energy(EnergyKind kind, const Real& base, const Real& eta, int n, const Real& p,
                    const Real& q);

}  // namespace fekete

#endif  // FEKETE_ENERGY_HPP_
