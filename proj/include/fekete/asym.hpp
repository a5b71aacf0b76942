#ifndef FEKETE_ASYM_HPP_
#define FEKETE_ASYM_HPP_

#include "fekete/energy.hpp"
#include "fekete/jacobi.hpp"
#include "fekete/precision.hpp"
#include "fekete/specfun.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fekete {

enum class ExpansionKind {
  log_lambda,           // log of the Jacobi leading coefficient
  log_P1,               // log P_n(1)
  log_D,                // log of the Jacobi discriminant
  potential,            // minimal potential energy with endpoint charges
  elliptic_E0,          // logarithmic energy of the elliptic Fekete points
  interval_E0,          // minimal N-point logarithmic energy of [-1, 1]
  general_interval_E0,  // the same on [a, b]
};

std::string_view to_string(ExpansionKind kind);
/// Throws std::invalid_argument on an unknown name.
ExpansionKind parse_expansion_kind(std::string_view name);

/// Coefficients of n^2 log n, n^2, n log n, n, log n and 1.
template <class Real>
struct LeadingTerms {
  Real n2logn{0};
  Real n2{0};
  Real nlogn{0};
  Real n{0};
  Real logn{0};
  Real constant{0};
};

/**
 * Truncated Poincare-type expansion
 *   leading(n) + sum_{m=1}^{M} tail[m-1] n^(-m).
 * The series diverges in general; callers choose the truncation.
 */
template <class Real>
struct Expansion {
  ExpansionKind kind{ExpansionKind::interval_E0};
  std::vector<std::pair<std::string, Real>> params;
  LeadingTerms<Real> leading;
  std::vector<Real> tail;

  int order() const { return static_cast<int>(tail.size()); }
};

template <class Real>
constexpr int max_expansion_order() {
  return precision_traits<Real>::max_expansion_order;
}

// Builders. M is the number of tail coefficients; M above
// max_expansion_order<Real>() throws CapacityError.

template <class Real>
Expansion<Real> leading_coeff_expansion(const JacobiParams<Real>& params, int M);

template <class Real>
Expansion<Real> value_at_one_expansion(const JacobiParams<Real>& params, int M);

/// Requires M >= 1.
template <class Real>
Expansion<Real> discriminant_expansion(const JacobiParams<Real>& params, int M);

/// Dispatches to symmetric_potential_energy_expansion when p == q.
template <class Real>
Expansion<Real> potential_energy_expansion(const Real& p, const Real& q, int M);

template <class Real>
Expansion<Real> symmetric_potential_energy_expansion(const Real& p, int M);

template <class Real>
Expansion<Real> elliptic_log_energy_expansion(const Real& p, const Real& q, int M);

template <class Real>
Expansion<Real> interval_energy_expansion(int M);

template <class Real>
Expansion<Real> general_interval_energy_expansion(const IntervalSpec<Real>& interval, int M);

/// Leading terms in descending order, then tail terms m = 1..truncation.
/// Requires n >= 2 and truncation <= e.order().
template <class Real>
Real evaluate_expansion(const Expansion<Real>& e, const Real& n, int truncation);

// Coefficient pieces, exposed for coefficient-level checks.

/// C(alpha, beta), constant term of log D_n.
template <class Real>
Real discriminant_constant(const JacobiParams<Real>& params);
/// Psi_m(alpha, beta); the tail of log D_n is +(-1)^(m-1)/m Psi_m n^-m.
template <class Real>
Real discriminant_psi(int m, const JacobiParams<Real>& params);
/// H_m(p, q) of the potential-energy tail.
template <class Real>
Real potential_h(int m, const Real& p, const Real& q);
/// H_m(p) of the symmetric (p = q) potential-energy tail.
template <class Real>
Real symmetric_potential_h(int m, const Real& p);
/// H'_m(p, q) of the elliptic logarithmic-energy tail.
template <class Real>
Real elliptic_h(int m, const Real& p, const Real& q);

Rational interval_tail_coefficient_exact(int m);
Rational potential_h_exact(int m, const Rational& p, const Rational& q);
Rational discriminant_psi_exact(int m, const Rational& alpha, const Rational& beta);

// Term-by-term algebra on expansions in the same variable n.

template <class Real>
Expansion<Real> operator+(const Expansion<Real>& a, const Expansion<Real>& b);
template <class Real>
Expansion<Real> operator-(const Expansion<Real>& a, const Expansion<Real>& b);
template <class Real>
Expansion<Real> operator*(const Real& s, const Expansion<Real>& e);

/**
 * (slope*n + intercept) * e. The n*c_m n^-m terms shift down one order, so
 * the result has order e.order()-1 when slope != 0. Throws DomainError if
 * the product has an n^3 or n^2 log n^2 term outside the basis.
 */
template <class Real>
Expansion<Real> multiply_linear(const Real& slope, const Real& intercept, const Expansion<Real>& e);

/// {kind, params, leading: {n2, nlogn, n, logn, const}, tail, precision}.
/// Standard mode writes JSON numbers; extended mode writes decimal strings
/// with enough digits to round-trip binary128.
template <class Real>
std::string expansion_to_json(const Expansion<Real>& e, int indent = 2);

template <class Real>
Expansion<Real> expansion_from_json(const std::string& text);

}  // namespace fekete

#endif  // FEKETE_ASYM_HPP_
