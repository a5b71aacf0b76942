#include "fekete/jacobi.hpp"

#include "fekete/errors.hpp"
#include "fekete/specfun.hpp"
#include "fekete/summation.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <string>

namespace fekete {

template <class Real>
JacobiParams<Real>::JacobiParams(const Real& alpha, const Real& beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1) || !(beta > -1)) {
    throw DomainError("Jacobi exponents must satisfy alpha > -1 and beta > -1");
  }
}

template <class Real>
JacobiParams<Real> JacobiParams<Real>::from_charges(const Real& p, const Real& q) {
  if (!(p > 0) || !(q > 0)) throw DomainError("endpoint charges must be positive");
  return JacobiParams(2 * p - 1, 2 * q - 1);
}

namespace {

void check_degree(int n, int min_n, const char* what) {
  if (n < min_n) {
    throw DomainError(std::string(what) + ": degree must be >= " + std::to_string(min_n));
  }
}

// sum_{k=1}^{n} log(1 + shift/k)
template <class Real>
Real log_rising_ratio(int n, const Real& shift) {
  using std::log1p;
  CompensatedSum<Real> sum;
  for (int k = 1; k <= n; ++k) sum += log1p(shift / Real(k));
  return sum.value();
}

}  // namespace

template <class Real>
Real leading_coeff_log(int n, const JacobiParams<Real>& params) {
  check_degree(n, 0, "leading_coeff_log");
  // Gamma(2n+s+1) / (Gamma(n+s+1) Gamma(n+1)) = prod_{k=1}^{n} (n+s+k)/k
  const Real shift = Real(n) + params.alpha() + params.beta();
  return log_rising_ratio(n, shift) - Real(n) * constants<Real>().log2;
}

template <class Real>
Real value_at_one_log(int n, const JacobiParams<Real>& params) {
  check_degree(n, 0, "value_at_one_log");
  return log_rising_ratio(n, params.alpha());
}

template <class Real>
Real value_at_minus_one_signed_log(int n, const JacobiParams<Real>& params) {
  check_degree(n, 0, "value_at_minus_one_signed_log");
  return log_rising_ratio(n, params.beta());
}

template <class Real>
Real evaluate(int n, const JacobiParams<Real>& params, const Real& x) {
  check_degree(n, 0, "evaluate");
  const Real a = params.alpha();
  const Real b = params.beta();
  if (n == 0) return Real(1);
  Real prev = 1;
  Real cur = (a + 1) + (a + b + 2) * (x - 1) / 2;
  for (int k = 2; k <= n; ++k) {
    const Real s = Real(2 * k) + a + b;
    const Real c1 = 2 * Real(k) * (Real(k) + a + b) * (s - 2);
    const Real c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b);
    const Real c3 = 2 * (Real(k) + a - 1) * (Real(k) + b - 1) * s;
    Real next = (c2 * cur - c3 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return cur;
}

template <class Real>
Real evaluate_derivative(int n, const JacobiParams<Real>& params, const Real& x) {
  check_degree(n, 0, "evaluate_derivative");
  if (n == 0) return Real(0);
  JacobiParams<Real> shifted(params.alpha() + 1, params.beta() + 1);
  return (Real(n) + params.alpha() + params.beta() + 1) / 2 * evaluate(n - 1, shifted, x);
}

template <class Real>
ZeroSet<Real> zeros(int n, const JacobiParams<Real>& params) {
  using std::abs;
  using std::sqrt;
  check_degree(n, 1, "zeros");
  const Real a = params.alpha();
  const Real b = params.beta();
  const Real s = a + b;

  using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  Vector diag(n);
  Vector sub(n > 1 ? n - 1 : 0);
  // monic recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}
  diag(0) = (b - a) / (s + 2);
  for (int k = 1; k < n; ++k) {
    const Real t = Real(2 * k) + s;
    diag(k) = (b * b - a * a) / (t * (t + 2));
  }
  for (int k = 1; k < n; ++k) {
    const Real t = Real(2 * k) + s;
    Real bk;
    if (k == 1) {
      // the (k+alpha+beta)/(t-1) factor cancels to 1 at k = 1
      bk = 4 * (1 + a) * (1 + b) / ((t * t) * (t + 1));
    } else {
      bk = 4 * Real(k) * (Real(k) + a) * (Real(k) + b) * (Real(k) + s) /
           (t * t * (t + 1) * (t - 1));
    }
    sub(k - 1) = sqrt(bk);
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "zeros: tridiagonal eigensolver did not converge (n=" << n << ", alpha=" << a
       << ", beta=" << b << ")";
    throw NumericError(os.str());
  }

  ZeroSet<Real> out;
  out.n = n;
  out.points.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::vector<Real> gaps(n, Real(2));
  for (int i = 0; i < n; ++i) {
    Real left = i == 0 ? out.points[0] + 1 : out.points[i] - out.points[i - 1];
    Real right = i == n - 1 ? 1 - out.points[i] : out.points[i + 1] - out.points[i];
    gaps[i] = left < right ? left : right;
  }
  for (int i = 0; i < n; ++i) {
    const Real x = out.points[i];
    const Real dp = evaluate_derivative(n, params, x);
    const Real step = dp != 0 ? evaluate(n, params, x) / dp : Real(0);
    if (!(abs(step) <= Real(1e-6) * gaps[i])) {
      std::ostringstream os;
      os << "zeros: Newton polish moved zero " << i << " by " << step << " (gap " << gaps[i]
         << ", n=" << n << ", alpha=" << a << ", beta=" << b << ")";
      throw NumericError(os.str());
    }
    out.points[i] = x - step;
  }
  for (int i = 0; i < n; ++i) {
    const bool interior = out.points[i] > -1 && out.points[i] < 1;
    const bool ordered = i == 0 || out.points[i] > out.points[i - 1];
    if (!interior || !ordered) {
      throw NumericError("zeros: computed zeros are not strictly ordered inside (-1, 1)");
    }
  }
  return out;
}

template <class Real>
Real discriminant_log(int n, const JacobiParams<Real>& params) {
  using std::log;
  check_degree(n, 1, "discriminant_log");
  const Real a = params.alpha();
  const Real b = params.beta();
  const Real nn = Real(n);
  CompensatedSum<Real> sum;
  sum += -nn * (nn - 1) * constants<Real>().log2;
  for (int v = 1; v <= n; ++v) {
    const Real nu = Real(v);
    sum += (nu - 2 * nn + 2) * log(nu);
    sum += (nu - 1) * log(nu + a);
    sum += (nu - 1) * log(nu + b);
    sum += (nn - nu) * log(nu + nn + a + b);
  }
  return sum.value();
}

#define FEKETE_INSTANTIATE_JACOBI(R)                                          \
  template class JacobiParams<R>;                                             \
  template R leading_coeff_log<R>(int, const JacobiParams<R>&);               \
  template R value_at_one_log<R>(int, const JacobiParams<R>&);                \
  template R value_at_minus_one_signed_log<R>(int, const JacobiParams<R>&);   \
  template R evaluate<R>(int, const JacobiParams<R>&, const R&);              \
  template R evaluate_derivative<R>(int, const JacobiParams<R>&, const R&);   \
  template ZeroSet<R> zeros<R>(int, const JacobiParams<R>&);                  \
  template R discriminant_log<R>(int, const JacobiParams<R>&);

FEKETE_INSTANTIATE_JACOBI(double)
FEKETE_INSTANTIATE_JACOBI(quad)

}  // namespace fekete
