#include "fekete/specfun.hpp"

#include "fekete/errors.hpp"
#include "fekete/summation.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <string>

namespace fekete {

namespace {

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Error-free transformations used by the compensated Horner scheme.
template <class Real>
void two_sum(const Real& a, const Real& b, Real& s, Real& e) {
  s = a + b;
  Real z = s - a;
  e = (a - (s - z)) + (b - z);
}

template <class Real>
void two_prod(const Real& a, const Real& b, Real& p, Real& e) {
  using std::fma;
  p = a * b;
  e = fma(a, b, -p);
}

template <class Real>
const std::vector<std::vector<Real>>& bernoulli_rows() {
  static const std::vector<std::vector<Real>> rows = [] {
    const auto& table = BernoulliTable::instance();
    std::vector<std::vector<Real>> out;
    for (int m = 0; m <= table.max_degree(); ++m) {
      std::vector<Real> row;
      for (const auto& c : table.poly_coeffs(m)) row.push_back(to_real<Real>(c));
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

// zeta(k), k = 0..kMaxZeta; entries 0 and 1 unused.
constexpr int kMaxZeta = 200;

template <class Real>
const std::vector<Real>& zeta_table() {
  static const std::vector<Real> table = [] {
    std::vector<Real> t(kMaxZeta + 1, Real(0));
    for (int k = 2; k <= kMaxZeta; ++k) t[k] = boost::math::zeta(Real(k));
    return t;
  }();
  return table;
}

// integral_0^eps log Gamma(t) dt from the Taylor series of log Gamma(1+t).
template <class Real>
Real log_gamma_integral_near_zero(const Real& eps) {
  using std::abs;
  using std::log;
  const auto& c = constants<Real>();
  const auto& zeta = zeta_table<Real>();
  CompensatedSum<Real> sum;
  sum += eps - eps * log(eps);
  sum += -c.euler_gamma * eps * eps / 2;
  Real power = -eps * eps;  // (-1)^k eps^(k+1), starting at k = 1
  for (int k = 2; k <= kMaxZeta; ++k) {
    power *= -eps;
    Real term = zeta[k] * power / (Real(k) * Real(k + 1));
    sum += term;
    if (abs(term) < machine_epsilon<Real>() * Real(1e-3) * (abs(sum.value()) + eps)) break;
  }
  return sum.value();
}

}  // namespace

// ---------------------------------------------------------------------------
// BernoulliTable

BernoulliTable::BernoulliTable(int max_order) : max_order_(max_order) {
  if (max_order < 1) throw DomainError("BernoulliTable: max_order must be >= 1");
  const int top = max_degree();
  numbers_.resize(top + 1);
  numbers_[0] = 1;
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  for (int m = 1; m <= top; ++m) {
    Rational acc = 0;
    for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * numbers_[k];
    numbers_[m] = -acc / (m + 1);
  }
  coeffs_.resize(top + 1);
  for (int m = 0; m <= top; ++m) {
    coeffs_[m].assign(m + 1, Rational(0));
    for (int k = 0; k <= m; ++k) coeffs_[m][m - k] = binomial(m, k) * numbers_[k];
  }
}

const BernoulliTable& BernoulliTable::instance() {
  static const BernoulliTable table;
  return table;
}

void BernoulliTable::check_degree(int m) const {
  if (m < 0) throw DomainError("Bernoulli index must be non-negative");
  if (m > max_degree()) {
    throw CapacityError("Bernoulli index " + std::to_string(m) + " exceeds table capacity " +
                        std::to_string(max_degree()));
  }
}

const Rational& BernoulliTable::number(int m) const {
  check_degree(m);
  return numbers_[m];
}

const std::vector<Rational>& BernoulliTable::poly_coeffs(int m) const {
  check_degree(m);
  return coeffs_[m];
}

Rational BernoulliTable::poly(int m, const Rational& x) const {
  const auto& c = poly_coeffs(m);
  Rational r = 0;
  for (int k = m; k >= 0; --k) r = r * x + c[k];
  return r;
}

// ---------------------------------------------------------------------------

template <class Real>
Real to_real(const Rational& r) {
  return static_cast<Real>(r);
}

template <class Real>
const Constants<Real>& constants() {
  static const Constants<Real> c = [] {
    namespace bc = boost::math::constants;
    using std::log;
    Constants<Real> k;
    k.log2 = bc::ln_two<Real>();
    k.log_pi = log(bc::pi<Real>());
    k.half_log_2pi = log(bc::two_pi<Real>()) / 2;
    k.euler_gamma = bc::euler<Real>();
    k.log_glaisher = log(bc::glaisher<Real>());
    k.zeta_prime_neg1 = Real(1) / 12 - k.log_glaisher;
    return k;
  }();
  return c;
}

template <class Real>
Real bernoulli_poly(int m, const Real& x) {
  if (m < 0) throw DomainError("bernoulli_poly: negative degree");
  const auto& rows = bernoulli_rows<Real>();
  if (m >= static_cast<int>(rows.size())) {
    throw CapacityError("bernoulli_poly: degree " + std::to_string(m) + " exceeds table capacity");
  }
  const auto& a = rows[m];
  Real s = a[m];
  Real c = 0;
  for (int i = m - 1; i >= 0; --i) {
    Real p, pe, se;
    two_prod(s, x, p, pe);
    two_sum(p, a[i], s, se);
    c = c * x + (pe + se);
  }
  return s + c;
}

template <class Real>
Real hurwitz_zeta_negint(int m, const Real& a) {
  if (m < 0) throw DomainError("hurwitz_zeta_negint: m must be >= 0");
  if (a <= Real(-1)) throw DomainError("hurwitz_zeta_negint: requires a > -1");
  return -bernoulli_poly<Real>(m + 1, a) / Real(m + 1);
}

Rational hurwitz_zeta_negint_exact(int m, const Rational& a) {
  if (m < 0) throw DomainError("hurwitz_zeta_negint: m must be >= 0");
  if (a <= -1) throw DomainError("hurwitz_zeta_negint: requires a > -1");
  return -BernoulliTable::instance().poly(m + 1, a) / (m + 1);
}

template <class Real>
Real riemann_zeta_negint(int m) {
  return hurwitz_zeta_negint<Real>(m, Real(1));
}

template <class Real>
Real riemann_zeta_int(int k) {
  if (k < 2) throw DomainError("riemann_zeta_int: k must be >= 2");
  if (k <= kMaxZeta) return zeta_table<Real>()[k];
  return boost::math::zeta(Real(k));
}

template <class Real>
Real log_gamma(const Real& x) {
  using std::lgamma;
  if (!(x > 0)) throw DomainError("log_gamma: requires x > 0");
  return lgamma(x);
}

template <class Real>
Real log_gamma_asym(const Real& x, const Real& a, int M) {
  using std::log;
  if (!(x >= 1)) throw DomainError("log_gamma_asym: requires x >= 1");
  if (M < 0) throw DomainError("log_gamma_asym: M must be >= 0");
  const auto& c = constants<Real>();
  Real value = (x + a - Real(0.5)) * log(x) - x + c.half_log_2pi;
  Real xinv = 1 / x;
  Real power = 1;
  for (int m = 1; m <= M; ++m) {
    power *= xinv;
    Real sign = (m % 2 == 1) ? Real(1) : Real(-1);
    value -= sign / Real(m) * hurwitz_zeta_negint<Real>(m, a) * power;
  }
  return value;
}

template <class Real>
Real negapolygamma2(const Real& x) {
  using std::floor;
  using std::lgamma;
  if (x < 0) throw DomainError("negapolygamma2: requires x >= 0");
  if (x == 0) return Real(0);
  const Real eps = x < Real(0.5) ? x : Real(0.5);
  CompensatedSum<Real> sum;
  sum += log_gamma_integral_near_zero(eps);
  Real lo = eps;
  while (lo < x) {
    Real hi = floor(lo) + 1;
    if (hi > x) hi = x;
    sum += boost::math::quadrature::gauss<Real, 30>::integrate(
        [](const Real& t) { return lgamma(t); }, lo, hi);
    lo = hi;
  }
  return sum.value();
}

template <class Real>
Real zeta_prime_neg1_exact(const Real& x) {
  if (!(x > 0)) throw DomainError("zeta_prime_neg1_exact: requires x > 0");
  const auto& c = constants<Real>();
  return negapolygamma2(x) - (1 - x) * x / 2 - x * c.half_log_2pi + c.zeta_prime_neg1;
}

template <class Real>
Real zeta_prime_neg1_asym(const Real& x, const Real& a, int K) {
  using std::log;
  if (K < 2) throw DomainError("zeta_prime_neg1_asym: requires K >= 2");
  if (!(x >= 2)) throw DomainError("zeta_prime_neg1_asym: requires x >= 2");
  const Real lx = log(x);
  const Real z0 = hurwitz_zeta_negint<Real>(0, a);
  const Real z1 = hurwitz_zeta_negint<Real>(1, a);
  Real value = x * x * lx / 2 - x * x / 4 - z0 * x * lx - z1 * lx - z1;
  Real xinv = 1 / x;
  Real power = 1;
  for (int k = 1; k <= K - 1; ++k) {
    power *= xinv;
    Real sign = (k % 2 == 0) ? Real(1) : Real(-1);
    value += sign / (Real(k) * Real(k + 1)) * hurwitz_zeta_negint<Real>(k + 1, a) * power;
  }
  return value;
}

#define FEKETE_INSTANTIATE_SPECFUN(R)                          \
  template R to_real<R>(const Rational&);                      \
  template const Constants<R>& constants<R>();                 \
  template R bernoulli_poly<R>(int, const R&);                 \
  template R hurwitz_zeta_negint<R>(int, const R&);            \
  template R riemann_zeta_negint<R>(int);                      \
  template R riemann_zeta_int<R>(int);                         \
  template R log_gamma<R>(const R&);                           \
  template R log_gamma_asym<R>(const R&, const R&, int);       \
  template R negapolygamma2<R>(const R&);                      \
  template R zeta_prime_neg1_exact<R>(const R&);               \
  template R zeta_prime_neg1_asym<R>(const R&, const R&, int);

FEKETE_INSTANTIATE_SPECFUN(double)
FEKETE_INSTANTIATE_SPECFUN(quad)

}  // namespace fekete
