#include "fekete/asym.hpp"

#include "fekete/errors.hpp"
#include "fekete/summation.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fekete {

namespace {

constexpr std::string_view kKindNames[] = {"log_lambda",  "log_P1",      "log_D",
                                           "potential",   "elliptic_E0", "interval_E0",
                                           "general_interval_E0"};

template <class T>
T inv_pow2(int m) {
  return T(1) / T(static_cast<std::int64_t>(1) << m);
}

template <class T>
T alt_sign(int m) {
  return (m % 2 == 0) ? T(1) : T(-1);
}

// Coefficient formulas written once for Real and for Rational; `zeta(k, a)`
// is zeta(-k, a).

template <class T, class Zeta>
T psi_formula(int m, const T& alpha, const T& beta, Zeta zeta) {
  const T one(1);
  const T s = alpha + beta;
  const T w = one - inv_pow2<T>(m);
  const T mm(m);
  T r = -T(2 * m + 1) / T(m + 1) * zeta(m + 1, one) - T(2) * zeta(m, one);
  r += (alpha + 1) * zeta(m, alpha + 1) - zeta(m + 1, alpha + 1) / T(m + 1);
  r += (beta + 1) * zeta(m, beta + 1) - zeta(m + 1, beta + 1) / T(m + 1);
  r -= ((T(2) - inv_pow2<T>(m)) * mm + w) / T(m + 1) * zeta(m + 1, s + 1);
  r += s * w * zeta(m, s + 1);
  return r;
}

template <class T, class Zeta>
T potential_h_formula(int m, const T& p, const T& q, Zeta zeta) {
  const T one(1);
  return zeta(m + 1, one) + zeta(m + 1, 2 * p) + zeta(m + 1, 2 * q) +
         (one - inv_pow2<T>(m)) * zeta(m + 1, 2 * p + 2 * q - 1);
}

template <class Real>
Real hz(int m, const Real& a) {
  return hurwitz_zeta_negint<Real>(m, a);
}

template <class Real>
void check_order(int M, int min_order) {
  if (M < min_order) {
    throw DomainError("expansion order must be >= " + std::to_string(min_order));
  }
  if (M > max_expansion_order<Real>()) {
    throw CapacityError("expansion order " + std::to_string(M) + " exceeds capacity " +
                        std::to_string(max_expansion_order<Real>()));
  }
}

template <class Real>
Expansion<Real> make(ExpansionKind kind, std::vector<std::pair<std::string, Real>> params) {
  Expansion<Real> e;
  e.kind = kind;
  e.params = std::move(params);
  return e;
}

template <class Real>
std::vector<std::pair<std::string, Real>> jacobi_params(const JacobiParams<Real>& p) {
  return {{"alpha", p.alpha()}, {"beta", p.beta()}};
}

}  // namespace

std::string_view to_string(ExpansionKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

ExpansionKind parse_expansion_kind(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kKindNames)); ++i) {
    if (kKindNames[i] == name) return static_cast<ExpansionKind>(i);
  }
  throw std::invalid_argument("unknown expansion kind '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Coefficient pieces

template <class Real>
Real discriminant_constant(const JacobiParams<Real>& params) {
  const auto& c = constants<Real>();
  const Real a = params.alpha();
  const Real b = params.beta();
  const Real s = a + b;
  const Real half(0.5);
  CompensatedSum<Real> sum;
  sum += -Real(1) / 8;
  sum += -half * (s + half) * (s + half);
  sum += half * (Real(11) / 6 + s * s) * c.log2;
  sum += c.log_pi;
  sum += 3 * c.log_glaisher;
  sum += (a + 1) * log_gamma(a + 1) - negapolygamma2(a + 1);
  sum += (b + 1) * log_gamma(b + 1) - negapolygamma2(b + 1);
  return sum.value();
}

template <class Real>
Real discriminant_psi(int m, const JacobiParams<Real>& params) {
  return psi_formula<Real>(m, params.alpha(), params.beta(), hz<Real>);
}

template <class Real>
Real potential_h(int m, const Real& p, const Real& q) {
  return potential_h_formula<Real>(m, p, q, hz<Real>);
}

template <class Real>
Real symmetric_potential_h(int m, const Real& p) {
  return riemann_zeta_negint<Real>(m + 1) + 2 * hz(m + 1, 2 * p) +
         (1 - inv_pow2<Real>(m)) * hz(m + 1, 4 * p - 1);
}

template <class Real>
Real elliptic_h(int m, const Real& p, const Real& q) {
  const Real w = 1 - inv_pow2<Real>(m);
  return potential_h(m, p, q) / Real(m + 1) - 2 * p * hz(m, 2 * p) - 2 * q * hz(m, 2 * q) -
         2 * w * (p + q) * hz(m, 2 * p + 2 * q - 1);
}

Rational interval_tail_coefficient_exact(int m) {
  if (m < 1) throw DomainError("tail index must be >= 1");
  const Rational& b = BernoulliTable::instance().number(m + 2);
  Rational inner = 1 - inv_pow2<Rational>(m) + 4 * (1 - inv_pow2<Rational>(m + 2)) * b / (m + 2);
  return inner / (m * (m + 1));
}

Rational potential_h_exact(int m, const Rational& p, const Rational& q) {
  if (m < 1) throw DomainError("tail index must be >= 1");
  return potential_h_formula<Rational>(m, p, q, hurwitz_zeta_negint_exact);
}

Rational discriminant_psi_exact(int m, const Rational& alpha, const Rational& beta) {
  if (m < 1) throw DomainError("tail index must be >= 1");
  return psi_formula<Rational>(m, alpha, beta, hurwitz_zeta_negint_exact);
}

// ---------------------------------------------------------------------------
// Builders

template <class Real>
Expansion<Real> leading_coeff_expansion(const JacobiParams<Real>& params, int M) {
  check_order<Real>(M, 0);
  const auto& c = constants<Real>();
  const Real s = params.alpha() + params.beta();
  auto e = make<Real>(ExpansionKind::log_lambda, jacobi_params(params));
  e.leading.n = c.log2;
  e.leading.logn = Real(-0.5);
  e.leading.constant = s * c.log2 - c.log_pi / 2;
  for (int m = 1; m <= M; ++m) {
    const Real inner = (1 - inv_pow2<Real>(m)) * hz(m, s + 1) + riemann_zeta_negint<Real>(m);
    e.tail.push_back(alt_sign<Real>(m - 1) / Real(m) * inner);
  }
  return e;
}

template <class Real>
Expansion<Real> value_at_one_expansion(const JacobiParams<Real>& params, int M) {
  check_order<Real>(M, 0);
  const Real a = params.alpha();
  auto e = make<Real>(ExpansionKind::log_P1, jacobi_params(params));
  e.leading.logn = a;
  e.leading.constant = -log_gamma(a + 1);
  for (int m = 1; m <= M; ++m) {
    e.tail.push_back(alt_sign<Real>(m) / Real(m) * (hz(m, a + 1) - riemann_zeta_negint<Real>(m)));
  }
  return e;
}

template <class Real>
Expansion<Real> discriminant_expansion(const JacobiParams<Real>& params, int M) {
  check_order<Real>(M, 1);
  const auto& c = constants<Real>();
  const Real a = params.alpha();
  const Real b = params.beta();
  auto e = make<Real>(ExpansionKind::log_D, jacobi_params(params));
  e.leading.n2 = c.log2;
  e.leading.n = 2 * (a + b) * c.log2 - c.log_pi;
  e.leading.logn = (Real(2.5) - (a + 1) * (a + 1) - (b + 1) * (b + 1)) / 2;
  e.leading.constant = discriminant_constant(params);
  for (int m = 1; m <= M; ++m) {
    e.tail.push_back(alt_sign<Real>(m - 1) / Real(m) * discriminant_psi(m, params));
  }
  return e;
}

template <class Real>
Expansion<Real> potential_energy_expansion(const Real& p, const Real& q, int M) {
  if (!(p > 0) || !(q > 0)) throw DomainError("endpoint charges must be positive");
  if (p == q) return symmetric_potential_energy_expansion(p, M);
  check_order<Real>(M, 0);
  const auto& c = constants<Real>();
  const Real quarter(0.25);
  auto e = make<Real>(ExpansionKind::potential, {{"p", p}, {"q", q}});
  e.leading.n2 = c.log2;
  e.leading.nlogn = Real(-1);
  e.leading.n = 2 * c.log2 * (p + q - 1);
  e.leading.logn = -2 * ((p - quarter) * (p - quarter) + (q - quarter) * (q - quarter));
  CompensatedSum<Real> c1;
  c1 += 2 * ((p + q - 1) * (p + q - 1) - Real(11) / 24) * c.log2;
  c1 += -(p + q) * c.log_pi;
  c1 += -3 * c.log_glaisher;
  c1 += negapolygamma2(2 * p);
  c1 += negapolygamma2(2 * q);
  e.leading.constant = c1.value();
  for (int m = 1; m <= M; ++m) {
    e.tail.push_back(alt_sign<Real>(m - 1) / (Real(m) * Real(m + 1)) * potential_h(m, p, q));
  }
  return e;
}

template <class Real>
Expansion<Real> symmetric_potential_energy_expansion(const Real& p, int M) {
  if (!(p > 0)) throw DomainError("endpoint charges must be positive");
  check_order<Real>(M, 0);
  const auto& c = constants<Real>();
  const Real quarter(0.25);
  auto e = make<Real>(ExpansionKind::potential, {{"p", p}, {"q", p}});
  e.leading.n2 = c.log2;
  e.leading.nlogn = Real(-1);
  e.leading.n = 2 * c.log2 * (2 * p - 1);
  e.leading.logn = -4 * (p - quarter) * (p - quarter);
  CompensatedSum<Real> c1;
  c1 += 2 * ((2 * p - 1) * (2 * p - 1) - Real(11) / 24) * c.log2;
  c1 += -2 * p * c.log_pi;
  c1 += -3 * c.log_glaisher;
  c1 += 2 * negapolygamma2(2 * p);
  e.leading.constant = c1.value();
  for (int m = 1; m <= M; ++m) {
    e.tail.push_back(alt_sign<Real>(m - 1) / (Real(m) * Real(m + 1)) * symmetric_potential_h(m, p));
  }
  return e;
}

template <class Real>
Expansion<Real> elliptic_log_energy_expansion(const Real& p, const Real& q, int M) {
  if (!(p > 0) || !(q > 0)) throw DomainError("endpoint charges must be positive");
  check_order<Real>(M, 0);
  const auto& c = constants<Real>();
  auto e = make<Real>(ExpansionKind::elliptic_E0, {{"p", p}, {"q", q}});
  e.leading.n2 = c.log2;
  e.leading.nlogn = Real(-1);
  e.leading.n = -2 * c.log2;
  e.leading.logn = 2 * (p * p + q * q - Real(1) / 8);
  CompensatedSum<Real> c1;
  c1 += -2 * ((p + q) * (p + q) - Real(13) / 24) * c.log2;
  c1 += -3 * c.log_glaisher;
  c1 += -2 * p * log_gamma(2 * p) + negapolygamma2(2 * p);
  c1 += -2 * q * log_gamma(2 * q) + negapolygamma2(2 * q);
  e.leading.constant = c1.value();
  for (int m = 1; m <= M; ++m) {
    e.tail.push_back(alt_sign<Real>(m - 1) / Real(m) * elliptic_h(m, p, q));
  }
  return e;
}

template <class Real>
Expansion<Real> interval_energy_expansion(int M) {
  check_order<Real>(M, 0);
  const auto& c = constants<Real>();
  auto e = make<Real>(ExpansionKind::interval_E0, {});
  e.leading.n2 = c.log2;
  e.leading.nlogn = Real(-1);
  e.leading.n = -2 * c.log2;
  e.leading.logn = Real(-0.25);
  e.leading.constant = Real(13) * c.log2 / 12 - 3 * c.log_glaisher;
  for (int m = 1; m <= M; ++m) e.tail.push_back(to_real<Real>(interval_tail_coefficient_exact(m)));
  return e;
}

template <class Real>
Expansion<Real> general_interval_energy_expansion(const IntervalSpec<Real>& interval, int M) {
  auto e = interval_energy_expansion<Real>(M);
  const Real w = interval.log_energy_constant();
  e.kind = ExpansionKind::general_interval_E0;
  e.params = {{"a", interval.a()}, {"b", interval.b()}};
  e.leading.n2 = w;
  e.leading.n = -(constants<Real>().log2 + w);
  return e;
}

template <class Real>
Real evaluate_expansion(const Expansion<Real>& e, const Real& n, int truncation) {
  using std::log;
  if (!(n >= 2)) throw DomainError("evaluate_expansion: requires n >= 2");
  if (truncation < 0) throw DomainError("evaluate_expansion: negative truncation");
  if (truncation > e.order()) {
    throw CapacityError("evaluate_expansion: truncation " + std::to_string(truncation) +
                        " exceeds expansion order " + std::to_string(e.order()));
  }
  const Real ln = log(n);
  CompensatedSum<Real> sum;
  sum += e.leading.n2logn * n * n * ln;
  sum += e.leading.n2 * n * n;
  sum += e.leading.nlogn * n * ln;
  sum += e.leading.n * n;
  sum += e.leading.logn * ln;
  sum += e.leading.constant;
  Real power = 1;
  for (int m = 1; m <= truncation; ++m) {
    power /= n;
    sum += e.tail[m - 1] * power;
  }
  return sum.value();
}

// ---------------------------------------------------------------------------
// Algebra

template <class Real>
Expansion<Real> operator+(const Expansion<Real>& a, const Expansion<Real>& b) {
  Expansion<Real> r = a;
  r.leading.n2logn += b.leading.n2logn;
  r.leading.n2 += b.leading.n2;
  r.leading.nlogn += b.leading.nlogn;
  r.leading.n += b.leading.n;
  r.leading.logn += b.leading.logn;
  r.leading.constant += b.leading.constant;
  const int order = std::min(a.order(), b.order());
  r.tail.resize(order);
  for (int m = 0; m < order; ++m) r.tail[m] += b.tail[m];
  return r;
}

template <class Real>
Expansion<Real> operator*(const Real& s, const Expansion<Real>& e) {
  Expansion<Real> r = e;
  r.leading.n2logn *= s;
  r.leading.n2 *= s;
  r.leading.nlogn *= s;
  r.leading.n *= s;
  r.leading.logn *= s;
  r.leading.constant *= s;
  for (auto& c : r.tail) c *= s;
  return r;
}

template <class Real>
Expansion<Real> operator-(const Expansion<Real>& a, const Expansion<Real>& b) {
  return a + Real(-1) * b;
}

template <class Real>
Expansion<Real> multiply_linear(const Real& slope, const Real& intercept, const Expansion<Real>& e) {
  Expansion<Real> r = intercept * e;
  if (slope == 0) return r;
  if (e.leading.n2logn != 0 || e.leading.n2 != 0) {
    throw DomainError("multiply_linear: product leaves the n^2 log n .. n^-M basis");
  }
  if (e.leading.nlogn != 0) {
    throw DomainError("multiply_linear: n^2 log n term from n log n is not supported");
  }
  r.leading.n2logn += Real(0);
  r.leading.n2 += slope * e.leading.n;
  r.leading.nlogn += slope * e.leading.logn;
  r.leading.n += slope * e.leading.constant;
  if (e.order() >= 1) r.leading.constant += slope * e.tail[0];
  const int order = e.order() > 0 ? e.order() - 1 : 0;
  r.tail.resize(order);
  for (int m = 0; m < order; ++m) r.tail[m] += slope * e.tail[m + 1];
  return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

template <class Real>
nlohmann::ordered_json number_to_json(const Real& v) {
  if constexpr (std::is_same_v<Real, double>) {
    return v;
  } else {
    return format_real(v);
  }
}

template <class Real>
Real number_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) return parse_real<Real>(j.get<std::string>());
  if (j.is_number()) {
    if constexpr (std::is_same_v<Real, double>) {
      return j.get<double>();
    } else {
      // JSON numbers carry at most double precision; re-read the shortest text
      return parse_real<Real>(j.dump());
    }
  }
  throw std::invalid_argument("expected a number in expansion JSON");
}

}  // namespace

template <class Real>
std::string expansion_to_json(const Expansion<Real>& e, int indent) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(e.kind));
  j["precision"] = std::string(to_string(precision_traits<Real>::mode));
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : e.params) params[name] = number_to_json(value);
  j["params"] = params;
  nlohmann::ordered_json leading = nlohmann::ordered_json::object();
  if (e.leading.n2logn != 0) leading["n2logn"] = number_to_json(e.leading.n2logn);
  leading["n2"] = number_to_json(e.leading.n2);
  leading["nlogn"] = number_to_json(e.leading.nlogn);
  leading["n"] = number_to_json(e.leading.n);
  leading["logn"] = number_to_json(e.leading.logn);
  leading["const"] = number_to_json(e.leading.constant);
  j["leading"] = leading;
  nlohmann::ordered_json tail = nlohmann::ordered_json::array();
  for (const auto& c : e.tail) tail.push_back(number_to_json(c));
  j["tail"] = tail;
  return j.dump(indent);
}

template <class Real>
Expansion<Real> expansion_from_json(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  Expansion<Real> e;
  e.kind = parse_expansion_kind(j.at("kind").get<std::string>());
  for (const auto& [name, value] : j.at("params").items()) {
    e.params.emplace_back(name, number_from_json<Real>(value));
  }
  const auto& lead = j.at("leading");
  if (lead.contains("n2logn")) e.leading.n2logn = number_from_json<Real>(lead.at("n2logn"));
  e.leading.n2 = number_from_json<Real>(lead.at("n2"));
  e.leading.nlogn = number_from_json<Real>(lead.at("nlogn"));
  e.leading.n = number_from_json<Real>(lead.at("n"));
  e.leading.logn = number_from_json<Real>(lead.at("logn"));
  e.leading.constant = number_from_json<Real>(lead.at("const"));
  for (const auto& c : j.at("tail")) e.tail.push_back(number_from_json<Real>(c));
  if (e.order() > max_expansion_order<Real>()) {
    throw CapacityError("expansion JSON tail exceeds supported order");
  }
  return e;
}

#define FEKETE_INSTANTIATE_ASYM(R)                                                             \
  template R discriminant_constant<R>(const JacobiParams<R>&);                                 \
  template R discriminant_psi<R>(int, const JacobiParams<R>&);                                 \
  template R potential_h<R>(int, const R&, const R&);                                          \
  template R symmetric_potential_h<R>(int, const R&);                                          \
  template R elliptic_h<R>(int, const R&, const R&);                                           \
  template Expansion<R> leading_coeff_expansion<R>(const JacobiParams<R>&, int);               \
  template Expansion<R> value_at_one_expansion<R>(const JacobiParams<R>&, int);                \
  template Expansion<R> discriminant_expansion<R>(const JacobiParams<R>&, int);                \
  template Expansion<R> potential_energy_expansion<R>(const R&, const R&, int);                \
  template Expansion<R> symmetric_potential_energy_expansion<R>(const R&, int);                \
  template Expansion<R> elliptic_log_energy_expansion<R>(const R&, const R&, int);             \
  template Expansion<R> interval_energy_expansion<R>(int);                                     \
  template Expansion<R> general_interval_energy_expansion<R>(const IntervalSpec<R>&, int);     \
  template R evaluate_expansion<R>(const Expansion<R>&, const R&, int);                        \
  template Expansion<R> operator+ <R>(const Expansion<R>&, const Expansion<R>&);               \
  template Expansion<R> operator- <R>(const Expansion<R>&, const Expansion<R>&);               \
  template Expansion<R> operator* <R>(const R&, const Expansion<R>&);                          \
  template Expansion<R> multiply_linear<R>(const R&, const R&, const Expansion<R>&);           \
  template std::string expansion_to_json<R>(const Expansion<R>&, int);                         \
  template Expansion<R> expansion_from_json<R>(const std::string&);

FEKETE_INSTANTIATE_ASYM(double)
FEKETE_INSTANTIATE_ASYM(quad)

}  // namespace fekete
