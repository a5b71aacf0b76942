#ifndef FEKETE_PRECISION_HPP_
#define FEKETE_PRECISION_HPP_

#include <boost/multiprecision/float128.hpp>

#include <Eigen/Core>

#include <cmath>
#include <iomanip>
#include <limits>
#include <locale>
#include <stdexcept>
#include <sstream>
#include <string>
#include <string_view>

namespace fekete {

/// Extended scalar: IEEE binary128, 113-bit significand (~34 decimal digits).
using quad = boost::multiprecision::float128;

enum class Precision { standard, extended };

Precision parse_precision(std::string_view text);
std::string_view to_string(Precision p);

template <class Real>
struct precision_traits;

template <>
struct precision_traits<double> {
  static constexpr Precision mode = Precision::standard;
  static constexpr int print_digits = std::numeric_limits<double>::max_digits10;
  static constexpr int max_expansion_order = 10;
};

template <>
struct precision_traits<quad> {
  static constexpr Precision mode = Precision::extended;
  static constexpr int print_digits = std::numeric_limits<quad>::max_digits10;
  static constexpr int max_expansion_order = 16;
};

template <class Real>
constexpr Real machine_epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

/// Tolerances are quoted for double; in extended mode they shrink by the
/// ratio of machine epsilons.
template <class Real>
Real scaled_tolerance(double standard_tol) {
  return Real(standard_tol) * (machine_epsilon<Real>() /
                               Real(std::numeric_limits<double>::epsilon()));
}

/// Shortest text that reproduces the value exactly (max_digits10, %g style).
template <class Real>
std::string format_real(const Real& v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(precision_traits<Real>::print_digits) << v;
  return os.str();
}

template <class Real>
Real parse_real(const std::string& text);

template <>
inline double parse_real<double>(const std::string& text) {
  std::size_t used = 0;
  double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("not a number: " + text);
  return v;
}

template <>
inline quad parse_real<quad>(const std::string& text) {
  // boost's string constructor throws std::runtime_error on junk
  return quad(text);
}

}  // namespace fekete

namespace Eigen {
template <>
struct NumTraits<fekete::quad> : GenericNumTraits<fekete::quad> {
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  using Real = fekete::quad;
  using NonInteger = fekete::quad;
  using Literal = fekete::quad;
  using Nested = fekete::quad;
  static inline Real epsilon() { return std::numeric_limits<fekete::quad>::epsilon(); }
  static inline Real dummy_precision() { return Real(1e-30); }
  static inline Real highest() { return (std::numeric_limits<fekete::quad>::max)(); }
  static inline Real lowest() { return -(std::numeric_limits<fekete::quad>::max)(); }
  static inline int digits10() { return 33; }
};
}  // namespace Eigen

#endif  // FEKETE_PRECISION_HPP_
