#ifndef FEKETE_SUMMATION_HPP_
#define FEKETE_SUMMATION_HPP_

#include <cmath>

namespace fekete {

/// Neumaier's variant of Kahan summation. Terms are absorbed in call order,
/// so two callers adding the same sequence get the same bits.
template <class Real>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(const Real& init) : sum_(init) {}

  CompensatedSum& operator+=(const Real& term) {
    using std::abs;
    Real t = sum_ + term;
    if (abs(sum_) >= abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  CompensatedSum& operator-=(const Real& term) { return *this += -term; }

  Real value() const { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

}  // namespace fekete

#endif  // FEKETE_SUMMATION_HPP_
