#ifndef STPG_EXT_REAL_HPP
#define STPG_EXT_REAL_HPP

#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

namespace stpg {

/// Payoff scalar over R ∪ {-inf}. The -inf sentinel marks inadmissible
/// cells of a padded payoff vector. Arithmetic rules:
///   -inf + x = -inf,   c * -inf = -inf for c > 0,   0 * -inf = 0,
///   -inf < every finite value,   -inf == -inf.
class ExtReal {
 public:
  constexpr ExtReal() : v_(0.0) {}
  constexpr ExtReal(double v) : v_(v) {}  // NOLINT: implicit by design

  static constexpr ExtReal neg_inf() {
    return ExtReal(-std::numeric_limits<double>::infinity());
  }

  bool finite() const { return std::isfinite(v_); }
  bool is_neg_inf() const { return !finite(); }

  /// Underlying double; -inf when the value is the sentinel.
  double value() const { return v_; }

  friend ExtReal operator+(ExtReal a, ExtReal b) { return {a.v_ + b.v_}; }
  ExtReal& operator+=(ExtReal o) {
    v_ += o.v_;
    return *this;
  }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

 private:
  double v_;
};

/// c * x for a nonnegative coefficient, with 0 * -inf = 0. Probability
/// weights are the only coefficients that ever multiply padded payoffs.
inline ExtReal scaled(double c, ExtReal x) {
  assert(c >= 0.0);
  if (c == 0.0) return ExtReal(0.0);
  return ExtReal(c * x.value());
}

/// Structure vector of one payoff function.
using PayoffRow = std::vector<ExtReal>;

}  // namespace stpg

#endif  // STPG_EXT_REAL_HPP
