#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hardylab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Branch selector shared by the Hardy operators, Muckenhoupt functionals and
/// inequality checks: Minus integrates from the left endpoint, Plus from the
/// right.
enum class Branch { Minus, Plus };

inline const char* to_string(Branch b) {
  return b == Branch::Minus ? "minus" : "plus";
}

/// Open interval (a, b) with extended-real endpoints, a < b.
struct Interval {
  double a;
  double b;

  Interval(double lo, double hi) : a(lo), b(hi) {
    if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) {
      throw std::invalid_argument("Interval: endpoints must satisfy a < b, got [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }

  bool contains(double x) const { return x > a && x < b; }
  bool contains_closure(double x) const { return x >= a && x <= b; }
  bool lower_infinite() const { return std::isinf(a); }
  bool upper_infinite() const { return std::isinf(b); }
  bool finite() const { return !lower_infinite() && !upper_infinite(); }

  bool operator==(const Interval& o) const { return a == o.a && b == o.b; }
};

}  // namespace hardylab
