#pragma once

#include <cmath>
#include <limits>

namespace plenoptic {

/// Extended axial length in mm: either finite or the distinguished INFINITY.
class Distance {
 public:
  static constexpr Distance finite(double mm) noexcept { return Distance(mm); }
  static constexpr Distance infinity() noexcept {
    return Distance(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_infinite() const noexcept {
    return value_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const noexcept { return !is_infinite(); }

  // +inf when infinite, so ordering comparisons keep working.
  constexpr double mm() const noexcept { return value_; }

  // Re-reference to another plane; INFINITY stays INFINITY.
  constexpr Distance offset(double by_mm) const noexcept {
    return is_infinite() ? *this : Distance(value_ + by_mm);
  }

  constexpr Distance scaled(double k) const noexcept {
    return is_infinite() ? *this : Distance(value_ * k);
  }

  friend constexpr bool operator==(Distance, Distance) = default;

 private:
  constexpr explicit Distance(double v) noexcept : value_(v) {}
  double value_;
};

}  // namespace plenoptic
