#pragma once

#include <compare>
#include <limits>
#include <string>

namespace shd {

/// A value in [0, +inf]. The distances in this library are extended metrics:
/// comparing complexes whose occupied dimensions differ yields +inf.
class ExtendedDistance {
 public:
  constexpr ExtendedDistance() = default;

  /// Throws InvalidArgument for NaN or negative input. +inf is accepted.
  explicit ExtendedDistance(double value);

  static constexpr ExtendedDistance infinity() {
    ExtendedDistance d;
    d.value_ = std::numeric_limits<double>::infinity();
    return d;
  }

  constexpr double value() const { return value_; }
  constexpr bool is_finite() const { return value_ != std::numeric_limits<double>::infinity(); }
  constexpr bool is_infinite() const { return !is_finite(); }

  /// Saturating: x + inf = inf.
  friend ExtendedDistance operator+(ExtendedDistance a, ExtendedDistance b) {
    ExtendedDistance s;
    s.value_ = a.value_ + b.value_;
    return s;
  }

  friend constexpr bool operator==(ExtendedDistance, ExtendedDistance) = default;
  friend constexpr std::partial_ordering operator<=>(ExtendedDistance a, ExtendedDistance b) {
    return a.value_ <=> b.value_;
  }

  /// "inf" for +inf, otherwise the shortest round-trip decimal form.
  std::string to_string() const;

 private:
  double value_ = 0.0;
};

}  // namespace shd
