#pragma once

#include <cstdint>
#include <ostream>

#include "eulerchar/errors.hpp"

namespace eulerchar {

/// Exact reduced Euler characteristic. All arithmetic is overflow-checked
/// and throws OverflowError instead of wrapping.
class EulerValue {
public:
  constexpr EulerValue() = default;
  constexpr explicit EulerValue(std::int64_t v) : value_(v) {}

  constexpr std::int64_t value() const { return value_; }

  friend EulerValue operator+(EulerValue a, EulerValue b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.value_, b.value_, &r))
      throw OverflowError("Euler characteristic overflow in addition");
    return EulerValue(r);
  }
  friend EulerValue operator-(EulerValue a, EulerValue b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.value_, b.value_, &r))
      throw OverflowError("Euler characteristic overflow in subtraction");
    return EulerValue(r);
  }
  friend EulerValue operator*(EulerValue a, EulerValue b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r))
      throw OverflowError("Euler characteristic overflow in multiplication");
    return EulerValue(r);
  }
  EulerValue operator-() const { return EulerValue(0) - *this; }
  EulerValue& operator+=(EulerValue o) { return *this = *this + o; }
  EulerValue& operator-=(EulerValue o) { return *this = *this - o; }
  EulerValue& operator*=(EulerValue o) { return *this = *this * o; }

  friend constexpr bool operator==(EulerValue, EulerValue) = default;
  friend constexpr auto operator<=>(EulerValue, EulerValue) = default;

  friend std::ostream& operator<<(std::ostream& os, EulerValue v) {
    return os << v.value_;
  }

private:
  std::int64_t value_ = 0;
};

}  // namespace eulerchar
