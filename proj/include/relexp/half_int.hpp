#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>

namespace relexp {

/// Exact angular-momentum quantum number: stores 2j.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int value) : twice_(2 * value) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double to_double() const { return 0.5 * twice_; }

  // Only valid when is_integer().
  constexpr int to_int() const { return twice_ / 2; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) {
    if (h.is_integer()) return os << h.to_int();
    return os << h.twice_ << "/2";
  }

 private:
  int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return HalfInt::from_twice(std::abs(h.twice())); }

namespace literals {
constexpr HalfInt operator""_j(unsigned long long v) { return HalfInt(static_cast<int>(v)); }
constexpr HalfInt operator""_half(unsigned long long v) {
  return HalfInt::from_twice(static_cast<int>(v));
}
}  // namespace literals

}  // namespace relexp
