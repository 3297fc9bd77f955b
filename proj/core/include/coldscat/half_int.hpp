#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace coldscat {

// Angular-momentum quantum number stored as twice its value, so that
// half-integers are exact. Everything in this engine is integer-valued,
// but the representation keeps the Wigner routines general.
class HalfInt {
 public:
  constexpr HalfInt() : twice_(0) {}
  constexpr explicit HalfInt(int twice_value) : twice_(twice_value) {}

  static constexpr HalfInt from_int(int j) { return HalfInt(2 * j); }
  static constexpr HalfInt from_twice(int t) { return HalfInt(t); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return (twice_ % 2) == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  // valid only when is_integer()
  constexpr int as_int() const { return twice_ / 2; }

  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  int twice_;
};

}  // namespace coldscat
