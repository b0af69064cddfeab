#pragma once

#include <compare>
#include <string>

namespace qvariant {

// Exponent e stored as 2e, so e ranges over (1/2)Z.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int n) : twice_(2 * n) {}
  static constexpr HalfInt from_twice(long t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  static const HalfInt half;

  // "3/2", "-1", "0.5", "-2.5"
  static HalfInt parse(const std::string& s);

  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  long as_integer() const;  // throws unless integral
  double value() const { return static_cast<double>(twice_) / 2.0; }

  // s/2 for integral s, e.g. lambda = (h1+h2-l1-l2-a1-a2+1)/2.
  static HalfInt halve(HalfInt s);

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt operator*(int k) const { return from_twice(twice_ * k); }
  HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const;

 private:
  long twice_ = 0;
};

inline constexpr HalfInt HalfInt::half = HalfInt::from_twice(1);

}  // namespace qvariant
