#pragma once

#include <vector>

#include "qvariant/scalar.hpp"

namespace qvariant {

// Finite Laurent polynomial sum_k c_k T^{low+k}, trimmed at both ends.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int low, std::vector<Scalar> c);
  static LaurentPoly constant(const Scalar& c) { return LaurentPoly(0, {c}); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  const Scalar& low_coeff() const { return c_.front(); }
  const Scalar& high_coeff() const { return c_.back(); }
  bool is_monomial() const { return c_.size() == 1; }
  Scalar coeff(int e, const Scalar& like) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Scalar& s) const;
  LaurentPoly shifted(int e) const;  // times T^e

 private:
  int low_ = 0;
  std::vector<Scalar> c_;
  void trim();
};

// Rational function num/den in one symbolic variable T. Coefficients are
// Scalars; a monomial denominator is always folded into the numerator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Scalar& c) : num_(LaurentPoly::constant(c)), den_(LaurentPoly::constant(c.one_like())) {}
  // c * T
  static RatFunc variable(const Scalar& c);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc times_power(int e) const;  // times T^e

  // Order of growth as T -> infinity (deg num - deg den).
  int growth_at_infinity() const;
  // Limits; throw DomainError when the function diverges there.
  Scalar limit_infinity() const;
  Scalar limit_zero() const;
  // Value at a nonzero T.
  Scalar eval(const Scalar& T) const;

 private:
  LaurentPoly num_, den_;
  void normalize();
};

}  // namespace qvariant
