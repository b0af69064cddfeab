#pragma once

#include <vector>

#include "qvariant/scalar.hpp"

namespace qvariant {

// Dense univariate polynomial, coeffs[k] is the x^k coefficient.
// Trailing zeros are always trimmed; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& c) { return Poly({c}); }
  // (x - r)
  static Poly linear_root(const Scalar& r);
  static Poly monomial(const Scalar& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  // Zero of `like`'s mode when k is out of range.
  Scalar coeff(int k, const Scalar& like) const;
  Scalar lead() const { return c_.back(); }

  Scalar operator()(const Scalar& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& s) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const;

  // p(c x)
  Poly scaled_argument(const Scalar& c) const;
  Poly derivative() const;

 private:
  std::vector<Scalar> c_;
  void trim();
};

}  // namespace qvariant
