#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace qvariant {

enum class Mode { exact, floating };

const char* mode_name(Mode m);

// Per-scalar cap on numerator+denominator bits in exact mode.
std::size_t bit_limit();
void set_bit_limit(std::size_t bits);

class Scalar {
 public:
  using Complex = std::complex<double>;

  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(long n) : v_(mpq_class(n)) {}
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& r);
  explicit Scalar(Complex z) : v_(z) {}
  static Scalar floating(double re, double im = 0.0) { return Scalar(Complex(re, im)); }

  // "3/4", "-2", "0.25" (exact only when the decimal is finite),
  // or for float mode "0.3", "1e-2".
  static Scalar parse(const std::string& s, Mode mode);

  Mode mode() const { return v_.index() == 0 ? Mode::exact : Mode::floating; }
  bool is_exact() const { return v_.index() == 0; }
  const mpq_class& rational() const;
  Complex complex() const;  // lossy for exact values
  double magnitude() const { return std::abs(complex()); }

  bool is_zero() const;
  bool is_one() const;

  // Converts to `m`, lifting exact values to doubles if needed.
  Scalar in_mode(Mode m) const;
  Scalar zero_like() const;
  Scalar one_like() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  Scalar pow(long k) const;
  Scalar inverse() const;

  // Exact equality; in float mode this is bitwise value comparison.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::variant<mpq_class, Complex> v_;
  void check_same(const Scalar& o) const;
  void check_bits() const;
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

// Relative smallness test used by float-mode checks; exact mode is exact zero.
bool negligible(const Scalar& value, double scale, double tol);

}  // namespace qvariant
