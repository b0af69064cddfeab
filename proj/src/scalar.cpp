#include "qvariant/scalar.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qvariant/errors.hpp"

namespace qvariant {

namespace {
std::atomic<std::size_t> g_bit_limit{1000000};
}

const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

std::size_t bit_limit() { return g_bit_limit.load(std::memory_order_relaxed); }
void set_bit_limit(std::size_t bits) { g_bit_limit.store(bits, std::memory_order_relaxed); }

Scalar::Scalar(long num, long den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  mpq_class r(num, den);
  r.canonicalize();
  v_ = r;
}

Scalar::Scalar(const mpq_class& r) : v_(r) {
  std::get<0>(v_).canonicalize();
  check_bits();
}

static mpq_class parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class n, d;
    if (n.set_str(s.substr(0, slash), 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0)
      throw DomainError("bad rational literal '" + s + "'");
    if (d == 0) throw ArithmeticError("rational with zero denominator: " + s);
    mpq_class r(n, d);
    r.canonicalize();
    return r;
  }
  // finite decimal, optional exponent
  std::string mant = s;
  long exp10 = 0;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    mant = s.substr(0, e);
    try {
      exp10 = std::stol(s.substr(e + 1));
    } catch (...) {
      throw DomainError("bad number literal '" + s + "'");
    }
  }
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty() || mant == "-" || mant == "+") throw DomainError("bad number literal '" + s + "'");
  if (mant[0] == '+') mant.erase(0, 1);
  mpz_class n;
  if (n.set_str(mant, 10) != 0) throw DomainError("bad number literal '" + s + "'");
  mpz_class ten = 10, scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(exp10)));
  mpq_class r = exp10 >= 0 ? mpq_class(n * scale) : mpq_class(n, scale);
  r.canonicalize();
  return r;
}

Scalar Scalar::parse(const std::string& s, Mode mode) {
  if (s.empty()) throw DomainError("empty number literal");
  if (mode == Mode::exact) return Scalar(parse_rational(s));
  auto slash = s.find('/');
  if (slash != std::string::npos) return Scalar(parse_rational(s)).in_mode(Mode::floating);
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(s, &used);
  } catch (...) {
    throw DomainError("bad number literal '" + s + "'");
  }
  if (used != s.size()) throw DomainError("bad number literal '" + s + "'");
  return Scalar::floating(d);
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw ArithmeticError("rational() on a float scalar");
  return std::get<0>(v_);
}

Scalar::Complex Scalar::complex() const {
  if (is_exact()) return Complex(std::get<0>(v_).get_d(), 0.0);
  return std::get<1>(v_);
}

bool Scalar::is_zero() const {
  if (is_exact()) return sgn(std::get<0>(v_)) == 0;
  return std::get<1>(v_) == Complex(0.0, 0.0);
}

bool Scalar::is_one() const {
  if (is_exact()) return std::get<0>(v_) == 1;
  return std::get<1>(v_) == Complex(1.0, 0.0);
}

Scalar Scalar::in_mode(Mode m) const {
  if (m == mode()) return *this;
  if (m == Mode::floating) return Scalar(complex());
  throw ArithmeticError("cannot convert a float scalar to exact");
}

Scalar Scalar::zero_like() const { return is_exact() ? Scalar(0L) : Scalar::floating(0.0); }
Scalar Scalar::one_like() const { return is_exact() ? Scalar(1L) : Scalar::floating(1.0); }

void Scalar::check_same(const Scalar& o) const {
  if (v_.index() != o.v_.index()) throw ArithmeticError("exact and float scalars mixed in one expression");
}

void Scalar::check_bits() const {
  if (!is_exact()) return;
  const mpq_class& r = std::get<0>(v_);
  std::size_t bits = mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
  if (bits > bit_limit())
    throw ArithmeticError("exact scalar exceeds bit limit (" + std::to_string(bits) + " > " +
                          std::to_string(bit_limit()) + ")");
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<0>(v_)));
  return Scalar(-std::get<1>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (is_exact()) {
    std::get<0>(v_) += std::get<0>(o.v_);
    check_bits();
  } else {
    std::get<1>(v_) += std::get<1>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (is_exact()) {
    std::get<0>(v_) -= std::get<0>(o.v_);
    check_bits();
  } else {
    std::get<1>(v_) -= std::get<1>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (is_exact()) {
    std::get<0>(v_) *= std::get<0>(o.v_);
    check_bits();
  } else {
    std::get<1>(v_) *= std::get<1>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (is_exact()) {
    if (sgn(std::get<0>(o.v_)) == 0) throw ArithmeticError("division by exact zero");
    std::get<0>(v_) /= std::get<0>(o.v_);
    check_bits();
  } else {
    std::get<1>(v_) /= std::get<1>(o.v_);
  }
  return *this;
}

Scalar Scalar::inverse() const { return one_like() / *this; }

Scalar Scalar::pow(long k) const {
  if (is_exact()) {
    const mpq_class& r = std::get<0>(v_);
    if (k < 0 && sgn(r) == 0) throw ArithmeticError("negative power of exact zero");
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), e);
    mpq_class out = k < 0 ? mpq_class(d, n) : mpq_class(n, d);
    return Scalar(out);
  }
  // repeated squaring keeps integer powers free of log/exp rounding
  Complex base = std::get<1>(v_), acc(1.0, 0.0);
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  while (e) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1;
  }
  return Scalar(k < 0 ? Complex(1.0, 0.0) / acc : acc);
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  if (is_exact()) return std::get<0>(v_) == std::get<0>(o.v_);
  return std::get<1>(v_) == std::get<1>(o.v_);
}

std::string Scalar::str() const {
  if (is_exact()) {
    const mpq_class& r = std::get<0>(v_);
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  }
  Complex z = std::get<1>(v_);
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

bool negligible(const Scalar& value, double scale, double tol) {
  if (value.is_exact()) return value.is_zero();
  return value.magnitude() <= tol * std::max(scale, 1e-300);
}

}  // namespace qvariant
