#include "qvariant/ratfunc.hpp"

#include <algorithm>

#include "qvariant/errors.hpp"

namespace qvariant {

LaurentPoly::LaurentPoly(int low, std::vector<Scalar> c) : low_(low), c_(std::move(c)) { trim(); }

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

Scalar LaurentPoly::coeff(int e, const Scalar& like) const {
  if (c_.empty() || e < low_ || e > high()) return like.zero_like();
  return c_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<Scalar> r(static_cast<std::size_t>(hi - lo + 1), c_[0].zero_like());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(low_ - lo)] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i + static_cast<std::size_t>(o.low_ - lo)] += o.c_[i];
  return LaurentPoly(lo, std::move(r));
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Scalar> r;
  for (const auto& c : c_) r.push_back(-c);
  return LaurentPoly(low_, std::move(r));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, c_[0].zero_like());
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return LaurentPoly(low_ + o.low_, std::move(r));
}

LaurentPoly LaurentPoly::operator*(const Scalar& s) const {
  std::vector<Scalar> r;
  for (const auto& c : c_) r.push_back(c * s);
  return LaurentPoly(low_, std::move(r));
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += e;
  return r;
}

RatFunc RatFunc::variable(const Scalar& c) {
  RatFunc r;
  r.num_ = LaurentPoly(1, {c});
  r.den_ = LaurentPoly::constant(c.one_like());
  return r;
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (den_.is_monomial()) {
    Scalar inv = den_.low_coeff().inverse();
    num_ = (num_ * inv).shifted(-den_.low());
    den_ = LaurentPoly::constant(inv.one_like());
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  RatFunc r;
  if (den_.is_monomial() && o.den_.is_monomial()) {
    r.num_ = num_ + o.num_;  // both denominators already folded to 1
    r.den_ = den_;
  } else {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
  }
  r.normalize();
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  RatFunc r;
  r.num_ = num_ * o.num_;
  r.den_ = den_ * o.den_;
  r.normalize();
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw ArithmeticError("division by the zero rational function");
  RatFunc r;
  r.num_ = num_ * o.den_;
  r.den_ = den_ * o.num_;
  r.normalize();
  return r;
}

RatFunc RatFunc::times_power(int e) const {
  RatFunc r = *this;
  r.num_ = r.num_.shifted(e);
  return r;
}

int RatFunc::growth_at_infinity() const {
  if (is_zero()) throw DomainError("growth of the zero function");
  return num_.high() - den_.high();
}

Scalar RatFunc::limit_infinity() const {
  if (is_zero()) return den_.high_coeff().zero_like();
  int g = growth_at_infinity();
  if (g > 0) throw DomainError("rational function diverges as T -> infinity (order " + std::to_string(g) + ")");
  if (g < 0) return num_.high_coeff().zero_like();
  return num_.high_coeff() / den_.high_coeff();
}

Scalar RatFunc::limit_zero() const {
  if (is_zero()) return den_.low_coeff().zero_like();
  int g = num_.low() - den_.low();
  if (g < 0) throw DomainError("rational function diverges as T -> 0 (order " + std::to_string(-g) + ")");
  if (g > 0) return num_.low_coeff().zero_like();
  return num_.low_coeff() / den_.low_coeff();
}

static Scalar eval_laurent(const LaurentPoly& p, const Scalar& T) {
  Scalar acc = T.zero_like();
  if (p.is_zero()) return acc;
  for (int e = p.high(); e >= p.low(); --e) acc = acc * T + p.coeff(e, T);
  return acc * T.pow(p.low());
}

Scalar RatFunc::eval(const Scalar& T) const { return eval_laurent(num_, T) / eval_laurent(den_, T); }

}  // namespace qvariant
