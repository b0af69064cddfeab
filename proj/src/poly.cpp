#include "qvariant/poly.hpp"

#include <algorithm>

#include "qvariant/errors.hpp"

namespace qvariant {

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::linear_root(const Scalar& r) { return Poly({-r, r.one_like()}); }

Poly Poly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, c.zero_like());
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int k, const Scalar& like) const {
  if (k < 0 || k > degree()) return like.zero_like();
  return c_[static_cast<std::size_t>(k)];
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar r = x.zero_like();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (c_.empty()) return o;
  if (o.c_.empty()) return *this;
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), c_[0].zero_like());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(-c);
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, c_[0].zero_like());
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Scalar& s) const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c * s);
  return Poly(std::move(r));
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

Poly Poly::scaled_argument(const Scalar& c) const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  Scalar pw = c.one_like();
  for (const auto& a : c_) {
    r.push_back(a * pw);
    pw *= c;
  }
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Scalar> r;
  for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * Scalar(static_cast<long>(k)).in_mode(c_[k].mode()));
  return Poly(std::move(r));
}

}  // namespace qvariant
