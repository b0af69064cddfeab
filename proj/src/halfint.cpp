#include "qvariant/halfint.hpp"

#include <cstdlib>

#include "qvariant/errors.hpp"

namespace qvariant {

static long parse_long(const std::string& s, const std::string& whole) {
  if (s.empty()) throw DomainError("bad half-integer '" + whole + "'");
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (...) {
    throw DomainError("bad half-integer '" + whole + "'");
  }
  if (used != s.size()) throw DomainError("bad half-integer '" + whole + "'");
  return v;
}

HalfInt HalfInt::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long n = parse_long(s.substr(0, slash), s);
    long d = parse_long(s.substr(slash + 1), s);
    if (d == 1) return from_twice(2 * n);
    if (d == 2) return from_twice(n);
    if (d == -2) return from_twice(-n);
    if (d != 0 && (2 * n) % d == 0) return from_twice(2 * n / d);
    throw DomainError("not a half-integer: '" + s + "'");
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    long whole = (ip.empty() || ip == "-" || ip == "+") ? 0 : parse_long(ip, s);
    while (!fp.empty() && fp.back() == '0') fp.pop_back();
    long t = 2 * std::labs(whole);
    if (fp == "5")
      t += 1;
    else if (!fp.empty())
      throw DomainError("not a half-integer: '" + s + "'");
    return from_twice(neg ? -t : t);
  }
  return from_twice(2 * parse_long(s, s));
}

long HalfInt::as_integer() const {
  if (!is_integer()) throw DomainError("half-integer " + str() + " is not an integer");
  return twice_ / 2;
}

HalfInt HalfInt::halve(HalfInt s) {
  if (!s.is_integer()) throw DomainError("cannot halve non-integer exponent " + s.str());
  return from_twice(s.twice_ / 2);
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace qvariant
