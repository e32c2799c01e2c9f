#pragma once

#include <gmpxx.h>

#include <iostream>
#include <string>
#include <utility>

#include "mqhahn/errors.hpp"

namespace mqhahn {

// Arbitrary-precision rational number, always in canonical form
// (reduced fraction, positive denominator). All arithmetic is exact;
// dividing by zero throws instead of producing a sentinel.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}    // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Parses "p", "-p", or "p/q" (whitespace-trimmed).
  static Rational from_string(const std::string& s) {
    std::string t;
    for (char c : s)
      if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw Error("empty rational literal");
    try {
      mpq_class v(t, 10);
      if (v.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
      v.canonicalize();
      return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
      throw Error("malformed rational literal: '" + s + "'");
    }
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Requires is_integer() and a value that fits in long.
  long to_long() const {
    if (!is_integer()) throw Error("rational is not an integer: " + str());
    if (!v_.get_num().fits_slong_p()) throw Error("integer too large for long: " + str());
    return v_.get_num().get_si();
  }

  double to_double() const { return v_.get_d(); }

  std::string str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  // Exact integer power; negative exponents invert (zero base throws).
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = *this;
    if (e < 0) {
      base = base.inv();
      e = -e;
    }
    Rational acc(1);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace mqhahn
