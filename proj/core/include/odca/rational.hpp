#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "odca/errors.hpp"

namespace odca {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always canonical: positive denominator,
// gcd(|num|, den) = 1. The backend keeps the invariant after every op.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
      v_.assign(boost::multiprecision::cpp_rational(-num, -den));
    } else {
      v_.assign(boost::multiprecision::cpp_rational(num, den));
    }
  }

  // Accepts "3", "-7/2" and non-canonical forms like "2/4" or "1/-2".
  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(text));
      return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
      throw InputError("unparseable rational: \"" + text + "\"");
    }
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  std::string str() const {
    std::string s = numerator().str();
    const BigInt den = denominator();
    if (den != 1) s += "/" + den.str();
    return s;
  }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

}  // namespace odca
