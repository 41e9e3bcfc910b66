#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mutvis {

// Exact rational over 64-bit integers with checked arithmetic. Bound and
// expectation formulas are evaluated here; floating point never enters a
// test assertion.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num_) * b.den_ +
                            static_cast<__int128>(b.num_) * a.den_),
                    checked(static_cast<__int128>(a.den_) * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const long long g1 = std::gcd(a.num_, b.den_);
    const long long g2 = std::gcd(b.num_, a.den_);
    return Rational(checked(static_cast<__int128>(a.num_ / g1) * (b.num_ / g2)),
                    checked(static_cast<__int128>(a.den_ / g2) * (b.den_ / g1)));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("division by zero");
    return a * Rational(b.den_, b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "p/q", or just "p" when integral.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rational pow(const Rational& base, int exp) {
    if (exp < 0) return Rational(1) / pow(base, -exp);
    Rational result(1);
    for (int i = 0; i < exp; ++i) result = result * base;
    return result;
  }

 private:
  static long long checked(__int128 x) {
    if (x > INT64_MAX || x < INT64_MIN) {
      throw std::overflow_error("rational overflow");
    }
    return static_cast<long long>(x);
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace mutvis
