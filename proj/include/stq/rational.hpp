#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "stq/error.hpp"

namespace stq {

// Exact rational number on 64-bit integers, always normalized (gcd 1, positive
// denominator). Coefficients in this project stay tiny; overflow is detected
// and reported instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

// coeff * sqrt(root) with root square-free and >= 1. The closed forms of this
// project live in quadratic extensions (sqrt 2, 3, 7, 14, 21, ...); products of
// two surds are renormalized so the root stays square-free.
class Surd {
 public:
  Surd() = default;
  Surd(Rational r) : coeff_(r), root_(1) {}  // NOLINT: implicit by design
  Surd(Rational coeff, long long root);

  const Rational& coeff() const { return coeff_; }
  long long root() const { return root_; }
  bool is_rational() const { return root_ == 1 || coeff_.is_zero(); }
  bool is_zero() const { return coeff_.is_zero(); }
  int sign() const { return coeff_.sign(); }

  Surd operator-() const { return Surd(-coeff_, root_); }
  Surd operator*(const Surd& o) const;
  Surd operator*(const Rational& r) const { return Surd(coeff_ * r, root_); }
  // Addition requires both operands in the same extension (equal roots).
  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const { return *this + (-o); }

  bool operator==(const Surd& o) const;
  bool operator!=(const Surd& o) const { return !(*this == o); }

  Rational squared_rational() const { return coeff_ * coeff_ * Rational(root_); }
  double to_double() const;
  std::string to_string() const;

 private:
  Rational coeff_;
  long long root_ = 1;
};

// sqrt of a nonnegative rational as a Surd: sqrt(p/q) = sqrt(p*q)/q.
Surd surd_sqrt(const Rational& r);

// Exact angle value pi_coeff*pi + acos(acos_arg), the shape of every solved
// quantity of the tiling (pure pi-multiples have no acos part).
struct ClosedForm {
  Rational pi_coeff;
  std::optional<Surd> acos_arg;

  static ClosedForm pi_multiple(Rational r) { return {r, std::nullopt}; }
  static ClosedForm acos_of(Surd s) { return {Rational(0), s}; }

  double value() const;
  std::string to_string() const;
  bool operator==(const ClosedForm& o) const;
  bool operator!=(const ClosedForm& o) const { return !(*this == o); }
};

}  // namespace stq
