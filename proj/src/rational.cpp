#include "stq/rational.hpp"

#include <cmath>
#include <numeric>

namespace stq {

namespace {

using int128 = __int128;

long long checked_narrow(int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::numeric_overflow, "rational overflow");
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) fail(ErrorCode::invalid_argument, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

Rational Rational::operator+(const Rational& o) const {
  int128 n = int128(num_) * o.den_ + int128(o.num_) * den_;
  int128 d = int128(den_) * o.den_;
  return Rational(checked_narrow(n), checked_narrow(d));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  int128 n = int128(num_) * o.num_;
  int128 d = int128(den_) * o.den_;
  return Rational(checked_narrow(n), checked_narrow(d));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) fail(ErrorCode::invalid_argument, "rational division by zero");
  int128 n = int128(num_) * o.den_;
  int128 d = int128(den_) * o.num_;
  return Rational(checked_narrow(n), checked_narrow(d));
}

bool Rational::operator<(const Rational& o) const {
  return int128(num_) * o.den_ < int128(o.num_) * den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

// Factor n = m*m*k with k square-free (n small in this project).
void square_free_split(long long n, long long& m, long long& k) {
  m = 1;
  k = 1;
  for (long long p = 2; p * p <= n; ++p) {
    long long pow = 0;
    while (n % p == 0) {
      n /= p;
      ++pow;
    }
    for (long long i = 0; i + 1 < pow; i += 2) m *= p;
    if (pow % 2 == 1) k *= p;
  }
  k *= n;
}

}  // namespace

Surd::Surd(Rational coeff, long long root) {
  if (root < 0) fail(ErrorCode::invalid_argument, "surd with negative root");
  if (root == 0 || coeff.is_zero()) {
    coeff_ = Rational(0);
    root_ = 1;
    return;
  }
  long long m = 1, k = 1;
  square_free_split(root, m, k);
  coeff_ = coeff * Rational(m);
  root_ = k;
}

Surd Surd::operator*(const Surd& o) const {
  if (is_zero() || o.is_zero()) return Surd();
  return Surd(coeff_ * o.coeff_, root_ * o.root_);
}

Surd Surd::operator+(const Surd& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (root_ != o.root_)
    fail(ErrorCode::invalid_argument, "surd addition across different extensions");
  return Surd(coeff_ + o.coeff_, root_);
}

bool Surd::operator==(const Surd& o) const {
  return coeff_ == o.coeff_ && (coeff_.is_zero() || root_ == o.root_);
}

double Surd::to_double() const {
  return coeff_.to_double() * std::sqrt(static_cast<double>(root_));
}

std::string Surd::to_string() const {
  if (root_ == 1 || coeff_.is_zero()) return coeff_.to_string();
  std::string radical = "sqrt(" + std::to_string(root_) + ")";
  std::string head;
  if (coeff_.num() == 1)
    head = radical;
  else if (coeff_.num() == -1)
    head = "-" + radical;
  else
    head = std::to_string(coeff_.num()) + "*" + radical;
  if (coeff_.den() == 1) return head;
  return head + "/" + std::to_string(coeff_.den());
}

Surd surd_sqrt(const Rational& r) {
  if (r.sign() < 0) fail(ErrorCode::invalid_argument, "sqrt of negative rational");
  if (r.is_zero()) return Surd();
  return Surd(Rational(1, r.den()), r.num() * r.den());
}

double ClosedForm::value() const {
  double v = pi_coeff.to_double() * M_PI;
  if (acos_arg) v += std::acos(acos_arg->to_double());
  return v;
}

std::string ClosedForm::to_string() const {
  std::string s;
  if (!pi_coeff.is_zero()) {
    if (pi_coeff == Rational(1))
      s = "pi";
    else if (pi_coeff == Rational(-1))
      s = "-pi";
    else if (pi_coeff.is_integer())
      s = pi_coeff.to_string() + "*pi";
    else if (pi_coeff.num() == 1)
      s = "pi/" + std::to_string(pi_coeff.den());
    else if (pi_coeff.num() == -1)
      s = "-pi/" + std::to_string(pi_coeff.den());
    else
      s = std::to_string(pi_coeff.num()) + "*pi/" + std::to_string(pi_coeff.den());
  }
  if (acos_arg) {
    std::string a = "acos(" + acos_arg->to_string() + ")";
    s = s.empty() ? a : s + " + " + a;
  }
  if (s.empty()) s = "0";
  return s;
}

bool ClosedForm::operator==(const ClosedForm& o) const {
  if (pi_coeff != o.pi_coeff) return false;
  if (acos_arg.has_value() != o.acos_arg.has_value()) return false;
  return !acos_arg || *acos_arg == *o.acos_arg;
}

}  // namespace stq
