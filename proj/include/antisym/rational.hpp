#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "antisym/errors.hpp"

namespace antisym {

using BigInt = mpz_class;

/// Exact rational scalar. Thin wrapper over GMP's mpq_class that keeps the
/// value canonical (lowest terms, positive denominator) at all times and
/// exposes only the operations the toolkit needs. All linear-program data,
/// T-matrix entries and certificate values are stored in this type.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, LP data reads naturally
  explicit Rational(const BigInt& n) : q_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw InputError("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p/q" or a bare integer "p".
  static Rational parse(const std::string& s);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  double to_double() const { return q_.get_d(); }

  /// Canonical serialization "p/q" in lowest terms, denominator always shown.
  std::string str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { Rational r; r.q_ = -q_; return r; }
  Rational abs() const { Rational r; r.q_ = ::abs(q_); return r; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// r^e for integer e (negative exponents invert; 0^0 = 1).
Rational pow(const Rational& r, long e);

/// 2^e as an exact rational, e may be negative.
inline Rational pow2(long e) { return pow(Rational(2), e); }

/// Binomial coefficient; returns 0 for k > n.
inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Multinomial coefficient n! / (parts[0]! ... parts[s-1]!), n = sum of parts.
BigInt multinomial(std::span<const int> parts);

/// Nearest rational to x among denominators 1..max_den. On return *err holds
/// |x - result|. Used to recover exact spectra from floating-point data.
Rational nearest_rational(double x, long max_den, double* err = nullptr);

}  // namespace antisym
