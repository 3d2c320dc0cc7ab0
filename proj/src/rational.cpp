#include "antisym/rational.hpp"

#include <cmath>

namespace antisym {

Rational Rational::parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InputError("Rational: cannot parse '" + s + "'");
  }
}

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw InputError("Rational: negative power of zero");
    return Rational(1) / pow(r, -e);
  }
  Rational acc(1);
  Rational base = r;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

BigInt multinomial(std::span<const int> parts) {
  long total = 0;
  for (int p : parts) {
    if (p < 0) throw InputError("multinomial: negative part");
    total += p;
  }
  BigInt result = 1;
  long remaining = total;
  for (int p : parts) {
    result *= binomial(static_cast<unsigned long>(remaining), static_cast<unsigned long>(p));
    remaining -= p;
  }
  return result;
}

Rational nearest_rational(double x, long max_den, double* err) {
  if (max_den < 1) throw InputError("nearest_rational: max_den < 1");
  Rational best(0);
  double best_err = std::abs(x);
  for (long den = 1; den <= max_den; ++den) {
    const double scaled = x * static_cast<double>(den);
    if (std::abs(scaled) > 9.0e18) continue;  // keep the cast below defined
    const long num = static_cast<long>(std::llround(scaled));
    const double e = std::abs(x - static_cast<double>(num) / static_cast<double>(den));
    if (e < best_err) {
      best_err = e;
      best = Rational(num, den);
    }
  }
  if (err != nullptr) *err = best_err;
  return best;
}

}  // namespace antisym
