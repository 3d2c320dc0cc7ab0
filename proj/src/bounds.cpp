#include "antisym/bounds.hpp"

#include <cmath>

namespace antisym::bounds {

namespace {

// k/(k-1) * (d-k+2)/(d-k+1), exactly
Rational cmi_ratio(long d, long k) {
  return Rational(k, k - 1) * Rational(d - k + 2, d - k + 1);
}

}  // namespace

BigInt antisym_dim(int d, int k) {
  if (d < 0 || k < 0 || k > d) throw InputError("antisym_dim: require 0 <= k <= d");
  return binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(k));
}

double cmi_extension(int d, int k) {
  if (k < 2) throw InputError("cmi_extension: extension needs k >= 2");
  if (k > d) throw InputError("cmi_extension: require k <= d");
  const Rational ratio = cmi_ratio(d, k);
  const double bits = std::log2(ratio.to_double());
  if (d <= 1024) {
    const Rational dk1(antisym_dim(d, k - 1));
    const Rational binom_form = dk1 * dk1 / (Rational(antisym_dim(d, k - 2)) * Rational(antisym_dim(d, k)));
    if (binom_form != ratio) throw InternalError("cmi_extension: binomial form disagrees");
    if (std::abs(std::log2(binom_form.to_double()) - bits) > 1e-12)
      throw InternalError("cmi_extension: evaluated forms disagree beyond 1e-12");
  }
  return bits;
}

EsqResult esq_upper(int d) {
  if (d < 2) throw InputError("esq_upper: d must be >= 2");
  Rational best = cmi_ratio(d, 2);
  int best_k = 2;
  for (int k = 3; k <= d; ++k) {
    const Rational r = cmi_ratio(d, k);
    if (r < best) {
      best = r;
      best_k = k;
    }
  }
  const int expected_k = d % 2 == 0 ? d / 2 + 1 : (d + 1) / 2;
  const Rational closed = d % 2 == 0 ? pow(Rational(d + 2, d), 2) : Rational(d + 3, d - 1);
  if (best != closed || best_k != expected_k)
    throw InternalError("esq_upper: scan disagrees with the closed form at d = " + std::to_string(d));
  const double value = d % 2 == 0 ? std::log2(Rational(d + 2, d).to_double())
                                  : 0.5 * std::log2(Rational(d + 3, d - 1).to_double());
  return {value, best_k};
}

double kd_upper(int d) { return esq_upper(d).value_bits; }

double ec_lower() { return std::log2(4.0 / 3.0); }

Rational ec_lower_ratio() { return Rational(4, 3); }

double log_negativity(int d) {
  if (d < 2) throw InputError("log_negativity: d must be >= 2");
  return std::log2(Rational(d + 2, d).to_double());
}

double er_sep_lower() { return ec_lower() / 2; }

double asymptotic_esq_bound(int d) {
  if (d < 2) throw InputError("asymptotic_esq_bound: d must be >= 2");
  return 2 * std::log2(std::exp(1.0)) / (d - 1);
}

BoundReport bound_report(int d) {
  const EsqResult esq = esq_upper(d);
  BoundReport r;
  r.d = d;
  r.esq_upper = esq.value_bits;
  r.kd_upper = esq.value_bits;
  r.optimal_k = esq.optimal_k;
  r.ec_lower = ec_lower();
  r.log_negativity = log_negativity(d);
  r.er_sep_lower = er_sep_lower();
  r.asymptotic_esq_bound = asymptotic_esq_bound(d);
  return r;
}

}  // namespace antisym::bounds
