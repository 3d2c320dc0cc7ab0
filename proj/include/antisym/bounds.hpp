#pragma once

#include "antisym/rational.hpp"

namespace antisym::bounds {

/// dim of the antisymmetric subspace of k systems of local dimension d,
/// binomial(d, k) exactly. Requires 0 <= k <= d.
BigInt antisym_dim(int d, int k);

/// Conditional mutual information of the k-particle antisymmetric extension,
/// log2[ k/(k-1) * (d-k+2)/(d-k+1) ] bits. Requires 2 <= k <= d. The
/// equivalent binomial form log2[ d_{k-1}^2 / (d_{k-2} d_k) ] is evaluated
/// and checked whenever the binomials are tractable (d <= 1024).
double cmi_extension(int d, int k);

struct EsqResult {
  double value_bits;
  int optimal_k;
};

/// Squashed-entanglement upper bound: min over k of half the extension CMI.
/// The scan runs in exact rationals; the minimum is asserted to equal the
/// closed form log2((d+2)/d) for even d and log2((d+3)/(d-1))/2 for odd d,
/// then the closed form is what is reported.
EsqResult esq_upper(int d);

/// Distillable-key upper bound; equals the squashed-entanglement bound.
double kd_upper(int d);

/// Entanglement-cost lower bound in bits, log2(4/3), constant in d.
double ec_lower();
/// The exact ratio behind ec_lower.
Rational ec_lower_ratio();

/// log2((d+2)/d); the oracle module verifies the trace norm independently.
double log_negativity(int d);

/// Lower bound on the regularized relative entropy of entanglement with
/// respect to separable states: half of ec_lower.
double er_sep_lower();

/// 2 log2(e) / (d - 1), the large-d envelope of the key-rate bound.
double asymptotic_esq_bound(int d);

struct BoundReport {
  int d = 0;
  double kd_upper = 0;
  double esq_upper = 0;
  int optimal_k = 0;
  double ec_lower = 0;
  double log_negativity = 0;
  double er_sep_lower = 0;
  double asymptotic_esq_bound = 0;
};

BoundReport bound_report(int d);

}  // namespace antisym::bounds
