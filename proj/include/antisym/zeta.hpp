#pragma once

#include <array>
#include <span>
#include <vector>

#include "antisym/lp.hpp"
#include "antisym/rational.hpp"
#include "antisym/repspace.hpp"

namespace antisym::zeta {

/// Occurrence counts of the three symbols in a length-n word, in Young
/// order. Families over two symbols leave the unused slot at zero.
struct TypeVector {
  std::array<int, 3> counts{0, 0, 0};
  int n() const { return counts[0] + counts[1] + counts[2]; }
  friend bool operator==(const TypeVector&, const TypeVector&) = default;
};

/// A symmetry-reduced linear program: variables are per-word values indexed
/// by occurrence type, the objective and normalization carry the multinomial
/// weights, and one representative positivity constraint is kept per
/// constraint-row type (word symmetry makes the other rows redundant).
struct ReducedLP {
  exact::RationalLP lp;
  std::vector<TypeVector> var_types;  // column -> type
  std::vector<TypeVector> row_types;  // lp row 1 + i -> type (row 0 is the normalization)
  int n = 0;
  int num_symbols = 3;
};

/// Low-level builder shared by every family: `tmatrix` holds the positivity
/// rows (one symbol per column), `objective_t` the per-symbol objective
/// coefficients, `symbols` names the column symbols (for type bookkeeping),
/// and the normalization row has the given sense.
ReducedLP build_symmetrized_lp(int n, const std::vector<std::vector<Rational>>& tmatrix,
                               const std::vector<Rational>& objective_t,
                               const std::vector<rep::YoungSymbol>& symbols,
                               exact::ConstraintSense norm_sense, const Rational& norm_rhs);

/// The full reduced family: three symbols with the closed-form T-matrix for
/// finite d >= 4 or its large-d limit, equality normalization. For d = 3 the
/// family degenerates to the two surviving symbols (Y22, Y211) with the
/// exact two-block rows recovered numerically.
ReducedLP build_reduced_lp(int n, rep::Dim dim);

/// The simplified two-symbol family (Y1111, Y22): rows (-2, 1), (1, 1),
/// objective (-1, 1/2), normalization <= 1.
ReducedLP build_simplified_lp(int n);

/// Explicit dual of the simplified family: variables (z, delta_0..delta_n),
/// one constraint per word type m, minimize z.
exact::RationalLP build_simplified_dual(int n);

/// Unsymmetrized tensor-power program over all 3^n words (cross-check for
/// the reduction; n <= 4).
exact::RationalLP build_expanded_lp(int n, int d);

/// Exact optimum of the full reduced family. Infeasibility or unboundedness
/// would contradict the construction and raises InternalError.
Rational zeta_full(int n, rep::Dim dim);

/// Exact optimum of the simplified family, n <= 64.
Rational zeta_simplified(int n);

/// A claimed feasible point of the simplified dual.
struct DualCertificate {
  int n = 0;
  Rational z;
  std::vector<Rational> deltas;  // delta_0 .. delta_n

  /// z = (3/4)^n with delta_k = 2^{k-2n} for k < n and delta_n = 0.
  static DualCertificate standard(int n);
};

struct CertificateReport {
  bool feasible = false;
  bool deltas_nonnegative = false;
  std::vector<Rational> slack;  // per constraint m = 0..n, exact
  std::vector<int> violated;    // m with negative slack
};

/// Evaluates all n+1 dual inequalities exactly at the given certificate.
CertificateReport check_certificate(const DualCertificate& cert);
/// Same with the standard certificate.
CertificateReport check_certificate(int n);

/// Formation lower bound per copy, -log2(zeta)/n bits.
double ef_bits_per_copy(const Rational& zeta_value, int n);
double ef_lower_bound(int n, rep::Dim dim);
/// Via the simplified family; asserts the constant per-copy bound.
double ef_lower_bound_simplified(int n);

}  // namespace antisym::zeta
