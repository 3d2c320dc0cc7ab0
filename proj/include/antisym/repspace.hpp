#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "antisym/operators.hpp"
#include "antisym/pairbasis.hpp"
#include "antisym/rational.hpp"
#include "antisym/young.hpp"

namespace antisym::rep {

/// Selects a member of the T-matrix family: a finite local dimension or the
/// large-d limit.
struct Dim {
  bool is_infinite = false;
  int d = 0;

  static Dim finite(int d) { return Dim{false, d}; }
  static Dim infinite() { return Dim{true, 0}; }
  std::string str() const { return is_infinite ? "inf" : std::to_string(d); }
};

/// The three normalized states proportional to the isotypic projectors of
/// the wedge(AB) (x) wedge(A'B') subspace, as dense four-leg operators with
/// layout (A, B, A', B'). Built by compressing the central symmetric-group
/// projectors to the subspace. The Y1111 entry is the zero operator at d = 3.
/// Dense construction; memory grows as d^8 (d = 8 needs ~1.3 GB transient).
std::map<YoungSymbol, HermitianOperator> isotypic_states(int d);

/// Objective coefficients t_y = tr[(tr_{BB'} rho_y) F_{A:A'}], computed
/// numerically in the compressed representation and rounded to the nearest
/// rational with denominator <= 64. Rounding residual above 1e-9 signals a
/// construction bug and raises InternalError. Valid for d in [4, 8].
std::array<Rational, 3> t_vector(int d);

/// 3x3 T-matrix with exact rational entries.
struct RationalTMatrix {
  std::array<std::array<Rational, 3>, 3> rows;
  Eigen::Matrix3d to_double() const;
};

/// Closed-form T-matrix: substitution of a finite d >= 4, or the large-d
/// limit. d = 3 is rejected: the Y1111 column is meaningless there and the
/// d = 3 pipeline runs on the numeric two-block data instead.
RationalTMatrix tmatrix_closed_form(Dim dim);

/// Joint spectra of the partially transposed isotypic states: each row is
/// the eigenvalue triple on one common block, found by diagonalising a
/// seeded random real combination and clustering. block_dims are the block
/// multiplicities (they sum to binomial(d,2)^2).
struct NumericTMatrix {
  Eigen::MatrixXd values;       // (#blocks) x 3, columns in Young order
  std::vector<int> block_dims;  // per block
};

/// Valid for d in [3, 8]; at d = 3 the first column is identically zero and
/// only two blocks exist. Throws InternalError if the partial transposes
/// fail to commute or more than three joint-eigenvalue clusters appear.
NumericTMatrix tmatrix_numeric(int d, std::uint64_t seed = 0);

/// True when `numeric` equals `closed` up to a positive scaling of each row
/// and a permutation of rows, entrywise relative error <= rel_tol. On
/// success *diag describes the matching; on failure, the best mismatch.
bool tmatrix_matches_closed_form(const NumericTMatrix& numeric, const RationalTMatrix& closed,
                                 double rel_tol, std::string* diag = nullptr);

/// Exact two-column T-matrix rows for d = 3 (columns Y22, Y211), obtained
/// from the numeric blocks: each row is scaled by its largest magnitude and
/// rounded to rationals with denominator <= 64 (residual checked at 1e-9).
std::vector<std::array<Rational, 2>> tmatrix_d3_exact_rows(std::uint64_t seed = 0);

}  // namespace antisym::rep
