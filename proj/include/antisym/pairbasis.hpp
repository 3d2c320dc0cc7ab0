#pragma once

#include <Eigen/Dense>
#include <array>
#include <utility>
#include <vector>

#include "antisym/errors.hpp"
#include "antisym/young.hpp"

namespace antisym::rep {

/// Orthonormal basis (|ij> - |ji>)/sqrt(2), i < j, of the antisymmetric
/// subspace of C^d (x) C^d, pairs in lexicographic order.
struct PairBasis {
  int d = 0;
  std::vector<std::pair<int, int>> pairs;

  explicit PairBasis(int d);
  int size() const { return static_cast<int>(pairs.size()); }
  int index(int i, int j) const;  // requires i != j; sign handled by caller
};

/// The invariant operators of the four-system construction, compressed onto
/// the wedge(AB) (x) wedge(A'B') subspace in the pair product basis. The
/// compression is an exact *-isomorphism (the basis is orthonormal and the
/// operators are supported on that subspace), so spectra, traces, ranks and
/// commutators agree with the dense picture up to the zero block outside.
///
/// Compressed index convention: (AB pair index) * D + (A'B' pair index).
class CompressedRep {
 public:
  /// Builds the three isotypic projectors and normalized states. 3 <= d <= 8.
  explicit CompressedRep(int d);

  int d() const { return d_; }
  int pair_dim() const { return basis_.size(); }     // D = binomial(d, 2)
  long dim() const { return static_cast<long>(basis_.size()) * basis_.size(); }
  const PairBasis& basis() const { return basis_; }

  /// Isotypic projector for the label (zero matrix when the component is
  /// absent, which happens only for Y1111 at d = 3).
  const Eigen::MatrixXd& projector(YoungSymbol y) const { return proj_[idx(y)]; }

  /// Normalized state proportional to the projector (zero matrix if absent).
  const Eigen::MatrixXd& state(YoungSymbol y) const { return rho_[idx(y)]; }

  long rank(YoungSymbol y) const { return ranks_[idx(y)]; }
  const std::array<long, 3>& ranks() const { return ranks_; }

  /// Partial transpose across the AB : A'B' cut, expressed in this basis:
  /// the primed pair indices of bra and ket swap.
  Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& x) const;

  /// Overlap matrix of the flip between systems A and A' (identity on B, B'),
  /// compressed onto the subspace. tr(state(y) * flip_overlap()) yields the
  /// objective coefficients t_y.
  Eigen::MatrixXd flip_overlap() const;

  /// Restriction of g (x) g (x) g (x) g to the subspace for a d x d matrix g:
  /// the Kronecker square of the compressed two-fold action.
  Eigen::MatrixXcd group_action(const Eigen::MatrixXcd& g) const;

  /// Dense embedding on (C^d)^{(x)4} with legs (A, B, A', B'); for
  /// cross-checks against the explicitly constructed operators.
  Eigen::MatrixXcd embed(const Eigen::MatrixXd& x) const;

 private:
  static int idx(YoungSymbol y) { return static_cast<int>(y); }

  int d_;
  PairBasis basis_;
  std::array<Eigen::MatrixXd, 3> proj_;
  std::array<Eigen::MatrixXd, 3> rho_;
  std::array<long, 3> ranks_{0, 0, 0};
};

}  // namespace antisym::rep
