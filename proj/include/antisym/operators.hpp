#pragma once

#include <Eigen/Dense>
#include <span>

#include "antisym/layout.hpp"

namespace antisym::rep {

/// Dense complex operator carrying an explicit tensor-leg layout. Partial
/// traces and partial transposes are defined against that layout.
class HermitianOperator {
 public:
  HermitianOperator(LegLayout layout, Eigen::MatrixXcd mat);

  const LegLayout& layout() const { return layout_; }
  const Eigen::MatrixXcd& matrix() const { return mat_; }
  Eigen::MatrixXcd& matrix() { return mat_; }
  long dim() const { return mat_.rows(); }

  /// Transposes the listed legs (row and column digits swapped leg-wise).
  HermitianOperator partial_transpose(std::span<const int> legs) const;
  HermitianOperator partial_transpose(std::initializer_list<int> legs) const {
    return partial_transpose(std::span<const int>(legs.begin(), legs.size()));
  }

  /// Traces out the listed legs; the result lives on the remaining ones.
  HermitianOperator partial_trace(std::span<const int> traced) const;
  HermitianOperator partial_trace(std::initializer_list<int> traced) const {
    return partial_trace(std::span<const int>(traced.begin(), traced.size()));
  }

  double hermiticity_defect() const { return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff(); }
  double idempotency_defect() const { return (mat_ * mat_ - mat_).cwiseAbs().maxCoeff(); }

 private:
  LegLayout layout_;
  Eigen::MatrixXcd mat_;
};

/// U_sigma permuting the legs of the layout: leg i of the input becomes leg
/// perm[i] of the output. All legs moved by perm must share a dimension.
HermitianOperator permutation_operator(const LegLayout& layout, std::span<const int> perm);

/// Projector onto the antisymmetric subspace of k legs of dimension d;
/// rank = binomial(d, k). Rejects k > d and dense sizes beyond d^k = 4096.
HermitianOperator antisym_projector(int d, int k);

/// Swap operator between two legs of equal dimension, identity elsewhere.
HermitianOperator flip_operator(const LegLayout& layout, int leg_a, int leg_b);

/// The antisymmetric state (1 - F) / (d(d-1)) on two d-dimensional systems.
HermitianOperator antisymmetric_state(int d);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace antisym::rep
