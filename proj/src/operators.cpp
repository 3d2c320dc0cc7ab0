#include "antisym/operators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace antisym::rep {

HermitianOperator::HermitianOperator(LegLayout layout, Eigen::MatrixXcd mat)
    : layout_(std::move(layout)), mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() != layout_.total_dim())
    throw InputError("HermitianOperator: matrix does not match layout dimension");
}

HermitianOperator HermitianOperator::partial_transpose(std::span<const int> legs) const {
  std::vector<bool> flip(layout_.legs.size(), false);
  for (int l : legs) {
    if (l < 0 || l >= layout_.num_legs()) throw InputError("partial_transpose: bad leg index");
    flip[static_cast<size_t>(l)] = true;
  }
  const long n = dim();
  Eigen::MatrixXcd out(n, n);
  std::vector<int> rd, cd, rd2, cd2;
  for (long r = 0; r < n; ++r) {
    layout_.decode(r, rd);
    for (long c = 0; c < n; ++c) {
      layout_.decode(c, cd);
      rd2 = rd;
      cd2 = cd;
      for (size_t l = 0; l < flip.size(); ++l)
        if (flip[l]) std::swap(rd2[l], cd2[l]);
      out(layout_.encode(rd2), layout_.encode(cd2)) = mat_(r, c);
    }
  }
  return HermitianOperator(layout_, std::move(out));
}

HermitianOperator HermitianOperator::partial_trace(std::span<const int> traced) const {
  std::vector<bool> is_traced(layout_.legs.size(), false);
  for (int l : traced) {
    if (l < 0 || l >= layout_.num_legs()) throw InputError("partial_trace: bad leg index");
    is_traced[static_cast<size_t>(l)] = true;
  }
  LegLayout kept, gone;
  for (int l = 0; l < layout_.num_legs(); ++l)
    (is_traced[static_cast<size_t>(l)] ? gone : kept).legs.push_back(layout_.legs[static_cast<size_t>(l)]);
  if (kept.legs.empty()) throw InputError("partial_trace: cannot trace every leg");

  const long nk = kept.total_dim(), ng = gone.total_dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(nk, nk);
  std::vector<int> kd_r, kd_c, gd, full_r(layout_.legs.size()), full_c(layout_.legs.size());
  for (long rk = 0; rk < nk; ++rk) {
    kept.decode(rk, kd_r);
    for (long ck = 0; ck < nk; ++ck) {
      kept.decode(ck, kd_c);
      std::complex<double> acc = 0;
      for (long g = 0; g < ng; ++g) {
        gone.decode(g, gd);
        int ik = 0, ig = 0;
        for (int l = 0; l < layout_.num_legs(); ++l) {
          if (is_traced[static_cast<size_t>(l)]) {
            full_r[static_cast<size_t>(l)] = gd[static_cast<size_t>(ig)];
            full_c[static_cast<size_t>(l)] = gd[static_cast<size_t>(ig)];
            ++ig;
          } else {
            full_r[static_cast<size_t>(l)] = kd_r[static_cast<size_t>(ik)];
            full_c[static_cast<size_t>(l)] = kd_c[static_cast<size_t>(ik)];
            ++ik;
          }
        }
        acc += mat_(layout_.encode(full_r), layout_.encode(full_c));
      }
      out(rk, ck) = acc;
    }
  }
  return HermitianOperator(std::move(kept), std::move(out));
}

HermitianOperator permutation_operator(const LegLayout& layout, std::span<const int> perm) {
  const int k = layout.num_legs();
  if (static_cast<int>(perm.size()) != k) throw InputError("permutation_operator: size mismatch");
  std::vector<bool> seen(static_cast<size_t>(k), false);
  for (int i = 0; i < k; ++i) {
    const int p = perm[static_cast<size_t>(i)];
    if (p < 0 || p >= k || seen[static_cast<size_t>(p)]) throw InputError("permutation_operator: not a permutation");
    seen[static_cast<size_t>(p)] = true;
    if (layout.legs[static_cast<size_t>(p)].dim != layout.legs[static_cast<size_t>(i)].dim)
      throw InputError("permutation_operator: legs of unequal dimension");
  }
  const long n = layout.total_dim();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  std::vector<int> in, out(static_cast<size_t>(k));
  for (long v = 0; v < n; ++v) {
    layout.decode(v, in);
    for (int i = 0; i < k; ++i) out[static_cast<size_t>(perm[static_cast<size_t>(i)])] = in[static_cast<size_t>(i)];
    u(layout.encode(out), v) = 1.0;
  }
  return HermitianOperator(layout, std::move(u));
}

namespace {

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<size_t>(p[i])]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

HermitianOperator antisym_projector(int d, int k) {
  if (d < 2) throw InputError("antisym_projector: d must be >= 2");
  if (k < 0 || k > d) throw InputError("antisym_projector: require 0 <= k <= d");
  double size = 1;
  for (int i = 0; i < k; ++i) size *= d;
  if (size > 4096) throw InputError("antisym_projector: d^k too large for dense construction");

  const LegLayout layout = LegLayout::uniform(std::max(k, 1), d);
  const long n = layout.total_dim();
  if (k <= 1) return HermitianOperator(layout, Eigen::MatrixXcd::Identity(n, n));

  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  double fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  std::vector<int> in, out(static_cast<size_t>(k));
  do {
    const double w = permutation_sign(perm) / fact;
    for (long v = 0; v < n; ++v) {
      layout.decode(v, in);
      for (int i = 0; i < k; ++i) out[static_cast<size_t>(perm[static_cast<size_t>(i)])] = in[static_cast<size_t>(i)];
      p(layout.encode(out), v) += w;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return HermitianOperator(layout, std::move(p));
}

HermitianOperator flip_operator(const LegLayout& layout, int leg_a, int leg_b) {
  if (leg_a == leg_b) throw InputError("flip_operator: legs must differ");
  const int k = layout.num_legs();
  if (leg_a < 0 || leg_a >= k || leg_b < 0 || leg_b >= k) throw InputError("flip_operator: bad leg index");
  if (layout.legs[static_cast<size_t>(leg_a)].dim != layout.legs[static_cast<size_t>(leg_b)].dim)
    throw InputError("flip_operator: legs of unequal dimension");
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[static_cast<size_t>(leg_a)], perm[static_cast<size_t>(leg_b)]);
  return permutation_operator(layout, perm);
}

HermitianOperator antisymmetric_state(int d) {
  if (d < 2) throw InputError("antisymmetric_state: d must be >= 2");
  const LegLayout layout = LegLayout::two_systems(d);
  const auto f = flip_operator(layout, 0, 1);
  Eigen::MatrixXcd m =
      (Eigen::MatrixXcd::Identity(f.dim(), f.dim()) - f.matrix()) / static_cast<double>(d * (d - 1));
  return HermitianOperator(layout, std::move(m));
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace antisym::rep
