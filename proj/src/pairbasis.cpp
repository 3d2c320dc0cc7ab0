#include "antisym/pairbasis.hpp"

#include <cmath>

#include "s4.hpp"

namespace antisym::rep {

namespace {

// The four computational-basis kets carrying e_{P1} (x) e_{P2}, with signs.
struct SupportKet {
  std::array<int, 4> digits;  // (a, b, a', b')
  double coeff;               // +-, 1/2
};

std::array<SupportKet, 4> support(const std::pair<int, int>& p1, const std::pair<int, int>& p2) {
  const auto [i, j] = p1;
  const auto [k, l] = p2;
  return {SupportKet{{i, j, k, l}, 0.5}, SupportKet{{j, i, k, l}, -0.5},
          SupportKet{{i, j, l, k}, -0.5}, SupportKet{{j, i, l, k}, 0.5}};
}

}  // namespace

PairBasis::PairBasis(int d) : d(d) {
  if (d < 2) throw InputError("PairBasis: d must be >= 2");
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
}

int PairBasis::index(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= d || j >= d) throw InputError("PairBasis: bad pair");
  const int lo = std::min(i, j), hi = std::max(i, j);
  // lex rank of (lo, hi) among pairs with first < second
  return lo * d - lo * (lo + 1) / 2 + (hi - lo - 1);
}

namespace {
int check_rep_dim(int d) {
  if (d < 3 || d > 8) throw InputError("CompressedRep: d must be in [3, 8]");
  return d;
}
}  // namespace

CompressedRep::CompressedRep(int d) : d_(check_rep_dim(d)), basis_(d) {
  const int D = basis_.size();
  const long n = static_cast<long>(D) * D;

  for (auto& m : proj_) m = Eigen::MatrixXd::Zero(n, n);

  // Central projectors P_y = (dim_y / 24) sum_sigma chi_y(sigma) U_sigma,
  // compressed: column c holds E^T P_y E e_c accumulated over the support
  // kets of e_c and the 24 permutations. A ket whose AB or A'B' digits
  // coincide has no overlap with the antisymmetric basis and is dropped.
  const auto& elements = detail::s4_elements();
  for (int c = 0; c < n; ++c) {
    const auto& p1 = basis_.pairs[static_cast<size_t>(c / D)];
    const auto& p2 = basis_.pairs[static_cast<size_t>(c % D)];
    for (const auto& ket : support(p1, p2)) {
      for (const auto& e : elements) {
        std::array<int, 4> y{};
        for (int slot = 0; slot < 4; ++slot) y[static_cast<size_t>(e.perm[static_cast<size_t>(slot)])] = ket.digits[static_cast<size_t>(slot)];
        if (y[0] == y[1] || y[2] == y[3]) continue;
        const double overlap = 0.5 * (y[0] < y[1] ? 1.0 : -1.0) * (y[2] < y[3] ? 1.0 : -1.0);
        const int r = basis_.index(y[0], y[1]) * D + basis_.index(y[2], y[3]);
        for (int yi = 0; yi < 3; ++yi)
          proj_[static_cast<size_t>(yi)](r, c) +=
              detail::s4_dims[static_cast<size_t>(yi)] / 24.0 * detail::s4_character(e, yi) * ket.coeff * overlap;
      }
    }
  }

  for (int yi = 0; yi < 3; ++yi) {
    auto& p = proj_[static_cast<size_t>(yi)];
    p = ((p + p.transpose()) / 2.0).eval();
    if ((p * p - p).cwiseAbs().maxCoeff() > 1e-10)
      throw InternalError("CompressedRep: isotypic projector is not idempotent");
    const double tr = p.trace();
    const long rank = std::lround(tr);
    if (std::abs(tr - static_cast<double>(rank)) > 1e-9)
      throw InternalError("CompressedRep: projector trace is not an integer");
    ranks_[static_cast<size_t>(yi)] = rank;
    rho_[static_cast<size_t>(yi)] = rank == 0 ? Eigen::MatrixXd::Zero(n, n).eval() : (p / static_cast<double>(rank)).eval();
  }
}

Eigen::MatrixXd CompressedRep::partial_transpose(const Eigen::MatrixXd& x) const {
  const int D = basis_.size();
  const long n = dim();
  if (x.rows() != n || x.cols() != n) throw InputError("CompressedRep: wrong operator size");
  Eigen::MatrixXd out(n, n);
  for (long r = 0; r < n; ++r) {
    const long rp = r / D, rq = r % D;
    for (long c = 0; c < n; ++c) {
      const long cp = c / D, cq = c % D;
      out(r, c) = x(rp * D + cq, cp * D + rq);
    }
  }
  return out;
}

Eigen::MatrixXd CompressedRep::flip_overlap() const {
  const int D = basis_.size();
  const long n = dim();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int c = 0; c < n; ++c) {
    const auto& p1 = basis_.pairs[static_cast<size_t>(c / D)];
    const auto& p2 = basis_.pairs[static_cast<size_t>(c % D)];
    for (const auto& ket : support(p1, p2)) {
      // F_{A:A'} exchanges the first and third digits
      std::array<int, 4> y{ket.digits[2], ket.digits[1], ket.digits[0], ket.digits[3]};
      if (y[0] == y[1] || y[2] == y[3]) continue;
      const double overlap = 0.5 * (y[0] < y[1] ? 1.0 : -1.0) * (y[2] < y[3] ? 1.0 : -1.0);
      out(basis_.index(y[0], y[1]) * D + basis_.index(y[2], y[3]), c) += overlap * ket.coeff;
    }
  }
  return out;
}

Eigen::MatrixXcd CompressedRep::group_action(const Eigen::MatrixXcd& g) const {
  if (g.rows() != d_ || g.cols() != d_) throw InputError("CompressedRep: g must be d x d");
  const int D = basis_.size();
  Eigen::MatrixXcd g2(D, D);
  for (int r = 0; r < D; ++r) {
    const auto [k, l] = basis_.pairs[static_cast<size_t>(r)];
    for (int c = 0; c < D; ++c) {
      const auto [i, j] = basis_.pairs[static_cast<size_t>(c)];
      g2(r, c) = g(k, i) * g(l, j) - g(l, i) * g(k, j);
    }
  }
  Eigen::MatrixXcd out(dim(), dim());
  for (int r1 = 0; r1 < D; ++r1)
    for (int c1 = 0; c1 < D; ++c1) out.block(static_cast<long>(r1) * D, static_cast<long>(c1) * D, D, D) = g2(r1, c1) * g2;
  return out;
}

Eigen::MatrixXcd CompressedRep::embed(const Eigen::MatrixXd& x) const {
  const int D = basis_.size();
  const long n = dim();
  if (x.rows() != n || x.cols() != n) throw InputError("CompressedRep: wrong operator size");
  const long full = static_cast<long>(d_) * d_ * d_ * d_;
  // dense isometry E: column (pair, pair') -> four-leg computational basis
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(full, n);
  const long d3 = static_cast<long>(d_) * d_ * d_, d2 = static_cast<long>(d_) * d_;
  for (int c = 0; c < n; ++c) {
    const auto& p1 = basis_.pairs[static_cast<size_t>(c / D)];
    const auto& p2 = basis_.pairs[static_cast<size_t>(c % D)];
    for (const auto& ket : support(p1, p2))
      e(ket.digits[0] * d3 + ket.digits[1] * d2 + ket.digits[2] * d_ + ket.digits[3], c) = ket.coeff;
  }
  // columns have norm 1/sqrt(2) per factor twice -> entries +-1/2, norm 1
  return (e * x * e.transpose()).cast<std::complex<double>>();
}

}  // namespace antisym::rep
