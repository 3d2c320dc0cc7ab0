#include "antisym/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "antisym/operators.hpp"
#include "antisym/repspace.hpp"

namespace antisym::oracle {

namespace {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

long ipow(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Applies a d^2 x d^2 matrix to the legs (2i, 2i+1) of a state over 2n legs
// of dimension d (interleaved A_1 B_1 ... A_n B_n).
void apply_pair_matrix(Vec& psi, const Eigen::MatrixXd& m, int copy, int n, int d) {
  const long left = ipow(d, 2 * copy);
  const long mid = static_cast<long>(d) * d;
  const long right = ipow(d, 2 * (n - copy - 1));
  Vec slot(mid);
  for (long l = 0; l < left; ++l) {
    for (long r = 0; r < right; ++r) {
      const long base = l * mid * right + r;
      for (long k = 0; k < mid; ++k) slot[k] = psi[base + k * right];
      const Vec out = m * slot;
      for (long k = 0; k < mid; ++k) psi[base + k * right] = out[k];
    }
  }
}

void project_feasible(Vec& psi, const Eigen::MatrixXd& p2, int n, int d) {
  for (int copy = 0; copy < n; ++copy) apply_pair_matrix(psi, p2, copy, n, d);
}

// Reshapes the interleaved state into the (A^n rows) x (B^n columns) matrix.
Mat cut_matrix(const Vec& psi, int n, int d) {
  const long dn = ipow(d, n);
  Mat m = Mat::Zero(dn, dn);
  std::vector<int> digit(static_cast<size_t>(2 * n));
  for (long idx = 0; idx < psi.size(); ++idx) {
    long rest = idx;
    for (int leg = 2 * n - 1; leg >= 0; --leg) {
      digit[static_cast<size_t>(leg)] = static_cast<int>(rest % d);
      rest /= d;
    }
    long a = 0, b = 0;
    for (int i = 0; i < n; ++i) {
      a = a * d + digit[static_cast<size_t>(2 * i)];
      b = b * d + digit[static_cast<size_t>(2 * i + 1)];
    }
    m(a, b) = psi[idx];
  }
  return m;
}

void scatter_cut_matrix(const Mat& m, Vec& psi, int n, int d) {
  std::vector<int> digit(static_cast<size_t>(2 * n));
  for (long idx = 0; idx < psi.size(); ++idx) {
    long rest = idx;
    for (int leg = 2 * n - 1; leg >= 0; --leg) {
      digit[static_cast<size_t>(leg)] = static_cast<int>(rest % d);
      rest /= d;
    }
    long a = 0, b = 0;
    for (int i = 0; i < n; ++i) {
      a = a * d + digit[static_cast<size_t>(2 * i)];
      b = b * d + digit[static_cast<size_t>(2 * i + 1)];
    }
    psi[idx] = m(a, b);
  }
}

Vec random_state(long dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(dim);
  for (long i = 0; i < dim; ++i) v[i] = std::complex<double>(gauss(rng), gauss(rng));
  return v;
}

}  // namespace

OracleResult max_purity(int n, int d, const OptimizerConfig& cfg) {
  if (n < 1 || n > 2) throw InputError("max_purity: n must be 1 or 2");
  if (d < 3 || d > 6) throw InputError("max_purity: d must be in [3, 6]");
  if (cfg.restarts < 1 || cfg.max_iterations < 1) throw InputError("max_purity: bad optimizer config");

  const Eigen::MatrixXd p2 = rep::antisym_projector(d, 2).matrix().real();
  const long full = ipow(d, 2 * n);

  OracleResult best;
  best.value = -1;
  int best_restart = -1;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(restart));
    Vec psi;
    double norm = 0;
    do {
      psi = random_state(full, rng);
      project_feasible(psi, p2, n, d);
      norm = psi.norm();
    } while (norm < 1e-8);
    psi /= norm;

    double purity = 0, prev = -1;
    bool converged = false;
    long used = 0;
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
      ++used;
      Mat m = cut_matrix(psi, n, d);
      const Mat rho = m * m.adjoint();
      purity = (rho * rho).trace().real();
      if (iter > 0 && std::abs(purity - prev) <= cfg.tolerance) {
        converged = true;
        break;
      }
      prev = purity;
      // power-like step for the quartic functional
      m = rho * m;
      scatter_cut_matrix(m, psi, n, d);
      project_feasible(psi, p2, n, d);
      const double step_norm = psi.norm();
      if (step_norm < 1e-12) break;
      psi /= step_norm;
    }
    best.iterations += used;
    if (purity > best.value) {
      best.value = purity;
      best.best_point.assign(psi.data(), psi.data() + psi.size());
      best.converged = converged;
      best_restart = restart;
    }
  }
  (void)best_restart;
  return best;
}

double negativity_trace_norm(int d) {
  if (d < 2 || d > 12) throw InputError("negativity_trace_norm: d must be in [2, 12]");
  const auto alpha = rep::antisymmetric_state(d);
  const auto transposed = alpha.partial_transpose({1});
  Eigen::SelfAdjointEigenSolver<Mat> es(transposed.matrix());
  return es.eigenvalues().cwiseAbs().sum();
}

namespace {

// <alpha (x) e_b | P^{(x)n} | alpha (x) e_b'>, as a matrix over (b, b').
// `fixed_on_a` selects which side of the cut carries the fixed vector.
Mat overlap_matrix(const Vec& fixed, bool fixed_on_a, const Eigen::MatrixXd& p2, int n, int d) {
  const long dn = ipow(d, n);
  const long full = dn * dn;
  Mat m = Mat::Zero(dn, dn);
  std::vector<int> digit(static_cast<size_t>(2 * n));
  for (long col = 0; col < dn; ++col) {
    Vec w = Vec::Zero(full);
    // assemble fixed (x) e_col with interleaved legs
    for (long f = 0; f < dn; ++f) {
      long idx = 0;
      long fa = f, fb = col;
      std::vector<int> fd(static_cast<size_t>(n)), cd(static_cast<size_t>(n));
      for (int i = n - 1; i >= 0; --i) {
        fd[static_cast<size_t>(i)] = static_cast<int>(fa % d);
        cd[static_cast<size_t>(i)] = static_cast<int>(fb % d);
        fa /= d;
        fb /= d;
      }
      for (int i = 0; i < n; ++i) {
        const int a_digit = fixed_on_a ? fd[static_cast<size_t>(i)] : cd[static_cast<size_t>(i)];
        const int b_digit = fixed_on_a ? cd[static_cast<size_t>(i)] : fd[static_cast<size_t>(i)];
        idx = (idx * d + a_digit) * d + b_digit;
      }
      w[idx] = fixed[f];
    }
    project_feasible(w, p2, n, d);
    // row extraction: contract the fixed side against the projected vector
    for (long idx = 0; idx < full; ++idx) {
      if (w[idx] == std::complex<double>(0)) continue;
      long rest = idx;
      for (int leg = 2 * n - 1; leg >= 0; --leg) {
        digit[static_cast<size_t>(leg)] = static_cast<int>(rest % d);
        rest /= d;
      }
      long a = 0, b = 0;
      for (int i = 0; i < n; ++i) {
        a = a * d + digit[static_cast<size_t>(2 * i)];
        b = b * d + digit[static_cast<size_t>(2 * i + 1)];
      }
      const long fixed_idx = fixed_on_a ? a : b;
      const long free_idx = fixed_on_a ? b : a;
      m(free_idx, col) += std::conj(fixed[fixed_idx]) * w[idx];
    }
  }
  return ((m + m.adjoint()) / 2.0).eval();
}

}  // namespace

OracleResult max_separable_overlap(int n, int d, const OptimizerConfig& cfg) {
  if (n < 1 || n > 2) throw InputError("max_separable_overlap: n must be 1 or 2");
  if (d < 3 || d > 5) throw InputError("max_separable_overlap: d must be in [3, 5]");
  if (cfg.restarts < 1 || cfg.max_iterations < 1)
    throw InputError("max_separable_overlap: bad optimizer config");

  const Eigen::MatrixXd p2 = rep::antisym_projector(d, 2).matrix().real();
  const long dn = ipow(d, n);

  OracleResult best;
  best.value = -1;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(restart));
    Vec a = random_state(dn, rng).normalized();
    Vec b = random_state(dn, rng).normalized();

    double value = 0, prev = -1;
    bool converged = false;
    long used = 0;
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
      ++used;
      Eigen::SelfAdjointEigenSolver<Mat> es_b(overlap_matrix(a, /*fixed_on_a=*/true, p2, n, d));
      b = es_b.eigenvectors().col(dn - 1);
      Eigen::SelfAdjointEigenSolver<Mat> es_a(overlap_matrix(b, /*fixed_on_a=*/false, p2, n, d));
      a = es_a.eigenvectors().col(dn - 1);
      value = es_a.eigenvalues()[dn - 1];
      if (iter > 0 && std::abs(value - prev) <= cfg.tolerance) {
        converged = true;
        break;
      }
      prev = value;
    }
    best.iterations += used;
    if (value > best.value) {
      best.value = value;
      best.best_point.assign(a.data(), a.data() + a.size());
      best.best_point.insert(best.best_point.end(), b.data(), b.data() + b.size());
      best.converged = converged;
    }
  }
  return best;
}

PptCheckResult ppt_direct_check(int d, const std::array<double, 3>& p, int n) {
  if (d < 3 || d > 6) throw InputError("ppt_direct_check: d must be in [3, 6]");
  if (n < 1 || n > 2) throw InputError("ppt_direct_check: n must be 1 or 2");
  double total = 0;
  for (double v : p) {
    if (v < -1e-12) throw InputError("ppt_direct_check: p must be nonnegative");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InputError("ppt_direct_check: p must sum to one");

  // direct side: block spectra of the partially transposed one-copy mixture
  const rep::CompressedRep rep(d);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(rep.dim(), rep.dim());
  for (int yi = 0; yi < 3; ++yi)
    omega += p[static_cast<size_t>(yi)] * rep.partial_transpose(rep.state(rep::young_order[static_cast<size_t>(yi)]));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(omega);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();

  PptCheckResult out;
  // the transposed mixture vanishes outside the antisymmetric subspace, so
  // zero always belongs to the full-space spectrum
  if (n == 1) {
    out.min_eigenvalue = std::min(lo, 0.0);
  } else {
    out.min_eigenvalue = std::min({lo * lo, lo * hi, hi * hi, 0.0});
  }
  out.ppt_by_spectrum = out.min_eigenvalue >= -1e-9;

  // T-matrix side
  Eigen::MatrixXd tmat;
  if (d >= 4) {
    tmat = rep::tmatrix_closed_form(rep::Dim::finite(d)).to_double();
  } else {
    tmat = rep::tmatrix_numeric(d).values;
  }
  Eigen::VectorXd tp = tmat * Eigen::Vector3d(p[0], p[1], p[2]);
  if (n == 1) {
    out.ppt_by_tmatrix = (tp.array() >= -1e-9).all();
  } else {
    double worst = 0;
    for (long i = 0; i < tp.size(); ++i)
      for (long j = 0; j < tp.size(); ++j) worst = std::min(worst, tp[i] * tp[j]);
    out.ppt_by_tmatrix = worst >= -1e-9;
  }

  if (out.ppt_by_spectrum != out.ppt_by_tmatrix)
    throw InternalError("ppt_direct_check: spectrum and T-matrix verdicts disagree");
  return out;
}

}  // namespace antisym::oracle
