#include "antisym/repspace.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "s4.hpp"

namespace antisym::rep {

std::map<YoungSymbol, HermitianOperator> isotypic_states(int d) {
  if (d < 3) throw InputError("isotypic_states: d must be >= 3");
  if (d > 8) throw InputError("isotypic_states: dense construction capped at d = 8");
  const LegLayout layout = LegLayout::four_systems(d);
  const long n = layout.total_dim();

  // Central projectors of the symmetric group acting on the four legs.
  std::array<Eigen::MatrixXcd, 3> p;
  for (auto& m : p) m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& e : detail::s4_elements()) {
    std::span<const int> perm(e.perm.data(), 4);
    const auto u = permutation_operator(layout, perm);
    for (int yi = 0; yi < 3; ++yi)
      p[static_cast<size_t>(yi)] += detail::s4_dims[static_cast<size_t>(yi)] / 24.0 * detail::s4_character(e, yi) * u.matrix();
  }

  // Compression to wedge(AB) (x) wedge(A'B'); the central projectors commute
  // with it, so the product is again a projector.
  const auto p2 = antisym_projector(d, 2);
  const Eigen::MatrixXcd q = kron(p2.matrix(), p2.matrix());

  std::map<YoungSymbol, HermitianOperator> states;
  for (int yi = 0; yi < 3; ++yi) {
    Eigen::MatrixXcd pi = q * p[static_cast<size_t>(yi)];
    pi = ((pi + pi.adjoint()) / 2.0).eval();
    HermitianOperator op(layout, std::move(pi));
    if (op.hermiticity_defect() > 1e-12) throw InternalError("isotypic_states: projector not Hermitian");
    if (op.idempotency_defect() > 1e-10) throw InternalError("isotypic_states: projector not idempotent");
    const double tr = op.matrix().real().trace();
    const long rank = std::lround(tr);
    if (std::abs(tr - static_cast<double>(rank)) > 1e-8)
      throw InternalError("isotypic_states: projector rank is not an integer");
    if (rank == 0 && !(yi == 0 && d == 3))
      throw InternalError("isotypic_states: unexpected vanishing component");
    if (rank > 0) op.matrix() /= static_cast<double>(rank);
    states.emplace(young_order[static_cast<size_t>(yi)], std::move(op));
  }
  return states;
}

std::array<Rational, 3> t_vector(int d) {
  if (d < 4 || d > 8) throw InputError("t_vector: d must be in [4, 8]");
  const CompressedRep rep(d);
  const Eigen::MatrixXd overlap = rep.flip_overlap();
  std::array<Rational, 3> t;
  for (int yi = 0; yi < 3; ++yi) {
    const double value = (rep.state(young_order[static_cast<size_t>(yi)]) * overlap).trace();
    double err = 0;
    t[static_cast<size_t>(yi)] = nearest_rational(value, 64, &err);
    if (err > 1e-9)
      throw InternalError("t_vector: coefficient " + std::to_string(value) +
                          " is not close to a small rational");
  }
  return t;
}

Eigen::Matrix3d RationalTMatrix::to_double() const {
  Eigen::Matrix3d m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)].to_double();
  return m;
}

RationalTMatrix tmatrix_closed_form(Dim dim) {
  RationalTMatrix t;
  t.rows[0] = {Rational(1), Rational(1), Rational(-1)};
  if (dim.is_infinite) {
    t.rows[1] = {Rational(-2), Rational(1), Rational(0)};
    t.rows[2] = {Rational(1), Rational(1), Rational(1)};
    return t;
  }
  const long d = dim.d;
  if (d == 3) throw InputError("tmatrix_closed_form: no closed form at d = 3 (component missing)");
  if (d < 4) throw InputError("tmatrix_closed_form: d must be >= 4 or infinite");
  t.rows[1] = {Rational(-2) - Rational(6, d - 2), Rational(1), Rational(2, d - 2)};
  t.rows[2] = {Rational(1) + Rational(2 * (d * d - d + 1)) / Rational(d * (d - 1) * (d - 2)),
               Rational(1) - Rational(d + 1) / Rational(d * (d - 1)),
               Rational(1) - Rational(2 * d - 3) / Rational(d * (d - 1) * (d - 2))};
  return t;
}

NumericTMatrix tmatrix_numeric(int d, std::uint64_t seed) {
  if (d < 3 || d > 8) throw InputError("tmatrix_numeric: d must be in [3, 8]");
  const CompressedRep rep(d);

  std::array<Eigen::MatrixXd, 3> gamma;
  for (int yi = 0; yi < 3; ++yi)
    gamma[static_cast<size_t>(yi)] = rep.partial_transpose(rep.state(young_order[static_cast<size_t>(yi)]));

  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const double comm =
          (gamma[static_cast<size_t>(a)] * gamma[static_cast<size_t>(b)] - gamma[static_cast<size_t>(b)] * gamma[static_cast<size_t>(a)])
              .cwiseAbs()
              .maxCoeff();
      if (comm > 1e-9) throw InternalError("tmatrix_numeric: partial transposes do not commute");
    }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(rep.dim(), rep.dim());
  for (const auto& g : gamma) combo += weight(rng) * g;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(combo);
  if (es.info() != Eigen::Success) throw InternalError("tmatrix_numeric: eigensolver failed");
  const Eigen::MatrixXd& vecs = es.eigenvectors();

  // Joint eigenvalue triple of every eigenvector of the random combination.
  Eigen::MatrixXd triples(rep.dim(), 3);
  for (int yi = 0; yi < 3; ++yi) {
    const Eigen::MatrixXd image = gamma[static_cast<size_t>(yi)] * vecs;
    for (long v = 0; v < rep.dim(); ++v) triples(v, yi) = vecs.col(v).dot(image.col(v));
  }

  const double scale = std::max(1.0, triples.cwiseAbs().maxCoeff());
  const double tol = 1e-6 * scale;
  std::vector<Eigen::Vector3d> centers;
  std::vector<int> sizes;
  for (long v = 0; v < rep.dim(); ++v) {
    const Eigen::Vector3d t = triples.row(v);
    bool placed = false;
    for (size_t c = 0; c < centers.size(); ++c) {
      if ((t - centers[c]).cwiseAbs().maxCoeff() <= tol) {
        // running mean keeps the center stable against rounding noise
        centers[c] = (centers[c] * sizes[c] + t) / (sizes[c] + 1);
        ++sizes[c];
        placed = true;
        break;
      }
    }
    if (!placed) {
      centers.push_back(t);
      sizes.push_back(1);
    }
    if (centers.size() > 3) throw InternalError("tmatrix_numeric: more than three joint-eigenvalue blocks");
  }

  // Deterministic order: ascending block size, then lexicographic center.
  std::vector<int> order(centers.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (sizes[static_cast<size_t>(a)] != sizes[static_cast<size_t>(b)]) return sizes[static_cast<size_t>(a)] < sizes[static_cast<size_t>(b)];
    for (int k = 0; k < 3; ++k)
      if (centers[static_cast<size_t>(a)][k] != centers[static_cast<size_t>(b)][k]) return centers[static_cast<size_t>(a)][k] < centers[static_cast<size_t>(b)][k];
    return false;
  });

  NumericTMatrix out;
  out.values.resize(static_cast<long>(centers.size()), 3);
  for (size_t i = 0; i < order.size(); ++i) {
    out.values.row(static_cast<long>(i)) = centers[static_cast<size_t>(order[i])];
    out.block_dims.push_back(sizes[static_cast<size_t>(order[i])]);
  }
  return out;
}

bool tmatrix_matches_closed_form(const NumericTMatrix& numeric, const RationalTMatrix& closed,
                                 double rel_tol, std::string* diag) {
  if (numeric.values.rows() != 3) {
    if (diag != nullptr) *diag = "expected 3 blocks, found " + std::to_string(numeric.values.rows());
    return false;
  }
  const Eigen::Matrix3d target = closed.to_double();
  std::array<int, 3> perm{0, 1, 2};
  double best_err = std::numeric_limits<double>::infinity();
  std::string best_desc;
  do {
    double worst = 0;
    bool ok = true;
    for (int r = 0; r < 3 && ok; ++r) {
      const Eigen::Vector3d n = numeric.values.row(perm[static_cast<size_t>(r)]);
      const Eigen::Vector3d c = target.row(r);
      const double denom = n.squaredNorm();
      const double s = denom > 0 ? c.dot(n) / denom : 0.0;
      if (s <= 0) {
        ok = false;
        break;
      }
      for (int j = 0; j < 3; ++j) {
        const double rel = std::abs(s * n[j] - c[j]) / std::max(std::abs(c[j]), 1e-300);
        worst = std::max(worst, rel);
      }
    }
    if (ok && worst < best_err) {
      best_err = worst;
      std::ostringstream os;
      os << "row permutation (" << perm[0] << perm[1] << perm[2] << "), max relative error " << worst;
      best_desc = os.str();
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (diag != nullptr) *diag = best_desc.empty() ? "no positive row scaling exists" : best_desc;
  return best_err <= rel_tol;
}

std::vector<std::array<Rational, 2>> tmatrix_d3_exact_rows(std::uint64_t seed) {
  const NumericTMatrix num = tmatrix_numeric(3, seed);
  std::vector<std::array<Rational, 2>> rows;
  for (long r = 0; r < num.values.rows(); ++r) {
    if (std::abs(num.values(r, 0)) > 1e-9)
      throw InternalError("tmatrix_d3_exact_rows: Y1111 column should vanish at d = 3");
    const double a = num.values(r, 1), b = num.values(r, 2);
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale < 1e-12) throw InternalError("tmatrix_d3_exact_rows: zero block row");
    std::array<Rational, 2> row;
    double err0 = 0, err1 = 0;
    row[0] = nearest_rational(a / scale, 64, &err0);
    row[1] = nearest_rational(b / scale, 64, &err1);
    if (err0 > 1e-9 || err1 > 1e-9)
      throw InternalError("tmatrix_d3_exact_rows: block eigenvalues are not small rationals");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace antisym::rep
