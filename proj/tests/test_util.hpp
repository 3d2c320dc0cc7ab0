#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

// Shared helpers for the test suites.

inline Eigen::MatrixXcd random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

// A point from the uniform distribution on the probability simplex.
template <int K>
inline std::array<double, K> random_simplex_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(1e-12, 1.0);
  std::array<double, K> p{};
  double total = 0;
  for (auto& v : p) {
    v = -std::log(uni(rng));
    total += v;
  }
  for (auto& v : p) v /= total;
  return p;
}
