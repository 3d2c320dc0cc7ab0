#include "antisym/zeta.hpp"

#include <cmath>
#include <map>

namespace antisym::zeta {

using exact::ConstraintSense;
using exact::LPStatus;
using exact::ObjectiveSense;
using exact::RationalLP;

namespace {

// All length-s compositions of n. First symbol count descending, so that at
// n = 1 the variables appear in symbol order.
void compositions_rec(int n, int s, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (s == 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = n; first >= 0; --first) {
    cur.push_back(first);
    compositions_rec(n - first, s - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions_rec(n, s, cur, out);
  return out;
}

// Coefficients of prod_j (sum_c M[j][c] x_c)^{counts[j]}, a homogeneous
// polynomial of degree n in the column variables; exact convolution.
std::map<std::vector<int>, Rational> row_polynomial(const std::vector<std::vector<Rational>>& m,
                                                    std::span<const int> counts) {
  const size_t s = m.empty() ? 0 : m[0].size();
  std::map<std::vector<int>, Rational> poly;
  poly.emplace(std::vector<int>(s, 0), Rational(1));
  for (size_t j = 0; j < counts.size(); ++j) {
    for (int rep = 0; rep < counts[j]; ++rep) {
      std::map<std::vector<int>, Rational> next;
      for (const auto& [key, coeff] : poly) {
        for (size_t c = 0; c < s; ++c) {
          if (m[j][c].is_zero()) continue;
          std::vector<int> k2 = key;
          ++k2[c];
          next[k2] += coeff * m[j][c];
        }
      }
      poly = std::move(next);
    }
  }
  return poly;
}

TypeVector pad_type(const std::vector<int>& counts, const std::vector<rep::YoungSymbol>& symbols) {
  TypeVector t;
  for (size_t i = 0; i < symbols.size(); ++i) t.counts[static_cast<size_t>(symbols[i])] = counts[i];
  return t;
}

Rational monomial_value(const std::vector<Rational>& base, const std::vector<int>& counts) {
  Rational r(1);
  for (size_t i = 0; i < counts.size(); ++i) r *= pow(base[i], counts[i]);
  return r;
}

}  // namespace

ReducedLP build_symmetrized_lp(int n, const std::vector<std::vector<Rational>>& tmatrix,
                               const std::vector<Rational>& objective_t,
                               const std::vector<rep::YoungSymbol>& symbols,
                               ConstraintSense norm_sense, const Rational& norm_rhs) {
  if (n < 1) throw InputError("build_symmetrized_lp: n must be >= 1");
  const int s = static_cast<int>(objective_t.size());
  if (static_cast<int>(symbols.size()) != s) throw InputError("build_symmetrized_lp: symbol list mismatch");
  for (const auto& row : tmatrix)
    if (static_cast<int>(row.size()) != s) throw InputError("build_symmetrized_lp: matrix width mismatch");

  const auto var_comps = compositions(n, s);
  const auto row_comps = compositions(n, static_cast<int>(tmatrix.size()));

  ReducedLP reduced;
  reduced.n = n;
  reduced.num_symbols = s;
  reduced.lp.sense = ObjectiveSense::Maximize;

  std::vector<BigInt> mult;
  for (const auto& v : var_comps) {
    mult.push_back(multinomial(v));
    reduced.lp.objective.push_back(Rational(mult.back()) * monomial_value(objective_t, v));
    reduced.var_types.push_back(pad_type(v, symbols));
  }

  std::vector<Rational> norm;
  for (const auto& m : mult) norm.emplace_back(m);
  reduced.lp.add_constraint(std::move(norm), norm_sense, norm_rhs);

  for (const auto& rc : row_comps) {
    const auto poly = row_polynomial(tmatrix, rc);
    std::vector<Rational> row;
    for (const auto& v : var_comps) {
      const auto it = poly.find(v);
      row.push_back(it == poly.end() ? Rational(0) : it->second);
    }
    reduced.lp.add_constraint(std::move(row), ConstraintSense::GreaterEq, Rational(0));
    TypeVector row_type;  // occurrence counts of the T-matrix rows, in row order
    for (size_t i = 0; i < rc.size(); ++i) row_type.counts[i] = rc[i];
    reduced.row_types.push_back(row_type);
  }
  return reduced;
}

ReducedLP build_reduced_lp(int n, rep::Dim dim) {
  if (!dim.is_infinite && dim.d == 3) {
    if (n < 1 || n > 64) throw InputError("build_reduced_lp: n out of range for the d = 3 family");
    const auto blocks = rep::tmatrix_d3_exact_rows();
    std::vector<std::vector<Rational>> rows;
    for (const auto& b : blocks) rows.push_back({b[0], b[1]});
    return build_symmetrized_lp(n, rows, {Rational(1, 2), Rational(0)},
                                {rep::YoungSymbol::Y22, rep::YoungSymbol::Y211},
                                ConstraintSense::Equal, Rational(1));
  }
  if (static_cast<long>(n + 2) * (n + 1) / 2 > 500)
    throw InputError("build_reduced_lp: reduced size cap exceeded");
  const auto t = rep::tmatrix_closed_form(dim);
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : t.rows) rows.push_back({r[0], r[1], r[2]});
  return build_symmetrized_lp(n, rows, {Rational(-1), Rational(1, 2), Rational(0)},
                              {rep::YoungSymbol::Y1111, rep::YoungSymbol::Y22, rep::YoungSymbol::Y211},
                              ConstraintSense::Equal, Rational(1));
}

ReducedLP build_simplified_lp(int n) {
  if (n < 1 || n > 64) throw InputError("build_simplified_lp: n must be in [1, 64]");
  const std::vector<std::vector<Rational>> rows{{Rational(-2), Rational(1)}, {Rational(1), Rational(1)}};
  return build_symmetrized_lp(n, rows, {Rational(-1), Rational(1, 2)},
                              {rep::YoungSymbol::Y1111, rep::YoungSymbol::Y22},
                              ConstraintSense::LessEq, Rational(1));
}

exact::RationalLP build_simplified_dual(int n) {
  if (n < 1 || n > 64) throw InputError("build_simplified_dual: n must be in [1, 64]");
  // transpose of the simplified rows: columns of the primal matrix
  const std::vector<std::vector<Rational>> s_rows{{Rational(-2), Rational(1)}, {Rational(1), Rational(1)}};

  RationalLP lp;
  lp.sense = ObjectiveSense::Minimize;
  lp.objective.assign(static_cast<size_t>(n + 2), Rational(0));
  lp.objective[0] = Rational(1);  // variables: z, delta_0 .. delta_n

  for (int m = 0; m <= n; ++m) {
    // z - sum_k B[m][k] delta_k >= (-2)^m 2^{-n}
    std::vector<Rational> row(static_cast<size_t>(n + 2), Rational(0));
    row[0] = Rational(1);
    const int counts[2] = {m, n - m};
    const auto poly = row_polynomial(s_rows, counts);
    for (int k = 0; k <= n; ++k) {
      const std::vector<int> key{k, n - k};
      const auto it = poly.find(key);
      row[static_cast<size_t>(k + 1)] = it == poly.end() ? Rational(0) : -it->second;
    }
    lp.add_constraint(std::move(row), ConstraintSense::GreaterEq, pow(Rational(-2), m) * pow2(-n));
  }
  return lp;
}

exact::RationalLP build_expanded_lp(int n, int d) {
  if (n < 1 || n > 4) throw InputError("build_expanded_lp: n must be in [1, 4]");
  const auto t = rep::tmatrix_closed_form(rep::Dim::finite(d));
  const std::vector<Rational> ty{Rational(-1), Rational(1, 2), Rational(0)};

  long words = 1;
  for (int i = 0; i < n; ++i) words *= 3;

  RationalLP lp;
  lp.sense = ObjectiveSense::Maximize;
  auto digits = [n](long w) {
    std::vector<int> ds(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      ds[static_cast<size_t>(i)] = static_cast<int>(w % 3);
      w /= 3;
    }
    return ds;
  };

  for (long w = 0; w < words; ++w) {
    Rational obj(1);
    for (int y : digits(w)) obj *= ty[static_cast<size_t>(y)];
    lp.objective.push_back(obj);
  }
  lp.add_constraint(std::vector<Rational>(static_cast<size_t>(words), Rational(1)), ConstraintSense::Equal, Rational(1));
  for (long r = 0; r < words; ++r) {
    const auto rd = digits(r);
    std::vector<Rational> row;
    for (long w = 0; w < words; ++w) {
      const auto wd = digits(w);
      Rational coeff(1);
      for (int i = 0; i < n; ++i) coeff *= t.rows[static_cast<size_t>(rd[static_cast<size_t>(i)])][static_cast<size_t>(wd[static_cast<size_t>(i)])];
      row.push_back(coeff);
    }
    lp.add_constraint(std::move(row), ConstraintSense::GreaterEq, Rational(0));
  }
  return lp;
}

namespace {

Rational solve_reduced(const ReducedLP& reduced, const char* what) {
  const auto sol = exact::solve_lp(reduced.lp);
  if (sol.status == LPStatus::Infeasible)
    throw InternalError(std::string(what) + ": reduced program infeasible (the pure Y22 word is always feasible)");
  if (sol.status == LPStatus::Unbounded)
    throw InternalError(std::string(what) + ": reduced program unbounded");
  return sol.value;
}

}  // namespace

Rational zeta_full(int n, rep::Dim dim) { return solve_reduced(build_reduced_lp(n, dim), "zeta_full"); }

Rational zeta_simplified(int n) { return solve_reduced(build_simplified_lp(n), "zeta_simplified"); }

DualCertificate DualCertificate::standard(int n) {
  if (n < 1) throw InputError("DualCertificate: n must be >= 1");
  DualCertificate c;
  c.n = n;
  c.z = pow(Rational(3, 4), n);
  for (int k = 0; k < n; ++k) c.deltas.push_back(pow2(k - 2 * n));
  c.deltas.push_back(Rational(0));
  return c;
}

CertificateReport check_certificate(const DualCertificate& cert) {
  const int n = cert.n;
  if (n < 1) throw InputError("check_certificate: n must be >= 1");
  if (cert.deltas.size() != static_cast<size_t>(n + 1))
    throw InputError("check_certificate: certificate needs n+1 deltas");

  const std::vector<std::vector<Rational>> s_rows{{Rational(-2), Rational(1)}, {Rational(1), Rational(1)}};
  CertificateReport report;
  report.deltas_nonnegative = true;
  for (const auto& dlt : cert.deltas)
    if (dlt.sign() < 0) report.deltas_nonnegative = false;

  bool all_nonneg = true;
  for (int m = 0; m <= n; ++m) {
    const int counts[2] = {m, n - m};
    const auto poly = row_polynomial(s_rows, counts);
    Rational rhs = pow(Rational(-2), m) * pow2(-n);
    for (int k = 0; k <= n; ++k) {
      const std::vector<int> key{k, n - k};
      const auto it = poly.find(key);
      if (it != poly.end()) rhs += cert.deltas[static_cast<size_t>(k)] * it->second;
    }
    const Rational slack = cert.z - rhs;
    if (slack.sign() < 0) {
      all_nonneg = false;
      report.violated.push_back(m);
    }
    report.slack.push_back(slack);
  }
  report.feasible = all_nonneg && report.deltas_nonnegative;
  return report;
}

CertificateReport check_certificate(int n) { return check_certificate(DualCertificate::standard(n)); }

double ef_bits_per_copy(const Rational& zeta_value, int n) {
  if (n < 1) throw InputError("ef_bits_per_copy: n must be >= 1");
  if (zeta_value.sign() <= 0) throw InputError("ef_bits_per_copy: zeta must be positive");
  return -std::log2(zeta_value.to_double()) / n;
}

double ef_lower_bound(int n, rep::Dim dim) { return ef_bits_per_copy(zeta_full(n, dim), n); }

double ef_lower_bound_simplified(int n) {
  const double bits = ef_bits_per_copy(zeta_simplified(n), n);
  if (bits < std::log2(4.0 / 3.0) - 1e-12)
    throw InternalError("ef_lower_bound_simplified: per-copy bound fell below log2(4/3)");
  return bits;
}

}  // namespace antisym::zeta
