#include "antisym/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "antisym/bounds.hpp"
#include "antisym/oracle.hpp"
#include "antisym/repspace.hpp"
#include "antisym/zeta.hpp"

namespace antisym::verify {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CheckResult run_check(const std::string& name, const std::string& reference,
                      const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  r.reference = reference;
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.error = e.what();
  }
  r.runtime_ms = ms_since(start);
  return r;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// ---- criterion 1 ----------------------------------------------------------
CheckResult check_esq_table(const SuiteConfig& cfg) {
  return run_check("esq-kd-closed-forms",
                   "key-rate upper bound equals log2((d+2)/d) for even d and "
                   "log2((d+3)/(d-1))/2 for odd d; spot values 1.0, 0.584963, 0.5",
                   [&](CheckResult& r) {
                     r.tolerance = 1e-12;
                     double worst = 0;
                     int cases = 0;
                     for (int d = 2; d <= std::min(21, cfg.max_d); ++d) {
                       const double got = bounds::esq_upper(d).value_bits;
                       const double want = d % 2 == 0 ? std::log2((d + 2.0) / d)
                                                      : 0.5 * std::log2((d + 3.0) / (d - 1.0));
                       worst = std::max(worst, std::abs(got - want));
                       ++cases;
                     }
                     bool spots = true;
                     if (cfg.max_d >= 2) spots = spots && std::abs(bounds::esq_upper(2).value_bits - 1.0) <= 1e-6;
                     if (cfg.max_d >= 4) spots = spots && std::abs(bounds::esq_upper(4).value_bits - 0.584963) <= 1e-6;
                     if (cfg.max_d >= 5) spots = spots && std::abs(bounds::esq_upper(5).value_bits - 0.5) <= 1e-6;
                     r.inputs = "d in [2, " + std::to_string(std::min(21, cfg.max_d)) + "]";
                     r.expected = "max deviation <= 1e-12, spot values to 1e-6, runtime < 1 s";
                     r.computed = "max deviation " + fmt(worst) + " over " + std::to_string(cases) +
                                  " dimensions, spot values " + (spots ? "ok" : "off");
                     r.pass = worst <= 1e-12 && spots;
                   });
}

// ---- criterion 2 ----------------------------------------------------------
CheckResult check_tmatrix(const SuiteConfig& cfg) {
  return run_check(
      "tmatrix-reconstruction",
      "numeric joint-eigenvalue triples match the closed-form T-matrix up to "
      "positive row scaling and permutation; component dimensions match the "
      "dimension formulas via projector ranks",
      [&](CheckResult& r) {
        r.tolerance = 1e-8;
        std::ostringstream got;
        bool all_match = true, all_ranks = true;
        int cases = 0;
        for (int d = 4; d <= std::min(6, cfg.max_d); ++d) {
          ++cases;
          const auto num = rep::tmatrix_numeric(d, cfg.seed);
          std::string diag;
          const bool match =
              rep::tmatrix_matches_closed_form(num, rep::tmatrix_closed_form(rep::Dim::finite(d)), 1e-8, &diag);
          const rep::CompressedRep crep(d);
          const long dl = d;
          const std::array<long, 3> weyl{dl * (dl - 1) * (dl - 2) * (dl - 3) / 24,
                                         dl * dl * (dl * dl - 1) / 12,
                                         dl * (dl - 2) * (dl + 1) * (dl - 1) / 8};
          const bool ranks_ok = crep.ranks() == weyl;
          all_match = all_match && match;
          all_ranks = all_ranks && ranks_ok;
          got << "d=" << d << ": row-scaling match " << (match ? "yes" : "NO (" + diag + ")")
              << ", ranks " << (ranks_ok ? "ok" : "WRONG") << "; ";
        }
        r.inputs = "d in {4.." + std::to_string(std::min(6, cfg.max_d)) + "}, seed " + std::to_string(cfg.seed);
        r.expected = "row-scaling match and rank formulas for every d, runtime < 2 min";
        if (cases == 0) {
          r.computed = "skipped: range empty under caps";
          r.pass = true;
          return;
        }
        r.computed = got.str();
        r.pass = all_match && all_ranks;
      });
}

// ---- criterion 3 ----------------------------------------------------------
CheckResult check_t_vector(const SuiteConfig& cfg) {
  return run_check("t-vector", "objective coefficients equal (-1, 1/2, 0) exactly, independent of d",
                   [&](CheckResult& r) {
                     r.tolerance = 0;
                     bool ok = true;
                     int cases = 0;
                     std::ostringstream got;
                     for (int d = 4; d <= std::min(8, cfg.max_d); ++d) {
                       const auto t = rep::t_vector(d);
                       const bool here = t[0] == Rational(-1) && t[1] == Rational(1, 2) && t[2] == Rational(0);
                       ok = ok && here;
                       ++cases;
                       got << "d=" << d << ": (" << t[0] << ", " << t[1] << ", " << t[2] << ") ";
                     }
                     r.inputs = "d in {4.." + std::to_string(std::min(8, cfg.max_d)) + "}";
                     r.expected = "(-1/1, 1/2, 0/1) after rational rounding";
                     if (cases == 0) {
                       r.computed = "skipped: range empty under caps";
                       r.pass = true;
                       return;
                     }
                     r.computed = got.str();
                     r.pass = ok;
                   });
}

// ---- criterion 4 ----------------------------------------------------------
CheckResult check_ppt_equivalence(const SuiteConfig& cfg) {
  return run_check("ppt-equivalence-one-copy",
                   "minimum-eigenvalue sign of the transposed mixture agrees with the "
                   "T-matrix sign verdict on seeded random mixtures",
                   [&](CheckResult& r) {
                     r.tolerance = 1e-9;
                     std::mt19937_64 rng(cfg.seed);
                     std::uniform_real_distribution<double> uni(1e-12, 1.0);
                     int agree = 0, total = 0;
                     for (int d : {4, 5}) {
                       if (d > cfg.max_d) continue;
                       for (int trial = 0; trial < 100; ++trial) {
                         std::array<double, 3> p{};
                         double s = 0;
                         for (auto& v : p) {
                           v = -std::log(uni(rng));
                           s += v;
                         }
                         for (auto& v : p) v /= s;
                         const auto res = oracle::ppt_direct_check(d, p, 1);
                         ++total;
                         if (res.ppt_by_spectrum == res.ppt_by_tmatrix) ++agree;
                       }
                     }
                     r.inputs = "100 random mixtures per d in {4,5}, seed " + std::to_string(cfg.seed);
                     r.expected = "verdicts agree on every mixture";
                     if (total == 0) {
                       r.computed = "skipped: range empty under caps";
                       r.pass = true;
                       return;
                     }
                     r.computed = std::to_string(agree) + "/" + std::to_string(total) + " agreements";
                     r.pass = agree == total;
                   });
}

// ---- criterion 5 ----------------------------------------------------------
CheckResult check_dimension_three(const SuiteConfig& cfg) {
  return run_check("dimension-three-exact",
                   "the d = 3 program solves to 2^-n exactly, one formation bit per copy",
                   [&](CheckResult& r) {
                     r.tolerance = 0;
                     bool ok = true;
                     std::ostringstream got;
                     const int top = std::min(4, cfg.max_n);
                     for (int n = 1; n <= top; ++n) {
                       const Rational z = zeta::zeta_full(n, rep::Dim::finite(3));
                       ok = ok && z == pow2(-n);
                       ok = ok && std::abs(zeta::ef_bits_per_copy(z, n) - 1.0) <= 1e-12;
                       got << "n=" << n << ": " << z << " ";
                     }
                     r.inputs = "n in [1, " + std::to_string(top) + "]";
                     r.expected = "exact powers 1/2^n, runtime < 30 s";
                     r.computed = got.str();
                     r.pass = ok && top >= 1;
                   });
}

// ---- criterion 6 ----------------------------------------------------------
CheckResult check_main_lp(const SuiteConfig& cfg) {
  return run_check("main-lp-bound-and-certificate",
                   "simplified program stays below (3/4)^n, the dual certificate is "
                   "feasible, and the per-copy formation bound stays above log2(4/3)",
                   [&](CheckResult& r) {
                     r.tolerance = 1e-12;
                     bool ok = true;
                     const int zeta_top = std::min(12, cfg.max_n);
                     double min_per_copy = 1e300;
                     for (int n = 1; n <= zeta_top; ++n) {
                       const Rational z = zeta::zeta_simplified(n);
                       ok = ok && z <= pow(Rational(3, 4), n);
                       min_per_copy = std::min(min_per_copy, zeta::ef_bits_per_copy(z, n));
                     }
                     ok = ok && min_per_copy >= std::log2(4.0 / 3.0) - 1e-12;
                     const int cert_top = std::min(64, cfg.max_n);
                     int feasible = 0;
                     for (int n = 1; n <= cert_top; ++n)
                       if (zeta::check_certificate(n).feasible) ++feasible;
                     ok = ok && feasible == cert_top;
                     r.inputs = "program n in [1, " + std::to_string(zeta_top) + "], certificate n in [1, " +
                                std::to_string(cert_top) + "]";
                     r.expected = "bound holds exactly, certificates feasible, per copy >= 0.415037, runtime < 1 min";
                     r.computed = "bound exact; certificates " + std::to_string(feasible) + "/" +
                                  std::to_string(cert_top) + " feasible; min per-copy " + fmt(min_per_copy);
                     r.pass = ok;
                   });
}

// ---- criterion 7 ----------------------------------------------------------
CheckResult check_strong_duality(const SuiteConfig& cfg) {
  return run_check("strong-duality",
                   "reduced primal and explicit reduced dual optima agree exactly",
                   [&](CheckResult& r) {
                     r.tolerance = 0;
                     bool ok = true;
                     const int top = std::min(8, cfg.max_n);
                     std::ostringstream got;
                     for (int n = 1; n <= top; ++n) {
                       const auto dual = exact::solve_lp(zeta::build_simplified_dual(n));
                       const Rational primal = zeta::zeta_simplified(n);
                       const bool same = dual.status == exact::LPStatus::Optimal && dual.value == primal;
                       ok = ok && same;
                       got << "n=" << n << ": " << primal << (same ? " == dual " : " != dual ");
                     }
                     r.inputs = "n in [1, " + std::to_string(top) + "]";
                     r.expected = "exact equality for every n";
                     r.computed = got.str();
                     r.pass = ok && top >= 1;
                   });
}

// ---- criterion 8 ----------------------------------------------------------
CheckResult check_oracle_brackets(const SuiteConfig& cfg) {
  return run_check(
      "oracle-brackets",
      "ascent values bracket the relaxation: purity(1,4) in [0.5-1e-6, zeta(1,4)], "
      "purity(2,3) = 0.25, trace norms equal (d+2)/d, single-copy overlap = 0.5",
      [&](CheckResult& r) {
        r.tolerance = 1e-5;
        oracle::OptimizerConfig ocfg;
        ocfg.restarts = cfg.restarts;
        ocfg.seed = cfg.seed;
        bool ok = true;
        std::ostringstream got;

        if (cfg.max_d >= 4) {
          const auto p14 = oracle::max_purity(1, 4, ocfg);
          const double upper = zeta::zeta_full(1, rep::Dim::finite(4)).to_double();
          ok = ok && p14.value >= 0.5 - 1e-6 && p14.value <= upper + 1e-12;
          got << "purity(1,4)=" << fmt(p14.value) << " ";
        }
        if (cfg.max_n >= 2) {
          const auto p23 = oracle::max_purity(2, 3, ocfg);
          ok = ok && std::abs(p23.value - 0.25) <= 1e-5;
          got << "purity(2,3)=" << fmt(p23.value) << " ";
        }
        double worst_neg = 0;
        for (int d = 2; d <= std::min(12, cfg.max_d); ++d)
          worst_neg = std::max(worst_neg,
                               std::abs(oracle::negativity_trace_norm(d) - (d + 2.0) / d));
        ok = ok && worst_neg <= 1e-9;
        got << "max trace-norm deviation=" << fmt(worst_neg) << " ";
        for (int d = 3; d <= std::min(5, cfg.max_d); ++d) {
          const auto ov = oracle::max_separable_overlap(1, d, ocfg);
          ok = ok && std::abs(ov.value - 0.5) <= 1e-8;
          got << "overlap(1," << d << ")=" << fmt(ov.value) << " ";
        }
        r.inputs = std::to_string(cfg.restarts) + " restarts, seed " + std::to_string(cfg.seed);
        r.expected = "all brackets hold, runtime < 5 min";
        r.computed = got.str();
        r.pass = ok;
      });
}

// ---- criterion 9 ----------------------------------------------------------
CheckResult check_reduction_soundness(const SuiteConfig& cfg) {
  return run_check("symmetry-reduction-soundness",
                   "reduced optimum equals the expanded nine-variable optimum at two copies",
                   [&](CheckResult& r) {
                     r.tolerance = 0;
                     if (cfg.max_n < 2 || cfg.max_d < 4) {
                       r.inputs = "skipped: needs n >= 2 and d >= 4 under the caps";
                       r.expected = r.computed = "-";
                       r.pass = true;
                       return;
                     }
                     const auto expanded = exact::solve_lp(zeta::build_expanded_lp(2, 4));
                     const Rational reduced = zeta::zeta_full(2, rep::Dim::finite(4));
                     r.inputs = "n = 2, d = 4";
                     r.expected = "exact equality";
                     r.computed = "reduced " + reduced.str() + ", expanded " +
                                  (expanded.status == exact::LPStatus::Optimal ? expanded.value.str() : "unsolved");
                     r.pass = expanded.status == exact::LPStatus::Optimal && expanded.value == reduced;
                   });
}

// ---- criterion 10 ---------------------------------------------------------
CheckResult check_headline(const SuiteConfig& cfg) {
  return run_check("headline-constants",
                   "cost bound log2(4/3) = 0.415037, key bound dominated by 2 log2(e)/(d-1), "
                   "separable relative-entropy bound at least 0.2075",
                   [&](CheckResult& r) {
                     r.tolerance = 1e-6;
                     const double ec = bounds::ec_lower();
                     const double er = bounds::er_sep_lower();
                     bool dominated = true;
                     for (int d = 3; d <= std::min(100, cfg.max_d); ++d)
                       dominated = dominated && bounds::kd_upper(d) <= bounds::asymptotic_esq_bound(d);
                     const bool ok = std::abs(ec - 0.415037) <= 1e-6 &&
                                     bounds::ec_lower_ratio() == Rational(4, 3) && er >= 0.2075 &&
                                     std::abs(er - 0.207519) <= 1e-4 && dominated;
                     r.inputs = "d in [3, " + std::to_string(std::min(100, cfg.max_d)) + "]";
                     r.expected = "0.415037, dominance for every d, >= 0.2075";
                     r.computed = "cost bound " + fmt(ec) + ", separable bound " + fmt(er) +
                                  (dominated ? ", dominance holds" : ", dominance VIOLATED");
                     r.pass = ok;
                   });
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  out.push_back(check_esq_table(cfg));
  out.push_back(check_tmatrix(cfg));
  out.push_back(check_t_vector(cfg));
  out.push_back(check_ppt_equivalence(cfg));
  out.push_back(check_dimension_three(cfg));
  out.push_back(check_main_lp(cfg));
  out.push_back(check_strong_duality(cfg));
  out.push_back(check_oracle_brackets(cfg));
  out.push_back(check_reduction_soundness(cfg));
  out.push_back(check_headline(cfg));

  // runtime limits are part of the contract
  const struct {
    const char* name;
    double limit_ms;
  } limits[] = {{"esq-kd-closed-forms", 1000},
                {"tmatrix-reconstruction", 120000},
                {"dimension-three-exact", 30000},
                {"main-lp-bound-and-certificate", 60000},
                {"oracle-brackets", 300000}};
  for (auto& check : out)
    for (const auto& lim : limits)
      if (check.name == lim.name && check.runtime_ms >= lim.limit_ms) {
        check.pass = false;
        check.computed += " [runtime limit exceeded]";
      }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

bool any_errored(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.error.empty()) return true;
  return false;
}

}  // namespace antisym::verify
