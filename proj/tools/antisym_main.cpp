// Command-line surface: every computation of the toolkit behind one binary
// with machine-readable output and a one-shot verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 internal error.

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "antisym/bounds.hpp"
#include "antisym/oracle.hpp"
#include "antisym/repspace.hpp"
#include "antisym/verify.hpp"
#include "antisym/zeta.hpp"

using antisym::InputError;
using antisym::InternalError;
using antisym::Rational;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string shortest_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string scalar_to_string(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_float()) return shortest_double(j.get<double>());
  return j.dump();
}

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out.emplace_back(prefix, scalar_to_string(j));
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const ordered_json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  if (format == "csv") {
    std::cout << "field,value\n";
    for (const auto& [k, v] : rows) std::cout << csv_quote(k) << "," << csv_quote(v) << "\n";
    return;
  }
  size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

std::uint64_t env_seed() {
  if (const char* s = std::getenv("ANTISYM_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      throw InputError("ANTISYM_SEED is not a number");
    }
  }
  return 0;
}

// ---- subcommand bodies ------------------------------------------------------

int cmd_bounds(int d, const std::string& format) {
  if (d < 2) throw InputError("bounds: d must be >= 2");
  const auto r = antisym::bounds::bound_report(d);
  ordered_json doc;
  doc["d"] = r.d;
  doc["kd_upper"] = r.kd_upper;
  doc["esq_upper"] = r.esq_upper;
  doc["optimal_k"] = r.optimal_k;
  doc["ec_lower"] = r.ec_lower;
  doc["ec_lower_ratio"] = antisym::bounds::ec_lower_ratio().str();
  doc["log_negativity"] = r.log_negativity;
  doc["er_sep_lower"] = r.er_sep_lower;
  doc["asymptotic_esq_bound"] = r.asymptotic_esq_bound;
  emit(doc, format);
  return 0;
}

int cmd_zeta(int n, int d, bool use_limit, bool use_simplified, const std::string& format) {
  const int chosen = (d > 0 ? 1 : 0) + (use_limit ? 1 : 0) + (use_simplified ? 1 : 0);
  if (chosen != 1) throw InputError("zeta: pass exactly one of --d, --inf, --simplified");
  Rational value;
  std::string family;
  if (use_simplified) {
    value = antisym::zeta::zeta_simplified(n);
    family = "simplified";
  } else if (use_limit) {
    value = antisym::zeta::zeta_full(n, antisym::rep::Dim::infinite());
    family = "limit";
  } else {
    value = antisym::zeta::zeta_full(n, antisym::rep::Dim::finite(d));
    family = "d=" + std::to_string(d);
  }
  ordered_json doc;
  doc["n"] = n;
  doc["family"] = family;
  doc["zeta"] = value.str();
  doc["zeta_double"] = value.to_double();
  doc["ef_bits_per_copy"] = antisym::zeta::ef_bits_per_copy(value, n);
  emit(doc, format);
  return 0;
}

int cmd_certificate(int n, bool tampered, const std::string& format) {
  auto cert = antisym::zeta::DualCertificate::standard(n);
  if (tampered) cert.deltas[static_cast<size_t>(n)] = antisym::pow2(-n);
  const auto report = antisym::zeta::check_certificate(cert);
  ordered_json doc;
  doc["n"] = n;
  doc["tampered"] = tampered;
  doc["z"] = cert.z.str();
  doc["feasible"] = report.feasible;
  doc["deltas_nonnegative"] = report.deltas_nonnegative;
  ordered_json slack = ordered_json::array();
  for (size_t m = 0; m < report.slack.size(); ++m) {
    ordered_json row;
    row["m"] = m;
    row["slack"] = report.slack[m].str();
    row["slack_double"] = report.slack[m].to_double();
    slack.push_back(row);
  }
  doc["slack"] = slack;
  doc["violated"] = report.violated;
  emit(doc, format);
  if (!tampered && !report.feasible) return 1;  // the standard point must be feasible
  return 0;
}

ordered_json rational_matrix_json(const antisym::rep::RationalTMatrix& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(r);
  }
  return rows;
}

int cmd_tmatrix(int d, bool use_limit, bool compare, std::uint64_t seed, const std::string& format) {
  ordered_json doc;
  if (use_limit) {
    doc["d"] = "inf";
    doc["closed_form"] = rational_matrix_json(antisym::rep::tmatrix_closed_form(antisym::rep::Dim::infinite()));
    emit(doc, format);
    return 0;
  }
  if (d < 3) throw InputError("tmatrix: d must be >= 3");
  doc["d"] = d;
  if (d >= 4)
    doc["closed_form"] = rational_matrix_json(antisym::rep::tmatrix_closed_form(antisym::rep::Dim::finite(d)));
  if (d == 3 || compare) {
    if (d > 8) throw InputError("tmatrix: numeric extraction capped at d = 8");
    const auto num = antisym::rep::tmatrix_numeric(d, seed);
    ordered_json rows = ordered_json::array();
    for (long r = 0; r < num.values.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < 3; ++c) row.push_back(num.values(r, c));
      rows.push_back(row);
    }
    doc["numeric_blocks"] = rows;
    doc["block_dims"] = num.block_dims;
    if (compare && d >= 4) {
      std::string diag;
      const bool match = antisym::rep::tmatrix_matches_closed_form(
          num, antisym::rep::tmatrix_closed_form(antisym::rep::Dim::finite(d)), 1e-8, &diag);
      doc["row_scaling_match"] = match;
      doc["diagnostic"] = diag;
      const antisym::rep::CompressedRep rep(d);
      doc["component_ranks"] = {rep.rank(antisym::rep::YoungSymbol::Y1111),
                                rep.rank(antisym::rep::YoungSymbol::Y22),
                                rep.rank(antisym::rep::YoungSymbol::Y211)};
    }
  }
  emit(doc, format);
  return 0;
}

ordered_json oracle_result_json(const antisym::oracle::OracleResult& r) {
  ordered_json doc;
  doc["value"] = r.value;
  doc["iterations"] = r.iterations;
  doc["converged"] = r.converged;
  return doc;
}

int cmd_verify_all(antisym::verify::SuiteConfig cfg, const std::string& report_path,
                   const std::string& format) {
  const auto results = antisym::verify::run_acceptance_suite(cfg);

  ordered_json doc;
  doc["suite"] = "acceptance";
  ordered_json jcfg;
  jcfg["max_n"] = cfg.max_n;
  jcfg["max_d"] = cfg.max_d;
  jcfg["restarts"] = cfg.restarts;
  jcfg["seed"] = cfg.seed;
  doc["config"] = jcfg;
  ordered_json checks = ordered_json::array();
  int passed = 0, errored = 0;
  for (const auto& r : results) {
    ordered_json c;
    c["name"] = r.name;
    c["reference"] = r.reference;
    c["inputs"] = r.inputs;
    c["expected"] = r.expected;
    c["computed"] = r.computed;
    c["tolerance"] = r.tolerance;
    c["pass"] = r.pass;
    c["runtime_ms"] = r.runtime_ms;
    c["error"] = r.error;
    checks.push_back(c);
    if (r.pass) ++passed;
    if (!r.error.empty()) ++errored;
  }
  doc["checks"] = checks;
  ordered_json summary;
  summary["total"] = results.size();
  summary["passed"] = passed;
  summary["failed"] = static_cast<int>(results.size()) - passed;
  summary["errors"] = errored;
  summary["all_passed"] = antisym::verify::all_passed(results);
  doc["summary"] = summary;

  {
    std::ofstream out(report_path);
    if (!out) throw InputError("verify-all: cannot write report to " + report_path);
    out << doc.dump(2) << "\n";
  }

  if (format == "json" || format == "csv") {
    emit(doc, format);
  } else {
    int index = 0;
    for (const auto& r : results) {
      ++index;
      std::printf("[%2d/%zu] %-32s %s (%.1f ms)\n", index, results.size(), r.name.c_str(),
                  r.pass ? "PASS" : "FAIL", r.runtime_ms);
      if (!r.pass) std::printf("        computed: %s\n", r.computed.c_str());
      if (!r.error.empty()) std::printf("        error:    %s\n", r.error.c_str());
    }
    std::printf("report written to %s\n", report_path.c_str());
  }
  if (antisym::verify::any_errored(results)) return 3;
  return antisym::verify::all_passed(results) ? 0 : 1;
}

// flat key=value file; '#' starts a comment
void load_config(const std::string& path, antisym::verify::SuiteConfig& cfg, std::string& report_path) {
  std::ifstream in(path);
  if (!in) throw InputError("verify-all: cannot read config " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    const std::string flat = trim(line);
    if (flat.empty()) continue;
    const auto eq = flat.find('=');
    if (eq == std::string::npos)
      throw InputError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(flat.substr(0, eq));
    const std::string value = trim(flat.substr(eq + 1));
    try {
      if (key == "max_n")
        cfg.max_n = std::stoi(value);
      else if (key == "max_d")
        cfg.max_d = std::stoi(value);
      else if (key == "restarts")
        cfg.restarts = std::stoi(value);
      else if (key == "seed")
        cfg.seed = std::stoull(value);
      else if (key == "report")
        report_path = value;
      else
        throw InputError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw InputError("config line " + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for entanglement bounds of the antisymmetric state"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = env_seed();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string format = "text";
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };

  // bounds
  int bounds_d = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound table for one dimension");
  bounds_cmd->add_option("--d", bounds_d, "local dimension")->required();
  add_format(bounds_cmd);

  // zeta
  int zeta_n = 0, zeta_d = 0;
  bool zeta_inf = false, zeta_simpl = false;
  auto* zeta_cmd = app.add_subcommand("zeta", "exact optimum of a reduced program");
  zeta_cmd->add_option("--n", zeta_n, "number of copies")->required();
  zeta_cmd->add_option("--d", zeta_d, "local dimension (3 or >= 4)");
  zeta_cmd->add_flag("--inf", zeta_inf, "large-d limit family");
  zeta_cmd->add_flag("--simplified", zeta_simpl, "two-symbol simplified family");
  add_format(zeta_cmd);

  // certificate
  int cert_n = 0;
  bool cert_tampered = false;
  auto* cert_cmd = app.add_subcommand("certificate", "check the dual certificate");
  cert_cmd->add_option("--n", cert_n, "number of copies")->required()->check(CLI::Range(1, 64));
  cert_cmd->add_flag("--tampered", cert_tampered, "also fill the top delta (regression probe)");
  add_format(cert_cmd);

  // tmatrix
  int tm_d = 0;
  bool tm_inf = false, tm_compare = false;
  std::uint64_t tm_seed_opt = seed;
  auto* tm_cmd = app.add_subcommand("tmatrix", "closed-form and numeric T-matrix data");
  tm_cmd->add_option("--d", tm_d, "local dimension");
  tm_cmd->add_flag("--inf", tm_inf, "large-d limit");
  tm_cmd->add_flag("--compare", tm_compare, "numeric extraction vs closed form");
  tm_cmd->add_option("--seed", tm_seed_opt, "seed for the random combination");
  add_format(tm_cmd);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "independent numerical checks");
  oracle_cmd->require_subcommand(1);
  int or_n = 1, or_d = 4, or_restarts = 200, or_iters = 2000;
  std::uint64_t or_seed = seed;
  std::string or_p = "0,1,0";

  auto* purity_cmd = oracle_cmd->add_subcommand("purity", "largest reduced-state purity");
  purity_cmd->add_option("--n", or_n)->required();
  purity_cmd->add_option("--d", or_d)->required();
  purity_cmd->add_option("--restarts", or_restarts);
  purity_cmd->add_option("--iters", or_iters);
  purity_cmd->add_option("--seed", or_seed);
  add_format(purity_cmd);

  auto* neg_cmd = oracle_cmd->add_subcommand("negativity", "trace norm of the transposed state");
  neg_cmd->add_option("--d", or_d)->required();
  add_format(neg_cmd);

  auto* overlap_cmd = oracle_cmd->add_subcommand("overlap", "largest separable overlap");
  overlap_cmd->add_option("--n", or_n)->required();
  overlap_cmd->add_option("--d", or_d)->required();
  overlap_cmd->add_option("--restarts", or_restarts);
  overlap_cmd->add_option("--iters", or_iters);
  overlap_cmd->add_option("--seed", or_seed);
  add_format(overlap_cmd);

  auto* ppt_cmd = oracle_cmd->add_subcommand("ppt", "direct PPT check of an isotypic mixture");
  ppt_cmd->add_option("--d", or_d)->required();
  ppt_cmd->add_option("--n", or_n)->required();
  ppt_cmd->add_option("--p", or_p, "comma-separated weights over the three symbols")->required();
  add_format(ppt_cmd);

  // verify-all
  std::string config_path, report_path = "./report.json";
  antisym::verify::SuiteConfig suite;
  suite.seed = seed;
  auto* verify_cmd = app.add_subcommand("verify-all", "run the full acceptance suite");
  auto* cfg_opt = verify_cmd->add_option("--config", config_path, "flat key=value config file");
  auto* maxn_opt = verify_cmd->add_option("--max-n", suite.max_n, "cap every n-indexed range");
  auto* maxd_opt = verify_cmd->add_option("--max-d", suite.max_d, "cap every d-indexed range");
  auto* restarts_opt = verify_cmd->add_option("--restarts", suite.restarts, "oracle restarts");
  auto* seed_opt = verify_cmd->add_option("--seed", suite.seed, "suite seed");
  auto* report_opt = verify_cmd->add_option("--report", report_path, "report output path");
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(bounds_d, format);
    if (zeta_cmd->parsed())
      return cmd_zeta(zeta_n, zeta_cmd->count("--d") ? zeta_d : 0, zeta_inf, zeta_simpl, format);
    if (cert_cmd->parsed()) return cmd_certificate(cert_n, cert_tampered, format);
    if (tm_cmd->parsed()) {
      if (!tm_inf && tm_cmd->count("--d") == 0) throw InputError("tmatrix: pass --d or --inf");
      return cmd_tmatrix(tm_d, tm_inf, tm_compare, tm_seed_opt, format);
    }
    if (oracle_cmd->parsed()) {
      antisym::oracle::OptimizerConfig ocfg;
      ocfg.restarts = or_restarts;
      ocfg.max_iterations = or_iters;
      ocfg.seed = or_seed;
      ordered_json doc;
      if (purity_cmd->parsed()) {
        doc = oracle_result_json(antisym::oracle::max_purity(or_n, or_d, ocfg));
      } else if (neg_cmd->parsed()) {
        const double norm = antisym::oracle::negativity_trace_norm(or_d);
        doc["trace_norm"] = norm;
        doc["log_negativity"] = std::log2(norm);
      } else if (overlap_cmd->parsed()) {
        doc = oracle_result_json(antisym::oracle::max_separable_overlap(or_n, or_d, ocfg));
      } else {
        std::array<double, 3> p{};
        std::stringstream ss(or_p);
        std::string item;
        int idx = 0;
        while (std::getline(ss, item, ',')) {
          if (idx >= 3) throw InputError("oracle ppt: expected three weights");
          p[static_cast<size_t>(idx++)] = std::stod(item);
        }
        if (idx != 3) throw InputError("oracle ppt: expected three weights");
        const auto res = antisym::oracle::ppt_direct_check(or_d, p, or_n);
        doc["min_eigenvalue"] = res.min_eigenvalue;
        doc["ppt_by_spectrum"] = res.ppt_by_spectrum;
        doc["ppt_by_tmatrix"] = res.ppt_by_tmatrix;
      }
      emit(doc, format);
      return 0;
    }
    if (verify_cmd->parsed()) {
      antisym::verify::SuiteConfig cfg;  // defaults
      cfg.seed = seed;
      std::string report = "./report.json";
      if (cfg_opt->count() > 0) load_config(config_path, cfg, report);
      if (maxn_opt->count() > 0) cfg.max_n = suite.max_n;
      if (maxd_opt->count() > 0) cfg.max_d = suite.max_d;
      if (restarts_opt->count() > 0) cfg.restarts = suite.restarts;
      if (seed_opt->count() > 0) cfg.seed = suite.seed;
      if (report_opt->count() > 0) report = report_path;
      return cmd_verify_all(cfg, report, format);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
