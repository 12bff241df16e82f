#include <cstdint>
#include <exception>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wheelzeta/combinatorics.hpp"
#include "wheelzeta/eir_conformal.hpp"
#include "wheelzeta/errors.hpp"
#include "wheelzeta/numeric_oracle.hpp"
#include "wheelzeta/parallel.hpp"
#include "wheelzeta/report.hpp"
#include "wheelzeta/residue_engine.hpp"
#include "wheelzeta/special_functions.hpp"
#include "wheelzeta/verification.hpp"
#include "wheelzeta/version.hpp"

namespace {

using namespace wheelzeta;

Report make_report(const std::string& command) {
  Report r;
  r.command = command;
  r.version = kVersion;
  return r;
}

std::vector<int> parse_sigma(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("--sigma expects comma-separated integers, got '" +
                       csv + "'");
    }
  }
  return out;
}

Report run_classes(int L, int workers) {
  Report r = make_report("classes");
  r.parameters["L"] = std::to_string(L);
  const ClassTable table = class_table(L, workers);
  BigCount total = 0;
  for (const auto& row : table.rows) {
    nlohmann::json j;
    j["n_s"] = std::to_string(row.n_s);
    j["size"] = row.size.str();
    j["N"] = row.quotient.str();
    j["avoiders"] = row.avoiders.str();
    const auto formula = closed_form_N(L, row.n_s);
    j["closed_form"] =
        formula ? (*formula == row.quotient ? "match" : "MISMATCH")
                : "no published formula";
    r.rows.push_back(j);
    total += row.size;
  }
  r.checks.push_back({"catalan_decomposition", table.sum_check,
                      "sum of 1/n_sigma = " + table.catalan_number.str()});
  r.checks.push_back({"sizes_sum_to_L_factorial",
                      total == BigCount(factorial_u64(L)), total.str()});
  bool closed_ok = true;
  for (const auto& row : r.rows)
    if (row["closed_form"] == "MISMATCH") closed_ok = false;
  r.checks.push_back({"closed_forms_match", closed_ok, ""});
  return r;
}

Report run_residue(int spokes, int workers) {
  Report r = make_report("residue");
  r.parameters["spokes"] = std::to_string(spokes);
  const WheelResidue res = wheel_residue(spokes, /*cross_check=*/false);
  nlohmann::json j;
  j["spokes"] = std::to_string(res.spokes);
  j["coefficient"] = to_string(res.coefficient);
  j["pi_power"] = std::to_string(res.pi_power);
  j["zeta_argument"] = std::to_string(res.zeta_argument);
  j["symbolic"] = to_string(res.coefficient) + " * pi^" +
                  std::to_string(res.pi_power) + " * zeta(" +
                  std::to_string(res.zeta_argument) + ")";
  j["numeric"] = format_double(res.numeric);
  r.rows.push_back(j);
  const int L = spokes - 1;
  if (L <= kDefaultSweepMax) {
    bool ok = true;
    std::string detail = "coefficient re-derived from the sector sum";
    try {
      wheel_residue(spokes, /*cross_check=*/true, kDefaultSweepMax, workers);
    } catch (const InternalError& e) {
      ok = false;
      detail = e.what();
    }
    r.checks.push_back({"sector_sum_cross_check", ok, detail});
  }
  return r;
}

Report run_verify(int L_max, const std::string& level, std::int64_t samples,
                  std::uint64_t seed, int workers) {
  if (level != "fast" && level != "full")
    throw UsageError("--level must be fast or full");
  Report r = make_report("verify");
  r.parameters["L_max"] = std::to_string(L_max);
  r.parameters["level"] = level;
  if (level == "full") {
    r.parameters["samples"] = std::to_string(samples);
    r.parameters["seed"] = std::to_string(seed);
    r.checks = verify_full(L_max, samples, seed, workers);
  } else {
    r.checks = verify_fast(L_max, workers);
  }
  return r;
}

Report run_oracle(bool mc, bool quad, bool pl_series, int L,
                  const std::string& sigma_csv, std::int64_t samples,
                  std::uint64_t seed, std::int64_t terms, double tol,
                  int workers) {
  if (static_cast<int>(mc) + static_cast<int>(quad) +
          static_cast<int>(pl_series) !=
      1)
    throw UsageError("oracle: pick exactly one of --mc, --quad, --pl-series");
  Report r = make_report("oracle");
  if (mc) {
    r.parameters["mode"] = "mc";
    r.parameters["samples"] = std::to_string(samples);
    r.parameters["seed"] = std::to_string(seed);
    const McEstimate est = mc_full_residue(samples, seed, workers);
    const double reference = wheel_residue(3, false).numeric;
    const double sigmas =
        std::abs(est.value - reference) / est.stderr_value;
    nlohmann::json j;
    j["estimate"] = format_double(est.value);
    j["stderr"] = format_double(est.stderr_value);
    j["reference"] = format_double(reference);
    j["sigma_distance"] = format_double(sigmas);
    r.rows.push_back(j);
    r.checks.push_back({"estimate_within_3_stderr", sigmas <= 3.0,
                        format_double(sigmas) + " standard errors"});
  } else if (quad) {
    r.parameters["mode"] = "quad";
    if (sigma_csv.empty()) throw UsageError("oracle --quad needs --sigma");
    const Permutation sigma(parse_sigma(sigma_csv));
    if (L != 0 && L != sigma.size())
      throw UsageError("--L disagrees with the --sigma length");
    r.parameters["sigma"] = sigma_csv;
    r.parameters["tol"] = format_double(tol);
    const SectorEvaluation eval = evaluate_sector(sigma);
    const double reference =
        2.0 * zeta_odd(2 * sigma.size() - 1) / to_double(eval.n_sigma);
    const double value = quad_sector_integral(
        sigma, tol / 20.0, static_cast<int>(terms > 0 ? terms : 0));
    const double rel = std::abs(value - reference) / reference;
    nlohmann::json j;
    j["estimate"] = format_double(value);
    j["reference"] = format_double(reference);
    j["n_sigma"] = eval.n_sigma.str();
    j["rel_error"] = format_double(rel);
    r.rows.push_back(j);
    r.checks.push_back(
        {"quad_matches_exact_value", rel <= tol, "rel error " + format_double(rel)});
  } else {
    r.parameters["mode"] = "pl-series";
    if (L < 2) throw UsageError("oracle --pl-series needs --L >= 2");
    if (terms <= 0) terms = 10'000;
    r.parameters["L"] = std::to_string(L);
    r.parameters["terms"] = std::to_string(terms);
    const double value = pl_series_residue(L, terms);
    const double reference = wheel_residue(L + 1, false).numeric;
    const double rel = std::abs(value - reference) / reference;
    // integral tail bound for sum n^(1-2L), relative to zeta(2L-1) >= 1
    const double tail_rel =
        std::pow(static_cast<double>(terms), 2.0 - 2.0 * L) / (2.0 * L - 2.0);
    nlohmann::json j;
    j["estimate"] = format_double(value);
    j["reference"] = format_double(reference);
    j["rel_error"] = format_double(rel);
    r.rows.push_back(j);
    r.checks.push_back({"series_within_truncation_bound",
                        rel <= tail_rel + 1e-12,
                        "rel error " + format_double(rel) + ", bound " +
                            format_double(tail_rel)});
  }
  return r;
}

Report run_eir(int nu, int ell, int n) {
  Report r = make_report("eir");
  r.parameters["nu"] = std::to_string(nu);
  r.parameters["ell"] = std::to_string(ell);
  r.parameters["n"] = std::to_string(n);
  const Sextuplet s = sextuplet(nu, ell, n);
  const auto member_row = [](const std::string& name, const EIRTriple& chi) {
    nlohmann::json j;
    j["member"] = name;
    j["triple"] = to_string(chi);
    j["twist"] = to_string(twist(chi));
    j["gci"] = is_gci(chi);
    return j;
  };
  r.rows.push_back(member_row("chi_-nu", s.chi_minus_nu));
  r.rows.push_back(member_row("chi_0", s.chi_zero));
  r.rows.push_back(member_row("chi_n", s.chi_n));
  r.rows.push_back(member_row("dual chi_-nu", s.chi_minus_nu_dual));
  r.rows.push_back(member_row("dual chi_0", s.chi_zero_dual));
  r.rows.push_back(member_row("dual chi_n", s.chi_n_dual));
  r.checks.push_back(
      {"casimir_invariants", true,
       "C2=" + to_string(s.casimirs[0]) + " C3=" + to_string(s.casimirs[1]) +
           " C4=" + to_string(s.casimirs[2])});
  r.checks.push_back(
      {"intertwiner_orders", true,
       std::to_string(s.intertwiner_orders[0]) + " " +
           std::to_string(s.intertwiner_orders[1]) + " " +
           std::to_string(s.intertwiner_orders[2])});
  if (nu == 1 && n == ell + 1) {
    const bool ok = s.casimirs[0] == Rational(2 * ell * (ell + 3)) &&
                    s.casimirs[1] == 0 && s.casimirs[2] == 0;
    r.checks.push_back({"symmetric_tensor_casimirs_vanish", ok, ""});
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numeric engine for wheel-graph periods, sector "
               "censuses and conformal representation bookkeeping"};
  app.require_subcommand(1);

  std::string format = "table";
  int workers = 0;
  app.add_option("--workers", workers,
                 "worker threads (0 = all cores; env " +
                     std::string(kWorkersEnvVar) + " wins)");

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "table, json or csv");
  };

  int L = 0, spokes = 0, L_max = 6, nu = 1, ell = 0, n_label = 1;
  std::string level = "fast", sigma_csv;
  std::int64_t samples = 1'000'000, terms = 0;
  std::uint64_t seed = 12345;
  double tol = 1e-7;
  bool mc = false, quad = false, pl_series = false;

  CLI::App* c_classes = app.add_subcommand("classes", "sector class census of S_L");
  c_classes->add_option("--L", L, "rim size")->required();
  add_format(c_classes);

  CLI::App* c_residue =
      app.add_subcommand("residue", "wheel residue, symbolic and numeric");
  c_residue->add_option("--spokes", spokes, "number of spokes (>= 3)")->required();
  add_format(c_residue);

  CLI::App* c_verify = app.add_subcommand("verify", "run the invariant suites");
  c_verify->add_option("--L-max", L_max, "largest rim size swept");
  c_verify->add_option("--level", level, "fast (exact only) or full (adds oracles)");
  c_verify->add_option("--samples", samples, "Monte Carlo samples (full level)");
  c_verify->add_option("--seed", seed, "Monte Carlo seed (full level)");
  add_format(c_verify);

  CLI::App* c_oracle =
      app.add_subcommand("oracle", "independent numeric estimates vs references");
  c_oracle->add_flag("--mc", mc, "Monte Carlo three-spoke residue");
  c_oracle->add_flag("--quad", quad, "nested quadrature of one sector");
  c_oracle->add_flag("--pl-series", pl_series, "coefficient-series residue route");
  c_oracle->add_option("--L", L, "rim size (pl-series; optional for quad)");
  c_oracle->add_option("--sigma", sigma_csv, "sector permutation, e.g. 2,1,3");
  c_oracle->add_option("--samples", samples, "Monte Carlo samples");
  c_oracle->add_option("--seed", seed, "Monte Carlo seed");
  c_oracle->add_option("--terms", terms,
                       "series/kernel truncation (0 = closed kernel for "
                       "--quad, 10000 terms for --pl-series)");
  c_oracle->add_option("--tol", tol, "quad acceptance tolerance");
  add_format(c_oracle);

  CLI::App* c_eir =
      app.add_subcommand("eir", "exceptional conformal representation sextuplet");
  c_eir->add_option("--nu", nu, "nu >= 1")->required();
  c_eir->add_option("--ell", ell, "total spin ell >= 0")->required();
  c_eir->add_option("--n", n_label, "n in [1, 2 ell + 1]")->required();
  add_format(c_eir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const ReportFormat fmt = parse_format(format);
    Report report;
    if (c_classes->parsed()) report = run_classes(L, workers);
    else if (c_residue->parsed()) report = run_residue(spokes, workers);
    else if (c_verify->parsed())
      report = run_verify(L_max, level, samples, seed, workers);
    else if (c_oracle->parsed())
      report = run_oracle(mc, quad, pl_series, L, sigma_csv, samples, seed,
                          terms, tol, workers);
    else
      report = run_eir(nu, ell, n_label);
    std::cout << report.render(fmt);
    return report.all_passed() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
