#include "wheelzeta/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "wheelzeta/combinatorics.hpp"
#include "wheelzeta/eir_conformal.hpp"
#include "wheelzeta/errors.hpp"
#include "wheelzeta/numeric_oracle.hpp"
#include "wheelzeta/residue_engine.hpp"
#include "wheelzeta/special_functions.hpp"

namespace wheelzeta {

namespace {

constexpr double kPi = std::numbers::pi;

void add(std::vector<Check>& out, const std::string& name, bool pass,
         const std::string& detail = "") {
  out.push_back({name, pass, detail});
}

std::string fmt(double v) { return format_double(v); }

// The sector whose ordering swaps the two next-to-last vertices
// (1, ..., L-3, L-1, L-2, L); always worth exactly half the identity sector.
Permutation next_to_last_swap(int L) {
  auto e = Permutation::identity(L).entries();
  std::swap(e[static_cast<std::size_t>(L) - 3], e[static_cast<std::size_t>(L) - 2]);
  return Permutation(std::move(e));
}

std::uint64_t n_of(const Permutation& sigma) {
  return sector_weight(sigma.span());
}

void exact_sector_checks(std::vector<Check>& out, int L_max, int workers) {
  // identity sector is always exactly 2 zeta(2L-1)
  {
    bool ok = true;
    std::string detail;
    for (int L = kMinL; L <= L_max; ++L)
      if (n_of(Permutation::identity(L)) != 1) {
        ok = false;
        detail = "failed at L=" + std::to_string(L);
        break;
      }
    add(out, "identity_sector_unit_weight", ok, detail);
  }
  // anchor sectors with known exact weights
  {
    bool ok = true;
    std::string detail;
    for (int L = 3; L <= L_max; ++L)
      if (n_of(next_to_last_swap(L)) != 2) {
        ok = false;
        detail = "swap sector at L=" + std::to_string(L);
      }
    if (L_max >= 4 && n_of(Permutation({2, 3, 1, 4})) != 4)
      ok = false, detail += " (2,3,1,4)";
    if (L_max >= 5 && n_of(Permutation({4, 2, 1, 3, 5})) != 12)
      ok = false, detail += " (4,2,1,3,5)";
    add(out, "anchor_sector_weights", ok, detail);
  }

  for (int L = kMinL; L <= L_max; ++L) {
    const ClassTable table = class_table(L, workers, std::max(L, kDefaultSweepMax));
    const std::string suffix = "_L" + std::to_string(L);

    add(out, "catalan_decomposition" + suffix, table.sum_check,
        "sum of 1/n_sigma vs " + table.catalan_number.str());

    bool div_ok = true, avoid_ok = true, closed_ok = true;
    BigCount quotient_sum = 0;
    std::ostringstream closed_detail;
    for (const auto& row : table.rows) {
      if (row.size % row.n_s != 0) div_ok = false;
      if (row.avoiders != row.quotient) avoid_ok = false;
      quotient_sum += row.quotient;
      if (auto formula = closed_form_N(L, row.n_s)) {
        if (*formula != row.quotient) {
          closed_ok = false;
          closed_detail << " n_s=" << row.n_s << " got " << row.quotient
                        << " formula " << *formula;
        }
      }
    }
    // published formulas must not predict members for absent classes
    for (std::uint64_t n_s : {1ull, 2ull, 4ull, 8ull, 12ull, 24ull, 36ull}) {
      const bool present =
          std::any_of(table.rows.begin(), table.rows.end(),
                      [&](const ClassRow& r) { return r.n_s == n_s; });
      if (!present && *closed_form_N(L, n_s) != 0) {
        closed_ok = false;
        closed_detail << " n_s=" << n_s << " predicted for empty class";
      }
    }
    add(out, "class_size_divisibility" + suffix, div_ok);
    add(out, "avoider_counts_match_quotients" + suffix, avoid_ok);
    add(out, "closed_form_quotients" + suffix, closed_ok, closed_detail.str());
    add(out, "quotients_sum_to_catalan" + suffix,
        quotient_sum == table.catalan_number);

    // known multiplicities for the 1/2 and 1/4 classes
    {
      BigCount size2 = 0, size4 = 0;
      for (const auto& row : table.rows) {
        if (row.n_s == 2) size2 = row.size;
        if (row.n_s == 4) size4 = row.size;
      }
      const BigCount want2 = BigCount(L - 2) << (L - 2);
      bool ok = (L == 2) ? size2 == 0 : size2 == want2;
      if (L > 3) {
        const BigCount want4 = (BigCount(L - 3) * (L + 4)) << (L - 4);
        ok = ok && size4 == want4;
      }
      add(out, "known_class_multiplicities" + suffix, ok);
    }

    // S_L^(1): 2^(L-1) members, all weight one, exhausting that class
    {
      const auto s1 = s1_generate(L);
      bool ok = s1.size() == (std::size_t{1} << (L - 1));
      for (const auto& sigma : s1) ok = ok && n_of(sigma) == 1;
      const auto unit_row =
          std::find_if(table.rows.begin(), table.rows.end(),
                       [](const ClassRow& r) { return r.n_s == 1; });
      ok = ok && unit_row != table.rows.end() &&
           unit_row->size == BigCount(s1.size());
      add(out, "s1_exhausts_unit_class" + suffix, ok);
    }

    // weight invariance under reflection (exhaustive up to S_8)
    if (L <= 8) {
      bool ok = true;
      enumerate_permutations(L, [&](const Permutation& sigma) {
        if (n_of(sigma) != n_of(reflect(sigma))) {
          ok = false;
          return false;
        }
        return true;
      });
      add(out, "reflection_preserves_weight" + suffix, ok);
    }

    // extremal class: claimed denominator, multiplicity, and representative
    if (L >= 4) {
      const MinFraction mf = min_fraction(L);
      const auto& last = table.rows.back();  // rows sorted by n_s
      const Permutation rep = min_class_representative(L);
      const bool ok = BigCount(last.n_s) == mf.n_max &&
                      last.size == mf.multiplicity &&
                      BigCount(n_of(rep)) == mf.n_max;
      add(out, "extremal_class_claims" + suffix, ok,
          "largest n_s=" + std::to_string(last.n_s));
    }

    // full ledger audit (divisors even, positive, outermost = 2)
    if (L <= 8) {
      bool ok = true;
      try {
        enumerate_permutations(L, [&](const Permutation& sigma) {
          evaluate_sector(sigma);
          return true;
        });
      } catch (const InternalError&) {
        ok = false;
      }
      add(out, "divisor_ledger_valid" + suffix, ok);
    }
  }
}

void special_function_checks(std::vector<Check>& out) {
  // sin((m+1)t)/sin(t) identity at lambda = 1
  {
    double worst = 0.0;
    for (int m = 0; m <= 50; ++m)
      for (int i = 1; i <= 100; ++i) {
        const double theta = kPi * i / 101.0;
        const double lhs = gegenbauer(m, 1.0, std::cos(theta));
        const double rhs = std::sin((m + 1) * theta) / std::sin(theta);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    add(out, "gegenbauer_chebyshev_identity", worst <= 1e-10,
        "max abs dev " + fmt(worst));
  }
  // weighted orthogonality on [0, pi], and the 3-sphere volume
  {
    double worst = 0.0;
    for (int p = 0; p <= 12; ++p)
      for (int q = p; q <= 12; ++q) {
        const double integral = integrate_1d(
            [&](double t) {
              const double s = std::sin(t);
              return gegenbauer(p, 1.0, std::cos(t)) *
                     gegenbauer(q, 1.0, std::cos(t)) * s * s;
            },
            0.0, kPi, 1e-11);
        const double expected = (p == q) ? kPi / 2.0 : 0.0;
        worst = std::max(worst, std::abs(integral - expected));
      }
    // |S^(2l+1)| = 2 pi^(l+1)/Gamma(l+1) must give 2 pi^2 at l = 1
    const double sphere_volume = 2.0 * std::pow(kPi, 2.0) / std::tgamma(2.0);
    const bool sphere_ok = std::abs(sphere_volume - 2.0 * kPi * kPi) < 1e-12;
    add(out, "gegenbauer_orthogonality", worst <= 1e-8 && sphere_ok,
        "max abs dev " + fmt(worst));
  }
  // reference zeta values to 12 digits
  {
    const double z3 = zeta_odd(3), z5 = zeta_odd(5), z7 = zeta_odd(7);
    const bool ok = std::abs(z3 - 1.2020569031595943) <= 1e-12 &&
                    std::abs(z5 - 1.0369277551433699) <= 1e-12 &&
                    std::abs(z7 - 1.0083492773819228) <= 1e-12;
    add(out, "zeta_reference_values", ok,
        "zeta(3)=" + fmt(z3) + " zeta(5)=" + fmt(z5) + " zeta(7)=" + fmt(z7));
  }
  // polylog monotone in xi and in -k; Li_k(1) decreasing toward 1
  {
    bool ok = true;
    for (double xi : {0.1, 0.3, 0.5, 0.7, 0.9})
      ok = ok && polylog(2, xi) < polylog(2, xi + 0.05) &&
           polylog(3, xi) < polylog(2, xi);
    ok = ok && zeta_odd(3) > zeta_odd(5) && zeta_odd(5) > zeta_odd(7) &&
         zeta_odd(7) > 1.0;
    add(out, "polylog_monotonicity", ok);
  }
}

void eir_checks(std::vector<Check>& out) {
  {
    bool ok = true;
    for (int ell = 0; ell <= 50; ++ell) {
      const auto c = casimirs(1, ell, ell + 1);
      if (c[0] != Rational(2 * ell * (ell + 3)) || c[1] != 0 || c[2] != 0)
        ok = false;
    }
    add(out, "symmetric_tensor_casimirs_vanish", ok);
  }
  {
    bool ok = true;
    for (int nu = 1; nu <= 4; ++nu)
      for (int ell = 0; ell <= 4; ++ell)
        for (int n = 1; n <= 2 * ell + 1; ++n) {
          const Sextuplet s = sextuplet(nu, ell, n);
          for (const EIRTriple& chi :
               {s.chi_minus_nu, s.chi_zero, s.chi_n}) {
            if (dual(dual(chi)) != chi) ok = false;
            if (twist(chi) + twist(dual(chi)) !=
                Rational(4) - 2 * (chi.j1 + chi.j2))
              ok = false;
          }
          if (s.chi_minus_nu_dual != dual(s.chi_minus_nu)) ok = false;
          if (s.intertwiner_orders[2] != 2 * ell + 2 - n) ok = false;
        }
    add(out, "sextuplet_duality_structure", ok);
  }
}

void oracle_checks(std::vector<Check>& out, int L_max, std::int64_t mc_samples,
                   std::uint64_t seed, int workers) {
  // quadrature agreement with the exact sector values
  {
    double worst = 0.0;
    for (int L = 2; L <= std::min(L_max, 3); ++L)
      enumerate_permutations(L, [&](const Permutation& sigma) {
        const double exact =
            2.0 * zeta_odd(2 * L - 1) / static_cast<double>(n_of(sigma));
        const double quad = quad_sector_integral(sigma, 1e-9);
        worst = std::max(worst, std::abs(quad - exact) / exact);
        return true;
      });
    add(out, "quad_oracle_agreement_L2_L3", worst <= 1e-7,
        "max rel dev " + fmt(worst));
  }
  if (L_max >= 4) {
    double worst = 0.0;
    for (const auto& entries :
         {std::vector<int>{2, 3, 1, 4}, {1, 3, 2, 4}, {2, 4, 1, 3}}) {
      const Permutation sigma(entries);
      const double exact =
          2.0 * zeta_odd(7) / static_cast<double>(n_of(sigma));
      const double quad = quad_sector_integral(sigma, 1e-8);
      worst = std::max(worst, std::abs(quad - exact) / exact);
    }
    add(out, "quad_oracle_agreement_L4", worst <= 1e-6,
        "max rel dev " + fmt(worst));
  }
  // kernel truncation: monotone in M, bounded by the closed form
  {
    bool ok = true;
    const std::vector<double> radii = {0.8, 0.5, 0.3};
    double prev = 0.0;
    const double closed = radial_kernel_closed(radii);
    for (int M : {1, 2, 4, 8, 16, 64, 256}) {
      const double v = radial_kernel(radii, M);
      if (v < prev || v > closed * (1.0 + 1e-12)) ok = false;
      prev = v;
    }
    add(out, "kernel_truncation_monotone", ok,
        "closed form " + fmt(closed));
  }
  // series route to the residues
  {
    double worst = 0.0;
    for (int L : {2, 3}) {
      const double series = pl_series_residue(L, 200000);
      const double exact = wheel_residue(L + 1, false).numeric;
      worst = std::max(worst, std::abs(series - exact) / exact);
    }
    add(out, "series_route_matches_residues", worst <= 1e-6,
        "max rel dev " + fmt(worst));
  }
  // seeded Monte Carlo for the three-spoke residue
  {
    const McEstimate est = mc_full_residue(mc_samples, seed, workers);
    const McEstimate repeat = mc_full_residue(mc_samples, seed, workers);
    const double expected = wheel_residue(3, false).numeric;
    const bool deterministic = est.value == repeat.value &&
                               est.stderr_value == repeat.stderr_value;
    const bool close = std::abs(est.value - expected) <= 4.0 * est.stderr_value;
    add(out, "mc_residue_within_4_sigma", deterministic && close,
        "estimate " + fmt(est.value) + " +- " + fmt(est.stderr_value) +
            " vs " + fmt(expected));
  }
}

}  // namespace

std::vector<Check> verify_fast(int L_max, int workers) {
  if (L_max < kMinL || L_max > kDefaultSweepMax)
    throw UsageError("verify: L_max must be in [" + std::to_string(kMinL) +
                     ", " + std::to_string(kDefaultSweepMax) + "]");
  std::vector<Check> out;
  exact_sector_checks(out, L_max, workers);
  special_function_checks(out);
  eir_checks(out);
  return out;
}

std::vector<Check> verify_full(int L_max, std::int64_t mc_samples,
                               std::uint64_t seed, int workers) {
  std::vector<Check> out = verify_fast(L_max, workers);
  oracle_checks(out, L_max, mc_samples, seed, workers);
  return out;
}

}  // namespace wheelzeta
