#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wheelzeta/bigint.hpp"
#include "wheelzeta/combinatorics.hpp"

namespace wheelzeta {

/// Exact evaluation of one sector integral: I_sigma = 2 zeta(2L-1) / n_sigma.
///
/// slopes[k-1] is a_k = u_k - v_k, where u_k (v_k) counts the two rim edges
/// at vertex k on which r_k is the smaller (larger) endpoint; vertex 0 has
/// r_0 = 1 and outranks everything. divisors[t-1] is c_t, the sum of the
/// slopes over the t radially smallest vertices (innermost integration
/// first); every c_t is even and positive, c_L = 2, and
/// n_sigma = prod_t (c_t / 2).
struct SectorEvaluation {
  Permutation sigma;
  std::vector<int> slopes;
  std::vector<int> divisors;
  BigCount n_sigma;
};

/// (a_1, ..., a_L); each a_k is -2, 0 or +2, they sum to 2, and the radially
/// smallest vertex always carries +2.
std::vector<int> exponent_slopes(const Permutation& sigma);

/// Full audit trail for one sector. Throws InternalError if any divisor is
/// non-positive or odd (cannot happen for a valid permutation).
SectorEvaluation evaluate_sector(const Permutation& sigma);

/// n_sigma only, on raw entries; overflow-free for L <= kHardMaxL.
std::uint64_t sector_weight(std::span<const int> entries);

struct ClassRow {
  std::uint64_t n_s = 0;   // shared sector denominator
  BigCount size;           // |s|, number of permutations in the class
  BigCount quotient;       // N_L(n_s) = |s| / n_s
  BigCount avoiders;       // members with no forbidden pattern
};

/// Census of S_L grouped by n_sigma, rows sorted by n_s ascending.
/// sum_check records whether sum_sigma 1/n_sigma == C_L held exactly.
struct ClassTable {
  int L = 0;
  std::vector<ClassRow> rows;
  BigCount catalan_number;
  bool sum_check = false;
};

/// Full sweep over S_L (parallel over lexicographic blocks; the result is
/// independent of the worker count). Throws UsageError if L exceeds
/// sweep_max.
ClassTable class_table(int L, int workers = 0, int sweep_max = kDefaultSweepMax);

/// Published closed form for N_L(n_s) where one exists
/// (n_s in {1, 2, 4, 8, 12, 24, 36}); nullopt for the rest.
/// Throws InternalError on a non-integral result.
std::optional<BigCount> closed_form_N(int L, std::uint64_t n_s);

struct MinFraction {
  BigCount n_max;         // largest sector denominator in S_L
  BigCount multiplicity;  // size of that class
};

/// Claimed extremal class: (l!^2, 2 l!^2) for L = 2l and
/// (l!(l+1)!, l!(l+1)!) for L = 2l+1. Requires L >= 4.
MinFraction min_fraction(int L);

/// res G_n = coefficient * pi^pi_power * zeta(zeta_argument) with
/// coefficient = 2 binom(2n-2, n-1), pi_power = 2n, zeta_argument = 2n-3.
struct WheelResidue {
  int spokes = 0;
  Rational coefficient;
  int pi_power = 0;
  int zeta_argument = 0;
  double numeric = 0.0;
};

/// Requires n >= 3 (n = 2 hits zeta(1)). When cross_check is set and
/// L = n-1 <= sweep_max, the coefficient is re-derived from the sector sum
/// as 2 (L+1) sum_sigma 1/n_sigma and must agree exactly.
WheelResidue wheel_residue(int n, bool cross_check = true,
                           int sweep_max = kDefaultSweepMax, int workers = 0);

}  // namespace wheelzeta
