#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "wheelzeta/combinatorics.hpp"

namespace wheelzeta {

/// Tanh-sinh quadrature of f over [a, b]; robust to integrable endpoint
/// singularities. Shared by the sector oracle and the orthogonality checks.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double rel_tol = 1e-10);

/// Truncated angular-reduced kernel at fixed radii (rim cycle 0-1-..-L-0,
/// r_0 = 1), as a density against plain Lebesgue measure dr_1...dr_L:
///
///   2^(L+1) (prod_k r_k) (prod_edges R_ij^-2) sum_{m=1}^{M} m^(1-L) xi^(m-1),
///   xi = prod_edges (r_ij / R_ij),  r_ij = min, R_ij = max.
///
/// Monotone increasing in M. Requires radii in (0, 1] and M >= 1.
double radial_kernel(std::span<const double> radii, int M);

/// Same kernel with the m-sum carried to infinity: the sum is
/// Li_{L-1}(xi)/xi. Supports L = 2..4 (all the quadrature oracle needs).
double radial_kernel_closed(std::span<const double> radii);

/// Nested tanh-sinh quadrature of the kernel over the simplex sector
/// 1 >= r_{sigma_1} >= ... >= r_{sigma_L} >= 0; estimates I_sigma, which the
/// callers compare with 2 zeta(2L-1)/n_sigma. terms = 0 uses the closed
/// kernel; terms > 0 uses the truncated one. Supports L <= 4.
/// Throws PrecisionError if the requested tolerance cannot be certified.
double quad_sector_integral(const Permutation& sigma, double rel_tol = 1e-9,
                            int terms = 0);

struct McEstimate {
  double value = 0.0;
  double stderr_value = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Position-space Monte Carlo for the three-spoke residue: importance-mixture
/// sampling over two unit balls with channels on each integrable singular
/// manifold (x_i -> 0, x_i -> x_0, x_1 -> x_2). Counter-style RNG keyed by
/// (seed, sample index): bit-identical results for identical (seed, samples),
/// independent of worker count. Requires samples >= 1e5.
McEstimate mc_full_residue(std::int64_t samples, std::uint64_t seed,
                           int workers = 0);

/// Coefficient of the chain-propagator expansion:
/// C_{n,L}(r) = n^(-2L) sum_{k=0}^{L} binom(2L-k, L) (ln r^-2n)^k / k!.
/// Requires n >= 1, L >= 1, r in (0, 1].
double broadhurst_coeff(int n, int L, double r);

/// Independent series route to the wheel residue:
/// 2 pi^(2(L+1)) sum_{n<=terms} n C_{n,L}(1). Requires L >= 2, terms >= 1.
double pl_series_residue(int L, std::int64_t terms);

}  // namespace wheelzeta
