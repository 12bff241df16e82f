#pragma once

#include <cstdint>
#include <vector>

#include "wheelzeta/report.hpp"

namespace wheelzeta {

/// Exact invariant suite: sector anchors, Catalan decomposition,
/// divisibility, avoider correspondence, closed forms, S_L^(1), reflection
/// symmetry, extremal-class claims, special-function identities, Casimir
/// identities. Runs in seconds for L_max <= 8.
std::vector<Check> verify_fast(int L_max, int workers = 0);

/// Fast suite plus the numeric oracles: quadrature agreement at L = 2, 3
/// (and a few sectors at L = 4), kernel monotonicity, the coefficient-series
/// route, and a seeded Monte Carlo run.
std::vector<Check> verify_full(int L_max, std::int64_t mc_samples,
                               std::uint64_t seed, int workers = 0);

}  // namespace wheelzeta
