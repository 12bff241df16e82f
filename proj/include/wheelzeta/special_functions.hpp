#pragma once

#include <cstdint>

#include "wheelzeta/bigint.hpp"

namespace wheelzeta {

/// Accuracy contract for series evaluations.
struct PrecisionBudget {
  double rel_tol = 1e-12;
  std::int64_t max_terms = 10'000'000;
};

/// Gegenbauer polynomial C_m^lambda(x) by the three-term recurrence;
/// C_0 = 1, C_1 = 2 lambda x. At lambda = 1 these are the Chebyshev-U
/// polynomials: C_m^1(cos t) = sin((m+1)t)/sin t.
double gegenbauer(int m, double lambda, double x);

/// Li_k(xi) = sum_{n>=1} xi^n / n^k by direct summation with a rigorous tail
/// bound (xi^{M+1}/((1-xi)(M+1)^k) for xi < 1, M^{1-k}/(k-1) at xi = 1).
/// Requires k >= 1 and 0 <= xi <= 1, with k >= 2 when xi = 1.
/// Throws DomainError for Li_1(1) and PrecisionError when the budget cannot
/// reach rel_tol.
double polylog(int k, double xi, const PrecisionBudget& budget = {});

/// zeta(k) = Li_k(1); requires k >= 2 (named for the odd arguments the
/// residues need, even ones work too).
double zeta_odd(int k, const PrecisionBudget& budget = {});

/// Exact binomial coefficient, 0 <= b <= a.
BigCount binomial(long long a, long long b);

/// Li_1, Li_2, Li_3 on [0, 1] evaluated through closed/reflection formulas
/// (accurate for arguments arbitrarily close to 1, where the direct series
/// stalls). Used by the quadrature kernel; unit-tested against polylog().
double li1(double x);
double li2(double x);
double li3(double x);

}  // namespace wheelzeta
