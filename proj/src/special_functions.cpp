#include "wheelzeta/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wheelzeta/errors.hpp"

namespace wheelzeta {

namespace {

constexpr double kZeta2 = 1.6449340668482264;   // pi^2/6
constexpr double kZeta3 = 1.2020569031595943;

void check_budget(const PrecisionBudget& b) {
  if (!(b.rel_tol > 0.0)) throw UsageError("rel_tol must be positive");
  if (b.max_terms < 10) throw UsageError("max_terms must be >= 10");
}

// Smallest M with xi^(M+1) / ((1-xi) (M+1)^k) <= target (absolute).
std::int64_t terms_for_tail(int k, double xi, double target,
                            std::int64_t cap) {
  const auto bound = [&](std::int64_t M) {
    return std::exp(static_cast<double>(M + 1) * std::log(xi) -
                    k * std::log(static_cast<double>(M + 1))) /
           (1.0 - xi);
  };
  std::int64_t lo = 1, hi = 1;
  while (bound(hi) > target) {
    hi *= 2;
    if (hi >= cap) return cap + 1;
  }
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (bound(mid) <= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

double gegenbauer(int m, double lambda, double x) {
  if (m < 0) throw UsageError("gegenbauer: m must be >= 0");
  if (!(lambda > 0.0)) throw UsageError("gegenbauer: lambda must be positive");
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * lambda * x;
  for (int j = 2; j <= m; ++j) {
    const double next =
        (2.0 * x * (j + lambda - 1.0) * cur - (j + 2.0 * lambda - 2.0) * prev) / j;
    prev = cur;
    cur = next;
  }
  return cur;
}

double polylog(int k, double xi, const PrecisionBudget& budget) {
  check_budget(budget);
  if (k < 1) throw UsageError("polylog: k must be >= 1");
  if (xi < 0.0 || xi > 1.0) throw UsageError("polylog: xi must be in [0, 1]");
  if (xi == 0.0) return 0.0;
  if (xi == 1.0) {
    if (k == 1) throw DomainError("Li_1(1) diverges");
    // tail <= M^(1-k)/(k-1); result >= 1, so an absolute target suffices
    const double M_real =
        std::pow((k - 1) * budget.rel_tol, -1.0 / (k - 1));
    const auto M = static_cast<std::int64_t>(M_real) + 1;
    if (M > budget.max_terms)
      throw PrecisionError("polylog: " + std::to_string(M) +
                           " terms needed, budget is " +
                           std::to_string(budget.max_terms));
    double sum = 0.0;
    for (std::int64_t m = M; m >= 1; --m)  // ascending terms: sum small-first
      sum += std::pow(static_cast<double>(m), -k);
    return sum;
  }
  // xi in (0, 1): the sum is at least its first term xi
  const std::int64_t M =
      terms_for_tail(k, xi, budget.rel_tol * xi, budget.max_terms);
  if (M > budget.max_terms)
    throw PrecisionError("polylog: term budget exhausted at xi = " +
                         std::to_string(xi));
  double sum = 0.0;
  for (std::int64_t m = M; m >= 1; --m)
    sum = sum + std::pow(xi, static_cast<double>(m)) /
                    std::pow(static_cast<double>(m), k);
  return sum;
}

double zeta_odd(int k, const PrecisionBudget& budget) {
  if (k <= 1) throw DomainError("zeta diverges for k <= 1");
  return polylog(k, 1.0, budget);
}

BigCount binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) throw UsageError("binomial: need 0 <= b <= a");
  b = std::min(b, a - b);
  BigCount num = 1, den = 1;
  for (long long i = 1; i <= b; ++i) {
    num *= (a - b + i);
    den *= i;
  }
  return num / den;
}

double li1(double x) {
  if (x < 0.0 || x > 1.0) throw UsageError("li1: x must be in [0, 1]");
  if (x == 1.0) throw DomainError("Li_1(1) diverges");
  return -std::log1p(-x);
}

namespace {

// Direct series, only called with x <= 0.5 (geometric convergence).
double li_series(int k, double x) {
  double sum = 0.0;
  double p = x;
  for (int m = 1; m <= 64; ++m) {
    const double term = p / std::pow(static_cast<double>(m), k);
    sum += term;
    if (term < 1e-18 * sum) break;
    p *= x;
  }
  return sum;
}

}  // namespace

double li2(double x) {
  if (x < 0.0 || x > 1.0) throw UsageError("li2: x must be in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kZeta2;
  if (x <= 0.5) return li_series(2, x);
  // Li_2(x) + Li_2(1-x) = pi^2/6 - ln x ln(1-x)
  return kZeta2 - std::log(x) * std::log1p(-x) - li_series(2, 1.0 - x);
}

double li3(double x) {
  if (x < 0.0 || x > 1.0) throw UsageError("li3: x must be in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kZeta3;
  if (x <= 0.5) return li_series(3, x);
  // ln-expansion about x = 1 with w = -ln x (w <= ln 2):
  // Li_3(e^-w) = z3 - z2 w + w^2/2 (3/2 - ln w) + sum_{j>=3} zeta(3-j)(-w)^j/j!
  const double w = -std::log(x);
  double sum = kZeta3 - kZeta2 * w + 0.5 * w * w * (1.5 - std::log(w));
  // zeta(3-j) for j = 3..13; odd negative arguments vanish
  static constexpr double zeta_neg[] = {
      -0.5,           // zeta(0),   j=3
      -1.0 / 12.0,    // zeta(-1),  j=4
      0.0,            // zeta(-2),  j=5
      1.0 / 120.0,    // zeta(-3),  j=6
      0.0,            // j=7
      -1.0 / 252.0,   // zeta(-5),  j=8
      0.0,            // j=9
      1.0 / 240.0,    // zeta(-7),  j=10
      0.0,            // j=11
      -1.0 / 132.0,   // zeta(-9),  j=12
      0.0,            // j=13
  };
  double pw = -w * w * w;  // (-w)^3
  double factorial = 6.0;  // 3!
  for (int j = 3; j <= 13; ++j) {
    sum += zeta_neg[j - 3] * pw / factorial;
    pw *= -w;
    factorial *= (j + 1);
  }
  return sum;
}

}  // namespace wheelzeta
