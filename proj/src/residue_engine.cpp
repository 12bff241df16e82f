#include "wheelzeta/residue_engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "wheelzeta/errors.hpp"
#include "wheelzeta/parallel.hpp"
#include "wheelzeta/special_functions.hpp"

namespace wheelzeta {

namespace {

// rank[v] = position of vertex v in the ordering (0 = largest radius);
// rank[0] = -1 so the reference vertex outranks all rim vertices.
void fill_ranks(std::span<const int> entries, std::vector<int>& rank) {
  const int L = static_cast<int>(entries.size());
  rank.assign(static_cast<std::size_t>(L) + 1, 0);
  rank[0] = -1;
  for (int t = 0; t < L; ++t)
    rank[static_cast<std::size_t>(entries[static_cast<std::size_t>(t)])] = t;
}

// a_k for vertex k on the rim cycle 0-1-...-L-0: +1 for each neighbor with a
// larger radius (smaller rank), -1 for each with a smaller one.
inline int slope_of(const std::vector<int>& rank, int k, int L) {
  const int left = k - 1;
  const int right = (k == L) ? 0 : k + 1;
  const int rk = rank[static_cast<std::size_t>(k)];
  int a = 0;
  a += (rk > rank[static_cast<std::size_t>(left)]) ? 1 : -1;
  a += (rk > rank[static_cast<std::size_t>(right)]) ? 1 : -1;
  return a;
}

struct ClassBin {
  std::uint64_t count = 0;
  std::uint64_t avoiders = 0;
};

using ClassBins = std::map<std::uint64_t, ClassBin>;

// Sweep one contiguous lexicographic block [start, start+len) of S_L.
ClassBins sweep_block(int L, std::uint64_t start, std::uint64_t len) {
  ClassBins bins;
  std::vector<int> entries = unrank_permutation(L, start).entries();
  std::vector<int> rank;
  for (std::uint64_t i = 0; i < len; ++i) {
    fill_ranks(entries, rank);
    std::uint64_t n = 1;
    int acc = 0;
    for (int t = L - 1; t >= 0; --t) {
      acc += slope_of(rank, entries[static_cast<std::size_t>(t)], L);
      if (acc <= 0) throw InternalError("non-positive divisor in sweep");
      n *= static_cast<std::uint64_t>(acc / 2);
    }
    ClassBin& bin = bins[n];
    ++bin.count;
    if (!contains_forbidden_pattern(entries)) ++bin.avoiders;
    std::next_permutation(entries.begin(), entries.end());
  }
  return bins;
}

}  // namespace

std::vector<int> exponent_slopes(const Permutation& sigma) {
  const int L = sigma.size();
  std::vector<int> rank;
  fill_ranks(sigma.span(), rank);
  std::vector<int> slopes(static_cast<std::size_t>(L));
  for (int k = 1; k <= L; ++k)
    slopes[static_cast<std::size_t>(k) - 1] = slope_of(rank, k, L);
  return slopes;
}

SectorEvaluation evaluate_sector(const Permutation& sigma) {
  const int L = sigma.size();
  std::vector<int> slopes = exponent_slopes(sigma);
  std::vector<int> divisors;
  divisors.reserve(static_cast<std::size_t>(L));
  BigCount n = 1;
  int acc = 0;
  for (int t = L - 1; t >= 0; --t) {
    acc += slopes[static_cast<std::size_t>(sigma.entry(t)) - 1];
    if (acc <= 0 || acc % 2 != 0)
      throw InternalError("sector divisor must be even and positive");
    divisors.push_back(acc);
    n *= acc / 2;
  }
  if (divisors.back() != 2) throw InternalError("outermost divisor must be 2");
  return SectorEvaluation{sigma, std::move(slopes), std::move(divisors),
                          std::move(n)};
}

std::uint64_t sector_weight(std::span<const int> entries) {
  const int L = static_cast<int>(entries.size());
  std::vector<int> rank;
  fill_ranks(entries, rank);
  std::uint64_t n = 1;
  int acc = 0;
  for (int t = L - 1; t >= 0; --t) {
    acc += slope_of(rank, entries[static_cast<std::size_t>(t)], L);
    if (acc <= 0 || acc % 2 != 0)
      throw InternalError("sector divisor must be even and positive");
    n *= static_cast<std::uint64_t>(acc / 2);
  }
  return n;
}

ClassTable class_table(int L, int workers, int sweep_max) {
  if (sweep_max > kHardMaxL) sweep_max = kHardMaxL;
  if (L < kMinL || L > sweep_max)
    throw UsageError("class_table: L must be in [" + std::to_string(kMinL) +
                     ", " + std::to_string(sweep_max) + "], got " +
                     std::to_string(L));
  const std::uint64_t total = factorial_u64(L);
  const int nworkers = resolve_workers(workers);
  const std::uint64_t num_blocks =
      std::min<std::uint64_t>(total, std::max(1, nworkers * 8));
  const std::uint64_t block_len = (total + num_blocks - 1) / num_blocks;

  std::vector<ClassBins> partial(num_blocks);
  run_blocks(static_cast<std::int64_t>(num_blocks), nworkers,
             [&](std::int64_t b) {
               const std::uint64_t start = static_cast<std::uint64_t>(b) * block_len;
               if (start >= total) return;  // rounding can leave empty blocks
               const std::uint64_t len = std::min(block_len, total - start);
               partial[static_cast<std::size_t>(b)] = sweep_block(L, start, len);
             });

  ClassBins bins;
  for (const auto& p : partial)
    for (const auto& [n, bin] : p) {
      bins[n].count += bin.count;
      bins[n].avoiders += bin.avoiders;
    }

  ClassTable table;
  table.L = L;
  table.catalan_number = catalan(L);
  Rational sum = 0;
  std::uint64_t seen = 0;
  for (const auto& [n, bin] : bins) {
    ClassRow row;
    row.n_s = n;
    row.size = bin.count;
    if (bin.count % n != 0)
      throw InternalError("class size not divisible by its n_s");
    row.quotient = bin.count / n;
    row.avoiders = bin.avoiders;
    sum += Rational(bin.count, n);
    seen += bin.count;
    table.rows.push_back(std::move(row));
  }
  if (seen != total) throw InternalError("class sweep lost permutations");
  table.sum_check = (sum == Rational(table.catalan_number));
  return table;
}

std::optional<BigCount> closed_form_N(int L, std::uint64_t n_s) {
  if (L < kMinL) throw UsageError("closed_form_N: L must be >= 2");
  const auto plus = [](int x) { return Rational(std::max(x, 0)); };
  const auto pow2 = [](int e) {
    return e >= 0 ? Rational(BigCount(1) << e)
                  : Rational(1, BigCount(1) << -e);
  };
  Rational result;
  switch (n_s) {
    case 1:  result = pow2(L - 1); break;
    case 2:  result = pow2(L - 3) * plus(L - 2); break;
    case 4:  result = pow2(L - 6) * plus(L - 3) * (L + 4); break;
    case 8:
      result = pow2(L - 7) * plus(L - 4) *
               (Rational(L * (L + 13), 6) + 1);
      break;
    case 12: result = pow2(L - 5) * plus(L - 4); break;
    case 24: result = pow2(L - 7) * plus(L - 5) * (L + 2); break;
    case 36: result = pow2(L - 5) * plus(L - 5); break;
    default: return std::nullopt;
  }
  if (boost::multiprecision::denominator(result) != 1)
    throw InternalError("closed_form_N: non-integral value for n_s=" +
                        std::to_string(n_s));
  return BigCount(boost::multiprecision::numerator(result));
}

MinFraction min_fraction(int L) {
  if (L < 4) throw DomainError("min_fraction requires L >= 4");
  const int ell = L / 2;
  BigCount fact_ell = 1;
  for (int i = 2; i <= ell; ++i) fact_ell *= i;
  MinFraction out;
  if (L % 2 == 0) {
    out.n_max = fact_ell * fact_ell;
    out.multiplicity = 2 * out.n_max;
  } else {
    out.n_max = fact_ell * fact_ell * (ell + 1);
    out.multiplicity = out.n_max;
  }
  return out;
}

WheelResidue wheel_residue(int n, bool cross_check, int sweep_max, int workers) {
  if (n <= 2)
    throw DomainError("wheel residue needs n >= 3: n = " + std::to_string(n) +
                      " has a divergent zeta argument");
  WheelResidue res;
  res.spokes = n;
  res.coefficient = Rational(2 * binomial(2 * n - 2, n - 1));
  res.pi_power = 2 * n;
  res.zeta_argument = 2 * n - 3;
  res.numeric = to_double(res.coefficient) *
                std::pow(std::numbers::pi, res.pi_power) *
                zeta_odd(res.zeta_argument);
  const int L = n - 1;
  if (cross_check && L <= sweep_max && L <= kHardMaxL) {
    // res G_{L+1} = (L+1) pi^{2(L+1)} sum_sigma I_sigma with
    // I_sigma = 2 zeta(2L-1)/n_sigma, so the rational coefficient must equal
    // 2 (L+1) sum_sigma 1/n_sigma.
    const ClassTable table = class_table(L, workers, sweep_max);
    Rational sector_sum = 0;
    for (const auto& row : table.rows)
      sector_sum += Rational(row.size) / row.n_s;
    if (Rational(2 * (L + 1)) * sector_sum != res.coefficient)
      throw InternalError("sector-sum route disagrees with binomial formula");
  }
  return res;
}

}  // namespace wheelzeta
