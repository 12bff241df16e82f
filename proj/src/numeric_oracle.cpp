#include "wheelzeta/numeric_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wheelzeta/errors.hpp"
#include "wheelzeta/parallel.hpp"
#include "wheelzeta/special_functions.hpp"

namespace wheelzeta {

namespace {

constexpr double kPi = std::numbers::pi;

// ---- kernel -------------------------------------------------------------

// Edge ratio product xi and prefactor prod R_ij^-2 for the rim cycle
// 0-1-...-L-0 with r_0 = 1; radii are indexed by vertex (1-based -> [k-1]).
struct EdgeFactors {
  double xi = 1.0;
  double pref = 1.0;
};

EdgeFactors edge_factors(std::span<const double> radii) {
  const int L = static_cast<int>(radii.size());
  EdgeFactors ef;
  double prev = 1.0;  // r_0
  for (int k = 1; k <= L; ++k) {
    const double cur = radii[static_cast<std::size_t>(k) - 1];
    const double lo = std::min(prev, cur);
    const double hi = std::max(prev, cur);
    ef.xi *= lo / hi;
    ef.pref /= hi * hi;
    prev = cur;
  }
  // closing edge (L, 0)
  const double lo = std::min(prev, 1.0);
  const double hi = std::max(prev, 1.0);
  ef.xi *= lo / hi;
  ef.pref /= hi * hi;
  return ef;
}

void check_radii(std::span<const double> radii) {
  if (radii.size() < 2) throw UsageError("kernel needs at least two radii");
  for (double r : radii)
    if (!(r > 0.0) || r > 1.0)
      throw DomainError("radii must lie in (0, 1]");
}

double kernel_prefactor(std::span<const double> radii, const EdgeFactors& ef) {
  double p = ef.pref;
  for (double r : radii) p *= r;
  const int L = static_cast<int>(radii.size());
  return std::ldexp(p, L + 1);  // 2^(L+1)
}

// sum_{m=1}^{M} m^(1-L) xi^(m-1)
double kernel_sum_truncated(int L, double xi, int M) {
  double sum = 0.0;
  double p = 1.0;
  for (int m = 1; m <= M; ++m) {
    sum += p / std::pow(static_cast<double>(m), L - 1);
    p *= xi;
    if (p < 1e-18 * sum * (1.0 - xi)) break;  // remaining tail negligible
  }
  return sum;
}

// M -> infinity limit: Li_{L-1}(xi)/xi, with the L = 2..4 closed evaluations.
double kernel_sum_closed(int L, double xi) {
  if (xi <= 0.0) return 1.0;  // only the m=1 term survives
  switch (L) {
    case 2: return li1(xi) / xi;
    case 3: return li2(xi) / xi;
    case 4: return li3(xi) / xi;
    default:
      throw UsageError("closed kernel supports L = 2..4");
  }
}

// ---- tanh-sinh nested quadrature ----------------------------------------

constexpr double kTCut = 3.6;

template <class F>
double tanh_sinh(const F& f, double b, double rel_tol, int max_level = 8,
                 bool* converged = nullptr) {
  if (converged) *converged = true;
  if (!(b > 0.0)) return 0.0;
  const auto node = [&](double t, double& x, double& w) -> bool {
    const double u = 0.5 * kPi * std::sinh(t);
    const double m = 1.0 / (1.0 + std::exp(2.0 * std::abs(u)));
    if (m < 1e-17) return false;  // x would round onto an endpoint
    const double sig = (u >= 0.0) ? 1.0 - m : m;
    x = b * sig;
    w = b * kPi * std::cosh(t) * sig * (1.0 - sig);
    return x > 0.0 && x < b;
  };
  double h = 1.0;
  double sum = 0.0;
  {
    double x, w;
    if (node(0.0, x, w)) sum = w * f(x);
    for (int j = 1; j * h <= kTCut; ++j)
      for (double s : {+1.0, -1.0}) {
        if (node(s * j * h, x, w)) sum += w * f(x);
      }
  }
  double prev = h * sum;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0.0;
    double x, w;
    for (int j = 1; j * h <= kTCut; j += 2)
      for (double s : {+1.0, -1.0}) {
        if (node(s * j * h, x, w)) add += w * f(x);
      }
    sum += add;
    const double cur = h * sum;
    if (level >= 3 &&
        std::abs(cur - prev) <= rel_tol * std::abs(cur) + 1e-300)
      return cur;
    prev = cur;
  }
  if (converged) *converged = false;
  return prev;
}

struct SectorQuad {
  int L = 0;
  int terms = 0;  // 0 = closed kernel
  double level_rtol = 1e-10;
  std::array<int, 8> vertex_at{};  // sector position -> vertex-1

  double kernel(const std::array<double, 8>& sect) const {
    std::array<double, 8> by_vertex{};
    for (int t = 0; t < L; ++t)
      by_vertex[static_cast<std::size_t>(vertex_at[static_cast<std::size_t>(t)])] =
          sect[static_cast<std::size_t>(t)];
    const std::span<const double> radii(by_vertex.data(),
                                        static_cast<std::size_t>(L));
    const EdgeFactors ef = edge_factors(radii);
    const double s = terms > 0 ? kernel_sum_truncated(L, ef.xi, terms)
                               : kernel_sum_closed(L, ef.xi);
    return kernel_prefactor(radii, ef) * s;
  }

  double level(int t, double upper, std::array<double, 8>& sect) const {
    const auto f = [&](double x) {
      sect[static_cast<std::size_t>(t)] = x;
      return (t + 1 == L) ? kernel(sect) : level(t + 1, x, sect);
    };
    if (t > 0) return tanh_sinh(f, upper, level_rtol);
    // the outermost level certifies its own refinement sequence
    bool converged = false;
    const double value = tanh_sinh(f, upper, level_rtol, 8, &converged);
    if (!converged)
      throw PrecisionError("quad_sector_integral: refinement budget "
                           "exhausted before the tolerance was met");
    return value;
  }
};

// ---- Monte Carlo ---------------------------------------------------------

// SplitMix64 stream; keyed per sample so results are independent of how the
// index range is partitioned across workers.
struct Stream {
  std::uint64_t state;
  explicit Stream(std::uint64_t seed, std::uint64_t index)
      : state(seed ^ (0x9E3779B97F4A7C15ULL * (index + 0x632BE59BD9B4E019ULL))) {
    next();  // decorrelate nearby indices
  }
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double unit() {  // (0, 1]
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }
};

using Vec4 = std::array<double, 4>;

inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}
inline double sq(const Vec4& a) { return dot(a, a); }
inline Vec4 sub(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Vec4 sphere_point(Stream& rng) {
  Vec4 g;
  for (int i = 0; i < 4; i += 2) {
    const double u1 = rng.unit();
    const double u2 = rng.unit();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    g[static_cast<std::size_t>(i)] = rad * std::cos(2.0 * kPi * u2);
    g[static_cast<std::size_t>(i) + 1] = rad * std::sin(2.0 * kPi * u2);
  }
  const double norm = std::sqrt(sq(g));
  for (auto& c : g) c /= norm;
  return g;
}

Vec4 ball_point(Stream& rng) {
  Vec4 w = sphere_point(rng);
  const double rho = std::pow(rng.unit(), 0.25);
  for (auto& c : w) c *= rho;
  return w;
}

constexpr double kBallVolume = kPi * kPi / 2.0;  // unit ball in 4D
constexpr double kWideRadius = 2.0;              // covers the unit ball

// density 1/(pi^2 S^2 |y-c|^2) on the ball |y-c| <= S around c
Vec4 offset_point(Stream& rng, const Vec4& c, double S) {
  Vec4 w = sphere_point(rng);
  const double s = S * std::sqrt(rng.unit());
  return {c[0] + s * w[0], c[1] + s * w[1], c[2] + s * w[2], c[3] + s * w[3]};
}

double offset_density(const Vec4& y, const Vec4& c, double S) {
  const double d2 = sq(sub(y, c));
  if (S <= 0.0 || d2 >= S * S || d2 == 0.0) return 0.0;
  return 1.0 / (kPi * kPi * S * S * d2);
}

// Mixture channels. Singles cover the five singular manifolds; the pair and
// two-scale hierarchical ones kill the heavy tails where several factors blow
// up together (both points near 0, both near x0, or near each other there) --
// without them the squared weight is not integrable and the error bars lie.
constexpr int kChannels = 14;

struct McBlockSums {
  double w = 0.0;
  double w2 = 0.0;
};

McBlockSums mc_block(std::uint64_t seed, std::int64_t begin, std::int64_t end) {
  const Vec4 origin{0.0, 0.0, 0.0, 0.0};
  const Vec4 e{1.0, 0.0, 0.0, 0.0};
  double sw = 0.0, cw = 0.0;    // Kahan accumulators
  double sw2 = 0.0, cw2 = 0.0;
  for (std::int64_t i = begin; i < end; ++i) {
    Stream rng(seed, static_cast<std::uint64_t>(i));
    const int channel = static_cast<int>(rng.next() % kChannels);
    Vec4 x1, x2;
    switch (channel) {
      case 0: x1 = ball_point(rng); x2 = ball_point(rng); break;
      case 1: x1 = offset_point(rng, origin, kWideRadius); x2 = ball_point(rng); break;
      case 2: x1 = offset_point(rng, e, kWideRadius); x2 = ball_point(rng); break;
      case 3: x1 = ball_point(rng); x2 = offset_point(rng, origin, kWideRadius); break;
      case 4: x1 = ball_point(rng); x2 = offset_point(rng, e, kWideRadius); break;
      case 5: x1 = ball_point(rng); x2 = offset_point(rng, x1, kWideRadius); break;
      case 6:
        x1 = offset_point(rng, origin, kWideRadius);
        x2 = offset_point(rng, x1, 2.0 * std::sqrt(sq(x1)));
        break;
      case 7:
        x1 = offset_point(rng, e, kWideRadius);
        x2 = offset_point(rng, x1, 2.0 * std::sqrt(sq(sub(x1, e))));
        break;
      case 8:
        x1 = offset_point(rng, origin, kWideRadius);
        x2 = offset_point(rng, e, kWideRadius);
        break;
      case 9:
        x1 = offset_point(rng, e, kWideRadius);
        x2 = offset_point(rng, origin, kWideRadius);
        break;
      case 10:
        x1 = offset_point(rng, origin, kWideRadius);
        x2 = offset_point(rng, origin, 2.0 * std::sqrt(sq(x1)));
        break;
      case 11:
        x2 = offset_point(rng, origin, kWideRadius);
        x1 = offset_point(rng, origin, 2.0 * std::sqrt(sq(x2)));
        break;
      case 12:
        x1 = offset_point(rng, e, kWideRadius);
        x2 = offset_point(rng, e, 2.0 * std::sqrt(sq(sub(x1, e))));
        break;
      default:
        x2 = offset_point(rng, e, kWideRadius);
        x1 = offset_point(rng, e, 2.0 * std::sqrt(sq(sub(x2, e))));
        break;
    }
    const double r1sq = sq(x1);
    const double r2sq = sq(x2);
    double weight = 0.0;
    if (r1sq < 1.0 && r2sq < 1.0 && r1sq > 0.0 && r2sq > 0.0) {
      const double d01 = sq(sub(e, x1));
      const double d12 = sq(sub(x1, x2));
      const double d20 = sq(sub(x2, e));
      const double f = 1.0 / (r1sq * r2sq * d01 * d12 * d20);
      const double u = 1.0 / kBallVolume;  // both points are inside the ball
      const double a = std::sqrt(r1sq), b = std::sqrt(r2sq);
      const double ap = std::sqrt(d01), bp = std::sqrt(d20);
      const double q1_0 = offset_density(x1, origin, kWideRadius);
      const double q1_e = offset_density(x1, e, kWideRadius);
      const double q2_0 = offset_density(x2, origin, kWideRadius);
      const double q2_e = offset_density(x2, e, kWideRadius);
      const double p =
          (u * u + q1_0 * u + q1_e * u + u * q2_0 + u * q2_e +
           u * offset_density(x2, x1, kWideRadius) +
           q1_0 * offset_density(x2, x1, 2.0 * a) +
           q1_e * offset_density(x2, x1, 2.0 * ap) +
           q1_0 * q2_e + q1_e * q2_0 +
           q1_0 * offset_density(x2, origin, 2.0 * a) +
           q2_0 * offset_density(x1, origin, 2.0 * b) +
           q1_e * offset_density(x2, e, 2.0 * ap) +
           q2_e * offset_density(x1, e, 2.0 * bp)) /
          kChannels;
      weight = f / p;
    }
    double y = weight - cw;
    double t = sw + y;
    cw = (t - sw) - y;
    sw = t;
    y = weight * weight - cw2;
    t = sw2 + y;
    cw2 = (t - sw2) - y;
    sw2 = t;
  }
  return {sw, sw2};
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double rel_tol) {
  if (!(b > a)) throw UsageError("integrate_1d: need b > a");
  return tanh_sinh([&](double x) { return f(a + x); }, b - a, rel_tol);
}

double radial_kernel(std::span<const double> radii, int M) {
  check_radii(radii);
  if (M < 1) throw UsageError("radial_kernel: M must be >= 1");
  const int L = static_cast<int>(radii.size());
  const EdgeFactors ef = edge_factors(radii);
  return kernel_prefactor(radii, ef) * kernel_sum_truncated(L, ef.xi, M);
}

double radial_kernel_closed(std::span<const double> radii) {
  check_radii(radii);
  const int L = static_cast<int>(radii.size());
  const EdgeFactors ef = edge_factors(radii);
  return kernel_prefactor(radii, ef) * kernel_sum_closed(L, ef.xi);
}

double quad_sector_integral(const Permutation& sigma, double rel_tol,
                            int terms) {
  const int L = sigma.size();
  if (L > 4)
    throw UsageError("quad_sector_integral supports L <= 4 (cost grows "
                     "exponentially with depth)");
  if (!(rel_tol > 0.0)) throw UsageError("rel_tol must be positive");
  SectorQuad q;
  q.L = L;
  q.terms = terms;
  q.level_rtol = std::max(rel_tol / (2.0 * (L + 1)), 5e-14);
  for (int t = 0; t < L; ++t)
    q.vertex_at[static_cast<std::size_t>(t)] = sigma.entry(t) - 1;
  std::array<double, 8> sect{};
  return q.level(0, 1.0, sect);
}

McEstimate mc_full_residue(std::int64_t samples, std::uint64_t seed,
                           int workers) {
  if (samples < 100'000)
    throw UsageError("mc_full_residue: need at least 1e5 samples");
  constexpr std::int64_t kBlock = 1 << 16;
  const std::int64_t nblocks = (samples + kBlock - 1) / kBlock;
  std::vector<McBlockSums> partial(static_cast<std::size_t>(nblocks));
  run_blocks(nblocks, resolve_workers(workers), [&](std::int64_t b) {
    const std::int64_t begin = b * kBlock;
    const std::int64_t end = std::min(samples, begin + kBlock);
    partial[static_cast<std::size_t>(b)] = mc_block(seed, begin, end);
  });
  double sw = 0.0, sw2 = 0.0;
  for (const auto& p : partial) {  // fixed merge order
    sw += p.w;
    sw2 += p.w2;
  }
  const double n = static_cast<double>(samples);
  const double mean = sw / n;
  const double var = std::max(0.0, (sw2 - n * mean * mean) / (n - 1.0));
  const double scale = 3.0 * 2.0 * kPi * kPi;  // n_spokes * |S^3|
  McEstimate est;
  est.value = scale * mean;
  est.stderr_value = scale * std::sqrt(var / n);
  est.samples = samples;
  est.seed = seed;
  return est;
}

double broadhurst_coeff(int n, int L, double r) {
  if (n < 1 || L < 1) throw UsageError("broadhurst_coeff: need n, L >= 1");
  if (!(r > 0.0) || r > 1.0)
    throw DomainError("broadhurst_coeff: r must be in (0, 1]");
  const double t = -2.0 * n * std::log(r);  // ln r^(-2n)
  double sum = 0.0;
  double tk = 1.0;  // t^k / k!
  for (int k = 0; k <= L; ++k) {
    sum += to_double(binomial(2 * L - k, L)) * tk;
    tk *= t / (k + 1);
  }
  return sum / std::pow(static_cast<double>(n), 2 * L);
}

double pl_series_residue(int L, std::int64_t terms) {
  if (L < 2) throw UsageError("pl_series_residue: L must be >= 2");
  if (terms < 1) throw UsageError("pl_series_residue: terms must be >= 1");
  // at r = 1 only the k = 0 term of each coefficient survives
  const double lead = to_double(binomial(2 * L, L));
  double sum = 0.0;
  for (std::int64_t n = terms; n >= 1; --n)  // small terms first
    sum += lead * std::pow(static_cast<double>(n), 1.0 - 2.0 * L);
  return 2.0 * std::pow(kPi, 2 * (L + 1)) * sum;
}

}  // namespace wheelzeta
