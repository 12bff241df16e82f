#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wheelzeta/bigint.hpp"

namespace wheelzeta {

inline constexpr int kMinL = 2;

/// Exact arithmetic stays overflow-free in the fast (uint64) paths up to here.
inline constexpr int kHardMaxL = 20;

/// Default cap for full sweeps over S_L (L! sectors; 10! = 3 628 800).
inline constexpr int kDefaultSweepMax = 10;

/// An ordering of the L non-reference rim radii: entry at position t (1-based)
/// names the vertex whose radius is the t-th largest. The reference vertex 0
/// carries r_0 = 1 and ranks above all of them.
class Permutation {
 public:
  /// Validates that `entries` is a bijection on {1,..,L} with L >= 2.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int L);

  int size() const { return static_cast<int>(entries_.size()); }

  /// Value at 0-based position `pos`; values are 1-based vertex labels.
  int entry(int pos) const { return entries_[static_cast<std::size_t>(pos)]; }

  const std::vector<int>& entries() const { return entries_; }
  std::span<const int> span() const { return entries_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

std::uint64_t factorial_u64(int L);

/// Visit all L! permutations in lexicographic order. The visitor returns
/// false to stop early. Throws UsageError unless kMinL <= L <= max_L.
void enumerate_permutations(int L,
                            const std::function<bool(const Permutation&)>& visit,
                            int max_L = kHardMaxL);

/// Permutation with lexicographic index `rank` in [0, L!) (Lehmer decoding);
/// used to split sweeps into contiguous blocks.
Permutation unrank_permutation(int L, std::uint64_t rank);

/// True iff positions p < q < r exist with sigma_r < sigma_p < sigma_q
/// (the one forbidden configuration; avoiding permutations are counted by
/// the Catalan numbers).
bool contains_forbidden_pattern(const Permutation& sigma);
bool contains_forbidden_pattern(std::span<const int> entries);

/// Exact Catalan number C_L = binom(2L, L) / (L + 1), L >= 0.
BigCount catalan(int L);

/// Entry-wise k -> L+1-k; an involution on S_L.
Permutation reflect(const Permutation& sigma);

/// The 2^(L-1) permutations built recursively from both orderings of S_2 by
/// relabeling (1..L-1) to (2..L), prepending 1, and closing under reflect.
/// Returned sorted lexicographically. Throws InternalError if the recursion
/// ever produces a duplicate (it must not, by the doubling count).
std::vector<Permutation> s1_generate(int L);

/// Documented representative of the sub-maximal sector class: even values
/// ascending, then odd values ascending. Requires L >= 4.
Permutation min_class_representative(int L);

}  // namespace wheelzeta
