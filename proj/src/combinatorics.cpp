#include "wheelzeta/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "wheelzeta/errors.hpp"

namespace wheelzeta {

namespace {

void check_L_range(int L, int max_L) {
  if (L < kMinL || L > max_L)
    throw UsageError("L must be in [" + std::to_string(kMinL) + ", " +
                     std::to_string(max_L) + "], got " + std::to_string(L));
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int L = static_cast<int>(entries_.size());
  if (L < kMinL)
    throw UsageError("permutation needs at least " + std::to_string(kMinL) +
                     " entries, got " + std::to_string(L));
  std::vector<bool> seen(static_cast<std::size_t>(L) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > L || seen[static_cast<std::size_t>(v)])
      throw UsageError("entries must be a bijection on {1,..," +
                       std::to_string(L) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int L) {
  check_L_range(L, kHardMaxL);
  std::vector<int> e(static_cast<std::size_t>(L));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

std::uint64_t factorial_u64(int L) {
  if (L < 0 || L > kHardMaxL) throw UsageError("factorial_u64: L out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= L; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void enumerate_permutations(int L,
                            const std::function<bool(const Permutation&)>& visit,
                            int max_L) {
  check_L_range(L, std::min(max_L, kHardMaxL));
  std::vector<int> e(static_cast<std::size_t>(L));
  std::iota(e.begin(), e.end(), 1);
  do {
    if (!visit(Permutation(e))) return;
  } while (std::next_permutation(e.begin(), e.end()));
}

Permutation unrank_permutation(int L, std::uint64_t rank) {
  check_L_range(L, kHardMaxL);
  if (rank >= factorial_u64(L)) throw UsageError("permutation rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(L));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(L));
  std::uint64_t radix = factorial_u64(L);
  for (int t = L; t >= 1; --t) {
    radix /= static_cast<std::uint64_t>(t);
    const auto idx = static_cast<std::size_t>(rank / radix);
    rank %= radix;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(out));
}

bool contains_forbidden_pattern(std::span<const int> entries) {
  const int L = static_cast<int>(entries.size());
  // suffix_min[q] = smallest value strictly after position q
  std::vector<int> suffix_min(static_cast<std::size_t>(L), L + 1);
  for (int q = L - 2; q >= 0; --q)
    suffix_min[static_cast<std::size_t>(q)] =
        std::min(suffix_min[static_cast<std::size_t>(q) + 1], entries[static_cast<std::size_t>(q) + 1]);
  for (int q = 1; q + 1 < L; ++q) {
    int best_below = 0;  // largest earlier value smaller than entries[q]
    for (int p = 0; p < q; ++p)
      if (entries[static_cast<std::size_t>(p)] < entries[static_cast<std::size_t>(q)])
        best_below = std::max(best_below, entries[static_cast<std::size_t>(p)]);
    if (suffix_min[static_cast<std::size_t>(q)] < best_below) return true;
  }
  return false;
}

bool contains_forbidden_pattern(const Permutation& sigma) {
  return contains_forbidden_pattern(sigma.span());
}

BigCount catalan(int L) {
  if (L < 0) throw UsageError("catalan: L must be >= 0");
  BigCount num = 1;
  for (int i = 0; i < L; ++i) num *= (L + 1 + i);  // (L+2)...(2L) * (L+1)
  BigCount den = 1;
  for (int i = 2; i <= L; ++i) den *= i;
  // num = (L+1)(L+2)...(2L), so binom(2L,L)/(L+1) = num / (L+1)! = num/((L+1)*L!)
  BigCount c = num / (den * (L + 1));
  if (c * den * (L + 1) != num) throw InternalError("catalan: non-integral");
  return c;
}

Permutation reflect(const Permutation& sigma) {
  const int n = sigma.size() + 1;
  std::vector<int> out(static_cast<std::size_t>(sigma.size()));
  for (int i = 0; i < sigma.size(); ++i)
    out[static_cast<std::size_t>(i)] = n - sigma.entry(i);
  return Permutation(std::move(out));
}

std::vector<Permutation> s1_generate(int L) {
  check_L_range(L, kHardMaxL);
  std::set<std::vector<int>> cur = {{1, 2}, {2, 1}};
  for (int size = 3; size <= L; ++size) {
    std::set<std::vector<int>> next;
    for (const auto& s : cur) {
      std::vector<int> grown;
      grown.reserve(static_cast<std::size_t>(size));
      grown.push_back(1);
      for (int v : s) grown.push_back(v + 1);
      std::vector<int> mirrored(grown.size());
      for (std::size_t i = 0; i < grown.size(); ++i)
        mirrored[i] = size + 1 - grown[i];
      if (!next.insert(grown).second || !next.insert(mirrored).second)
        throw InternalError("s1_generate: duplicate member at L=" +
                            std::to_string(size));
    }
    cur = std::move(next);
  }
  if (cur.size() != (std::uint64_t{1} << (L - 1)))
    throw InternalError("s1_generate: expected 2^(L-1) members");
  std::vector<Permutation> out;
  out.reserve(cur.size());
  for (const auto& e : cur) out.emplace_back(e);
  return out;
}

Permutation min_class_representative(int L) {
  if (L < 4)
    throw DomainError("min_class_representative requires L >= 4, got " +
                      std::to_string(L));
  if (L > kHardMaxL) throw UsageError("min_class_representative: L too large");
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(L));
  for (int v = 2; v <= L; v += 2) e.push_back(v);
  for (int v = 1; v <= L; v += 2) e.push_back(v);
  return Permutation(std::move(e));
}

}  // namespace wheelzeta
