#include "vermacrit/characters.hpp"

#include <algorithm>
#include <functional>

namespace vermacrit {

bool TruncatedCharacter::operator==(const TruncatedCharacter& o) const {
  for (const auto& [nu, d] : table)
    if (o.at(nu) != d) return false;
  for (const auto& [nu, d] : o.table)
    if (at(nu) != d) return false;
  return true;
}

std::vector<NuVec> window_grid(int rank, const TruncationWindow& w) {
  std::vector<NuVec> grid;
  NuVec nu(static_cast<std::size_t>(rank + 1));
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == nu.size()) {
      if (w.contains(nu)) grid.push_back(nu);
      return;
    }
    int cap = pos == 0 ? w.max_delta_degree : w.max_height;
    for (int c = 0; c <= cap; ++c) {
      nu[pos] = c;
      if (nu.height() <= w.max_height) rec(pos + 1);
      nu[pos] = 0;
    }
    nu[pos] = 0;
  };
  rec(0);
  std::sort(grid.begin(), grid.end(), [](const NuVec& a, const NuVec& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.c < b.c;
  });
  return grid;
}

namespace {

struct GenDrop {
  NuVec drop;
  bool odd;
};

// Negative generators of the chosen blocks (bitmask: 1 N^+_-, 2 H_-, 4 N^-_-).
std::vector<GenDrop> block_gens(const AffineAlgebra& alg, const TruncationWindow& w, int mask) {
  std::vector<GenDrop> out;
  const auto& g = alg.g();
  for (int m = 0; m <= w.max_delta_degree; ++m)
    for (int i = 0; i < g.dim; ++i) {
      AffKey k = AffKey::loop(i, -m);
      if (!alg.in_n_minus_hat(k)) continue;
      SplitBlock b = alg.split_block(k);
      int bit = b == SplitBlock::NPlus ? 1 : (b == SplitBlock::H ? 2 : 4);
      if (!(mask & bit)) continue;
      NuVec drop(static_cast<std::size_t>(alg.rank() + 1));
      drop = drop - alg.weight_nu(k);
      if (!w.contains(drop) || drop.is_zero()) continue;
      out.push_back({drop, g.parity[i] == 1});
    }
  return out;
}

TruncatedCharacter partition_table(const AffineAlgebra& alg, const TruncationWindow& w, int mask) {
  std::vector<NuVec> grid = window_grid(alg.rank(), w);
  TruncatedCharacter ch;
  for (const auto& nu : grid) ch.table[nu] = 0;
  ch.table[NuVec(static_cast<std::size_t>(alg.rank() + 1))] = 1;

  for (const auto& gen : block_gens(alg, w, mask)) {
    if (gen.odd) {
      // Square-free: one pass over the grid in descending order.
      for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        NuVec prev = *it - gen.drop;
        if (!prev.nonneg()) continue;
        ch.table[*it] += ch.at(prev);
      }
    } else {
      // Unbounded exponent: ascending order reuses the updated table.
      for (const auto& nu : grid) {
        NuVec prev = nu - gen.drop;
        if (!prev.nonneg()) continue;
        ch.table[nu] += ch.at(prev);
      }
    }
  }
  return ch;
}

}  // namespace

TruncatedCharacter ch_verma(const AffineAlgebra& alg, const TruncationWindow& w) {
  return partition_table(alg, w, 7);
}

TruncatedCharacter kk_character(const AffineAlgebra& alg, const TruncationWindow& w) {
  return partition_table(alg, w, 5);
}

TruncatedCharacter ch_S(const AffineAlgebra& alg, const TruncationWindow& w) {
  return partition_table(alg, w, 2);
}

TruncatedCharacter ch_S_geq(const AffineAlgebra& alg, const TruncationWindow& w, int k) {
  // Track (degree s delta, number of factors); H_- generators are even.
  const int rank = alg.rank();
  const int smax = w.max_delta_degree;
  const int max_parts = smax;  // every factor drops at least one delta
  // parts_count[s][p] = monomials of degree s delta with exactly p factors.
  std::vector<std::vector<long>> cnt(smax + 1, std::vector<long>(max_parts + 1, 0));
  cnt[0][0] = 1;
  for (int m = 1; m <= smax; ++m)
    for (int dir = 0; dir < rank; ++dir)
      for (int s = m; s <= smax; ++s)
        for (int p = 1; p <= max_parts; ++p) cnt[s][p] += cnt[s - m][p - 1];

  TruncatedCharacter ch;
  for (int s = 0; s <= smax; ++s) {
    NuVec nu = s * alg.delta_nu();
    if (!w.contains(nu)) continue;
    long total = 0;
    for (int p = std::max(k, 0); p <= max_parts; ++p) total += cnt[s][p];
    ch.table[nu] = total;
  }
  return ch;
}

TruncatedCharacter convolve(const TruncatedCharacter& a, const TruncatedCharacter& b, int rank,
                            const TruncationWindow& w) {
  TruncatedCharacter out;
  for (const auto& nu : window_grid(rank, w)) {
    long acc = 0;
    for (const auto& [mu, d] : a.table) {
      if (d == 0) continue;
      NuVec rest = nu - mu;
      if (!rest.nonneg()) continue;
      acc += d * b.at(rest);
    }
    out.table[nu] = acc;
  }
  return out;
}

TruncatedCharacter subtract(const TruncatedCharacter& a, const TruncatedCharacter& b) {
  TruncatedCharacter out = a;
  for (auto& [nu, d] : out.table) d -= b.at(nu);
  return out;
}

TruncatedCharacter shift_by_delta(const TruncatedCharacter& a, const AffineAlgebra& alg, int s,
                                  const TruncationWindow& w) {
  TruncatedCharacter out;
  for (const auto& [nu, d] : a.table) {
    NuVec shifted = nu + s * alg.delta_nu();
    if (w.contains(shifted)) out.table[shifted] = d;
  }
  return out;
}

}  // namespace vermacrit
