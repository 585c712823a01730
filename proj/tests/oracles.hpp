#pragma once

// Test-side oracles, independent of the library's straightening/character
// machinery: brute-force multiset enumerations over the negative-root
// generator list and elementary partition counting. Expected values in the
// test files are frozen from these.

#include "vermacrit/affine.hpp"
#include "vermacrit/lattice.hpp"

#include <functional>
#include <vector>

namespace oracle {

using vermacrit::AffKey;
using vermacrit::AffineAlgebra;
using vermacrit::NuVec;
using vermacrit::Rat;
using vermacrit::TruncationWindow;

struct GenWeight {
  NuVec drop;
  bool odd;
};

// Negative-root generators of the affinization within the window, by hand:
// x t^{-m} for x in n_+ (m >= 1), h_j t^{-m} (m >= 1), x t^{-m} for x in n_-
// (m >= 0), without consulting the library's split tables.
inline std::vector<GenWeight> negative_generators(const AffineAlgebra& A,
                                                  const TruncationWindow& w,
                                                  int block_filter = -1) {
  // block_filter: -1 all, 0 loop-n_+, 1 loop-h, 2 loop-n_-, 3 real only (0+2)
  std::vector<GenWeight> out;
  const auto& g = A.g();
  for (int m = 0; m <= w.max_delta_degree; ++m) {
    for (int i = 0; i < g.dim; ++i) {
      int rs = g.root_sign(i);
      int block = rs > 0 ? 0 : (rs == 0 ? 1 : 2);
      if (m == 0 && block != 2) continue;
      if (block_filter == 3 && block == 1) continue;
      if (block_filter >= 0 && block_filter <= 2 && block != block_filter) continue;
      NuVec drop(static_cast<std::size_t>(A.rank() + 1));
      drop[0] = m;
      for (int c = 1; c <= A.rank(); ++c)
        drop[c] = m * g.theta_coords[c - 1] - g.root_coords[i][c - 1];
      if (!w.contains(drop)) continue;
      out.push_back({drop, g.parity[i] == 1});
    }
  }
  return out;
}

// Number of generator multisets with total drop nu, odd generators used at
// most once: the Kostant partition function of U(n) at desk scale.
inline long count_multisets(const std::vector<GenWeight>& gens, const NuVec& nu) {
  std::function<long(std::size_t, const NuVec&)> go = [&](std::size_t pos,
                                                          const NuVec& left) -> long {
    if (left.is_zero()) return 1;
    if (pos == gens.size()) return 0;
    long total = go(pos + 1, left);  // exponent 0
    NuVec cur = left;
    int e = 0;
    while (cur.dominates(gens[pos].drop)) {
      cur = cur - gens[pos].drop;
      ++e;
      if (gens[pos].odd && e > 1) break;
      total += go(pos + 1, cur);
    }
    return total;
  };
  return go(0, nu);
}

inline long tau_bruteforce(const AffineAlgebra& A, const TruncationWindow& w, const NuVec& nu) {
  return count_multisets(negative_generators(A, w), nu);
}

// dim S_{-s delta} = multisets of H_- generators.
inline long s_dim_bruteforce(const AffineAlgebra& A, const TruncationWindow& w, int s) {
  return count_multisets(negative_generators(A, w, 1), s * A.delta_nu());
}

// Real-root partition function (the Kac-Kazhdan character of L(lambda)).
inline long real_tau_bruteforce(const AffineAlgebra& A, const TruncationWindow& w,
                                const NuVec& nu) {
  return count_multisets(negative_generators(A, w, 3), nu);
}

// Integer partitions of s, optionally with at least k parts.
inline long partitions(int s, int min_parts = 0) {
  std::function<long(int, int, int)> go = [&](int left, int maxpart, int parts) -> long {
    if (left == 0) return parts >= min_parts ? 1 : 0;
    long total = 0;
    for (int p = std::min(left, maxpart); p >= 1; --p) total += go(left - p, p, parts + 1);
    return total;
  };
  return go(s, s, 0);
}

// Partitions of s with parts in r colors (dim S at degree s for Cartan rank r)
// and at least min_parts parts.
inline long colored_partitions(int s, int r, int min_parts = 0) {
  // Multisets of (part size, color).
  std::function<long(int, int, int)> go = [&](int left, int maxpart, int parts) -> long {
    if (left == 0) return parts >= min_parts ? 1 : 0;
    if (maxpart == 0) return 0;
    long total = 0;
    // Use c_j >= 0 copies of part `maxpart` in each of r colors: multisets of
    // colors of size t = multichoose(r, t).
    auto multichoose = [&](int t) {
      long acc = 1;
      for (int i = 1; i <= t; ++i) acc = acc * (r + i - 1) / i;
      return acc;
    };
    for (int t = 0; t * maxpart <= left; ++t)
      total += multichoose(t) * go(left - t * maxpart, maxpart - 1, parts + t);
    return total;
  };
  return go(s, s, 0);
}

}  // namespace oracle
