#pragma once

#include "vermacrit/affine.hpp"
#include "vermacrit/lattice.hpp"

#include <unordered_map>
#include <vector>

namespace vermacrit {

// Finite table of weight-space dimensions at lambda - nu over the window.
struct TruncatedCharacter {
  std::unordered_map<NuVec, long, NuVecHash> table;

  long at(const NuVec& nu) const {
    auto it = table.find(nu);
    return it == table.end() ? 0 : it->second;
  }
  bool operator==(const TruncatedCharacter& o) const;
};

// All lattice points of the window, sorted by (height, lex); the DP below
// relies on dominated points appearing first.
std::vector<NuVec> window_grid(int rank, const TruncationWindow& w);

// ch M(lambda): the partition function tau over all negative generators.
TruncatedCharacter ch_verma(const AffineAlgebra& alg, const TruncationWindow& w);

// Kac-Kazhdan character of L(lambda): real-root generators only.
TruncatedCharacter kk_character(const AffineAlgebra& alg, const TruncationWindow& w);

// ch S = ch U(H_-), and its adic tails ch S^{>=k}.
TruncatedCharacter ch_S(const AffineAlgebra& alg, const TruncationWindow& w);
TruncatedCharacter ch_S_geq(const AffineAlgebra& alg, const TruncationWindow& w, int k);

TruncatedCharacter convolve(const TruncatedCharacter& a, const TruncatedCharacter& b,
                            int rank, const TruncationWindow& w);

// Pointwise difference a - b restricted to the window.
TruncatedCharacter subtract(const TruncatedCharacter& a, const TruncatedCharacter& b);

// Table shifted by s delta: out(nu) = in(nu - s delta).
TruncatedCharacter shift_by_delta(const TruncatedCharacter& a, const AffineAlgebra& alg, int s,
                                  const TruncationWindow& w);

}  // namespace vermacrit
