#pragma once

#include "vermacrit/affine.hpp"
#include "vermacrit/jantzen.hpp"
#include "vermacrit/linalg.hpp"
#include "vermacrit/poly.hpp"

#include <vector>

namespace vermacrit {

// Monomial in the H_- generators h_dir(-m): factors sorted by (m, dir).
struct HMono {
  std::vector<std::pair<int, int>> parts;  // (m, cartan direction)
  bool operator==(const HMono& o) const { return parts == o.parts; }
  int degree() const {
    int s = 0;
    for (auto [m, d] : parts) s += m;
    return s;
  }
  int num_parts() const { return static_cast<int>(parts.size()); }
};

// Vacuum module V^k over H_- + CK + H for the chosen Cartan directions,
// graded by the delta-degree. The action is computed purely from
// [h(m), h'(n)] = m delta_{m,-n} (h|h') K.
template <typename R>
class VacuumModule {
 public:
  VacuumModule(const AffineAlgebra* alg, std::vector<int> directions, R level)
      : alg_(alg), dirs_(std::move(directions)), level_(std::move(level)) {}

  const AffineAlgebra& algebra() const { return *alg_; }
  const R& level() const { return level_; }

  std::vector<HMono> basis(int degree) const;

  // <mono_a v_k, mono_b v_k> via sigma(a) = reversed raising factors.
  R pair(const HMono& a, const HMono& b) const;

  Matrix<R> gram(int degree) const;

 private:
  const AffineAlgebra* alg_;
  std::vector<int> dirs_;
  R level_;
};

// Layer dimensions of the Jantzen filtration of V^0 at the given degree,
// obtained by deforming the level to k = x.
std::vector<int> vacuum_layer_dims(const AffineAlgebra& alg, const std::vector<int>& dirs,
                                   int degree);

// All Cartan directions.
std::vector<int> all_directions(const AffineAlgebra& alg);

}  // namespace vermacrit
