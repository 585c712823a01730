#pragma once

#include "vermacrit/errors.hpp"
#include "vermacrit/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace vermacrit {

// Sparse element of the finite algebra: coefficients on the fixed basis.
struct SparseElt {
  std::vector<std::pair<int, Rat>> terms;  // (basis index, coeff), index ascending

  void add(int idx, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  friend SparseElt operator+(const SparseElt& a, const SparseElt& b);
  friend SparseElt operator-(const SparseElt& a, const SparseElt& b);
  friend SparseElt operator*(const Rat& s, SparseElt a);
};

// Finite-dimensional basic Lie superalgebra given by structure-constant
// tables, with Chevalley data and an even invariant form. Built from a
// matrix realization by the catalog and validated exhaustively.
struct FiniteSuperAlgebra {
  std::string name;
  int dim = 0;
  int rank = 0;  // Cartan dimension

  std::vector<std::string> labels;
  std::vector<int> parity;                       // 0 even, 1 odd
  std::vector<std::vector<SparseElt>> bracket_;  // [x_i, x_j]
  std::vector<int> cartan;                       // basis indices of h, in order h_1..h_r
  std::vector<std::vector<Rat>> form;            // (x_i | x_j)

  // Root data. weight_on_h[i] = ad-weight of x_i as values on (h_1..h_r);
  // root_coords[i] = the same root written on the simple roots (integers).
  std::vector<std::vector<Rat>> weight_on_h;
  std::vector<std::vector<int>> root_coords;
  std::vector<std::vector<Rat>> simple_roots;  // alpha_i values on (h_1..h_r)
  std::vector<std::pair<int, int>> chevalley;  // (e_i, f_i) basis indices

  int theta_plus = -1;   // basis index of the highest-root vector
  int theta_minus = -1;  // basis index of the lowest-root vector
  std::vector<int> theta_coords;

  // Naive anti-involution (transpose in the matrix realization):
  // sigma(x_i) = sigma_coef[i] * x_{sigma_of[i]}.
  std::vector<int> sigma_of;
  std::vector<Rat> sigma_coef;

  const SparseElt& bracket(int i, int j) const { return bracket_[i][j]; }
  SparseElt bracket(const SparseElt& a, const SparseElt& b) const;

  Rat form_pair(const SparseElt& a, const SparseElt& b) const;

  bool is_cartan(int i) const;

  // Sign of the root of x_i: +1 on n_+, -1 on n_-, 0 on h.
  int root_sign(int i) const;

  // Throws ValidationFailure when the tables are inconsistent.
  void validate() const;
};

// Catalog keys: "sl2", "sl3", "sl(2|1)".
FiniteSuperAlgebra build_from_catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace vermacrit
