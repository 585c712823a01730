#pragma once

#include "vermacrit/poly.hpp"
#include "vermacrit/rational.hpp"

#include <vector>

namespace vermacrit {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Reduced row echelon form over Q, in place. Returns pivot columns.
std::vector<int> rref(Matrix<Rat>& m);

// Basis of the right nullspace of an n x k matrix over Q (rows of the result).
Matrix<Rat> nullspace(Matrix<Rat> m, std::size_t cols);

int rank(Matrix<Rat> m);

// Appends rows to an echelon basis, keeping it reduced. Returns how many of
// the new rows were independent.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t cols) : cols_(cols) {}
  // Returns true when v was independent of the current span (and absorbed).
  bool add(std::vector<Rat> v);
  bool contains(std::vector<Rat> v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Matrix<Rat>& rows() const { return rows_; }

 private:
  std::size_t cols_;
  Matrix<Rat> rows_;          // reduced echelon rows
  std::vector<int> pivots_;   // pivot column per row
};

// Determinant over Q by fraction-free (Bareiss) elimination.
Rat det_rat(Matrix<Rat> m);

// Determinant over Q[t] by fraction-free (Bareiss) elimination. Exact; all
// interior divisions are exact by the Sylvester identity.
Poly det_poly_bareiss(Matrix<Poly> m);

// Determinant over Q[t] by evaluation at deg+1 integer points followed by
// Lagrange interpolation. Exact, and much faster for large matrices.
Poly det_poly_interp(const Matrix<Poly>& m);

// Dispatches between the two exact routes on matrix size.
Poly det_poly(const Matrix<Poly>& m);

}  // namespace vermacrit
