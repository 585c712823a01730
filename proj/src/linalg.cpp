#include "vermacrit/linalg.hpp"

#include <stdexcept>

namespace vermacrit {

std::vector<int> rref(Matrix<Rat>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  return pivots;
}

Matrix<Rat> nullspace(Matrix<Rat> m, std::size_t cols) {
  for (auto& row : m) row.resize(cols, Rat(0));
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix<Rat> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[c] = Rat(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(Matrix<Rat> m) { return static_cast<int>(rref(m).size()); }

bool EchelonSpan::add(std::vector<Rat> v) {
  v.resize(cols_, Rat(0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    int p = pivots_[i];
    if (!is_zero(v[p])) {
      Rat f = v[p];
      for (std::size_t j = 0; j < cols_; ++j) v[j] -= f * rows_[i][j];
    }
  }
  int pivot = -1;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!is_zero(v[j])) {
      pivot = static_cast<int>(j);
      break;
    }
  }
  if (pivot < 0) return false;
  Rat inv = Rat(1) / v[pivot];
  for (auto& x : v) x *= inv;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!is_zero(rows_[i][pivot])) {
      Rat f = rows_[i][pivot];
      for (std::size_t j = 0; j < cols_; ++j) rows_[i][j] -= f * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonSpan::contains(std::vector<Rat> v) const {
  v.resize(cols_, Rat(0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    int p = pivots_[i];
    if (!is_zero(v[p])) {
      Rat f = v[p];
      for (std::size_t j = 0; j < cols_; ++j) v[j] -= f * rows_[i][j];
    }
  }
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Rat det_rat(Matrix<Rat> m) {
  const std::size_t n = m.size();
  if (n == 0) return Rat(1);
  Rat sign(1);
  Rat prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m[p][k])) ++p;
    if (p == n) return Rat(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = Rat(0);
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Poly det_poly_bareiss(Matrix<Poly> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(Rat(1));
  Rat sign(1);
  Poly prev(Rat(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Poly();
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = Poly::divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Poly det_poly_interp(const Matrix<Poly>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(Rat(1));
  long bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int row_deg = 0;
    for (std::size_t j = 0; j < n; ++j) row_deg = std::max(row_deg, m[i][j].degree());
    bound += row_deg;
  }
  const long npts = bound + 1;
  std::vector<Rat> xs(npts), ys(npts);
  for (long s = 0; s < npts; ++s) {
    Rat t(s);
    Matrix<Rat> num(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) num[i][j] = m[i][j].eval(t);
    xs[s] = t;
    ys[s] = det_rat(std::move(num));
  }
  // Newton divided differences, then expand.
  std::vector<Rat> dd = ys;
  for (long j = 1; j < npts; ++j)
    for (long i = npts - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  Poly result;
  Poly basis(Rat(1));
  for (long i = 0; i < npts; ++i) {
    result += dd[i] * basis;
    basis *= Poly({-xs[i], Rat(1)});
  }
  return result;
}

Poly det_poly(const Matrix<Poly>& m) {
  if (m.size() < 12) return det_poly_bareiss(m);
  return det_poly_interp(m);
}

}  // namespace vermacrit
