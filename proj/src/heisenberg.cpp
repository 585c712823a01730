#include "vermacrit/heisenberg.hpp"

#include <algorithm>
#include <functional>

namespace vermacrit {

template <typename R>
std::vector<HMono> VacuumModule<R>::basis(int degree) const {
  std::vector<HMono> out;
  HMono acc;
  // Parts in weakly decreasing (m, dir) order.
  std::function<void(int, int, int)> rec = [&](int left, int max_m, int max_dir) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (int m = std::min(left, max_m); m >= 1; --m) {
      int dir_cap = (m == max_m) ? max_dir : static_cast<int>(dirs_.size()) - 1;
      for (int d = dir_cap; d >= 0; --d) {
        acc.parts.push_back({m, dirs_[d]});
        rec(left - m, m, d);
        acc.parts.pop_back();
      }
    }
  };
  rec(degree, degree, static_cast<int>(dirs_.size()) - 1);
  return out;
}

template <typename R>
R VacuumModule<R>::pair(const HMono& a, const HMono& b) const {
  const auto& g = alg_->g();
  // Apply the raising factors of a to b v_k, rightmost first; everything is
  // even so no signs appear.
  struct Term {
    std::vector<std::pair<int, int>> parts;
    R coef;
  };
  std::vector<Term> state = {{b.parts, RingOps<R>::one()}};
  for (std::size_t i = a.parts.size(); i-- > 0;) {
    auto [m, dir] = a.parts[i];
    std::vector<Term> next;
    for (const auto& t : state) {
      for (std::size_t j = 0; j < t.parts.size(); ++j) {
        if (t.parts[j].first != m) continue;
        Rat form = g.form[g.cartan[dir]][g.cartan[t.parts[j].second]];
        if (is_zero(form)) continue;
        Term nt;
        nt.parts = t.parts;
        nt.parts.erase(nt.parts.begin() + j);
        nt.coef = t.coef * RingOps<R>::from_rat(Rat(m) * form) * level_;
        next.push_back(std::move(nt));
      }
    }
    state = std::move(next);
    if (state.empty()) return RingOps<R>::zero();
  }
  R acc = RingOps<R>::zero();
  for (const auto& t : state)
    if (t.parts.empty()) acc += t.coef;
  return acc;
}

template <typename R>
Matrix<R> VacuumModule<R>::gram(int degree) const {
  std::vector<HMono> bs = basis(degree);
  const std::size_t n = bs.size();
  Matrix<R> out(n, std::vector<R>(n, RingOps<R>::zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      out[i][j] = pair(bs[i], bs[j]);
      out[j][i] = out[i][j];
    }
  return out;
}

template class VacuumModule<Rat>;
template class VacuumModule<Poly>;

std::vector<int> vacuum_layer_dims(const AffineAlgebra& alg, const std::vector<int>& dirs,
                                   int degree) {
  VacuumModule<Poly> V(&alg, dirs, Poly::x());
  Matrix<Poly> G = V.gram(degree);
  if (G.empty()) return {0};
  Poly det = det_poly(G);
  if (det.is_zero()) throw DegenerateDirection("vacuum Gram degenerate as a polynomial in k");
  SmithResult smith = smith_local(std::move(G), det.valuation());
  int dmax = 0;
  for (int v : smith.d) dmax = std::max(dmax, v);
  std::vector<int> dims(dmax + 2, 0);
  for (int v : smith.d)
    for (int k = 0; k <= v; ++k) dims[k]++;
  return dims;
}

std::vector<int> all_directions(const AffineAlgebra& alg) {
  std::vector<int> dirs(alg.rank());
  for (int i = 0; i < alg.rank(); ++i) dirs[i] = i;
  return dirs;
}

}  // namespace vermacrit
