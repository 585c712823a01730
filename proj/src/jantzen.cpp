#include "vermacrit/jantzen.hpp"

#include <limits>

namespace vermacrit {

SmithResult smith_local(Matrix<Poly> G, int valuation) {
  const int n = static_cast<int>(G.size());
  SmithResult out;
  Matrix<Poly> F(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i) F[i][i] = Poly(Rat(1));

  int prec = valuation + 2;
  for (auto& row : G)
    for (auto& e : row) e = e.truncated(prec);

  for (int p = 0; p < n; ++p) {
    // Digits at or above the current precision are stale; drop them.
    for (int i = p; i < n; ++i)
      for (int j = p; j < n; ++j) G[i][j] = G[i][j].truncated(prec);
    int bi = -1, bj = -1, bv = std::numeric_limits<int>::max();
    for (int i = p; i < n; ++i)
      for (int j = p; j < n; ++j) {
        int v = G[i][j].valuation();
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0 || bv >= prec)
      throw std::logic_error("smith_local: matrix rank collapsed below precision");
    std::swap(G[bi], G[p]);
    for (int i = 0; i < n; ++i) {
      std::swap(G[i][bj], G[i][p]);
      std::swap(F[i][bj], F[i][p]);
    }
    out.d.push_back(bv);

    const int sub_prec = prec - bv;
    Poly uinv = G[p][p].shifted(-bv).unit_inverse(sub_prec);
    for (int r = p + 1; r < n; ++r) {
      if (G[r][p].is_zero()) continue;
      Poly q = (G[r][p].shifted(-bv) * uinv).truncated(sub_prec);
      for (int c = p; c < n; ++c) G[r][c] = (G[r][c] - q * G[p][c]).truncated(prec);
    }
    for (int c = p + 1; c < n; ++c) {
      if (G[p][c].is_zero()) continue;
      Poly q = (G[p][c].shifted(-bv) * uinv).truncated(sub_prec);
      for (int r = p; r < n; ++r) G[r][c] = (G[r][c] - q * G[r][p]).truncated(prec);
      for (int r = 0; r < n; ++r) F[r][c] = (F[r][c] - q * F[r][p]).truncated(prec);
    }
    prec = sub_prec;
  }

  long sum = 0;
  for (int v : out.d) sum += v;
  if (sum != valuation)
    throw std::logic_error("smith_local: diagonal valuations disagree with det valuation");

  out.col_at_zero.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.col_at_zero[i][j] = F[i][j][0];
  return out;
}

Matrix<Poly> deformed_gram(VermaModule<Poly>& Mdef, const NuVec& nu) {
  Matrix<Poly> G = Mdef.gram_matrix(nu);
  if (!G.empty() && det_poly(G).is_zero())
    throw DegenerateDirection("deformed Gram determinant vanishes identically at " + nu.str());
  return G;
}

JantzenLayers jantzen_layers(VermaModule<Poly>& Mdef, const NuVec& nu) {
  JantzenLayers out;
  out.nu = nu;
  Matrix<Poly> G = Mdef.gram_matrix(nu);
  const int n = static_cast<int>(G.size());
  if (n == 0) {
    out.dims = {0};
    return out;
  }
  Poly det = det_poly(G);
  if (det.is_zero())
    throw DegenerateDirection("deformed Gram determinant vanishes identically at " + nu.str());
  out.valuation = det.valuation();

  SmithResult smith = smith_local(std::move(G), out.valuation);
  out.column_valuations = smith.d;
  out.fk_columns = std::move(smith.col_at_zero);
  int dmax = 0;
  for (int v : smith.d) dmax = std::max(dmax, v);
  out.dims.assign(dmax + 2, 0);
  for (int v : smith.d)
    for (int k = 0; k <= v; ++k) out.dims[k]++;
  return out;
}

Matrix<Rat> JantzenLayers::layer_basis(int k) const {
  Matrix<Rat> rows;
  const int n = static_cast<int>(fk_columns.size());
  for (int j = 0; j < n; ++j) {
    if (column_valuations[j] < k) continue;
    std::vector<Rat> row(n);
    for (int i = 0; i < n; ++i) row[i] = fk_columns[i][j];
    rows.push_back(std::move(row));
  }
  rref(rows);
  return rows;
}

SumFormulaCheck sum_formula_check(VermaModule<Poly>& Mdef, const JantzenLayers& layers,
                                  const TruncatedCharacter& tau) {
  SumFormulaCheck out;
  out.nu = layers.nu;
  for (std::size_t k = 1; k < layers.dims.size(); ++k) out.layer_sum += layers.dims[k];
  out.valuation = layers.valuation;
  out.match = out.layer_sum == out.valuation;

  const AffineAlgebra& A = Mdef.algebra();
  // Criticality of the undeformed weight, i.e. at x = 0.
  Weight lam0;
  for (const auto& c : Mdef.lambda().v) lam0.v.push_back(c.eval(Rat(0)));
  out.critical = A.is_critical(lam0);
  if (out.critical) {
    const int mult = A.rank();  // dim of every imaginary root space
    for (int s = 1;; ++s) {
      NuVec sd = s * A.delta_nu();
      if (!out.nu.dominates(sd)) break;
      for (int m = 1; out.nu.dominates(m * sd); ++m)
        out.imaginary_census += mult * tau.at(out.nu - m * sd);
    }
    out.census_match = out.imaginary_census == out.valuation;
  }
  return out;
}

namespace {

template <typename R, typename ValOf>
int membership_degree_impl(VermaModule<R>& Mdef, const GradedVector<R>& v, ValOf val_of) {
  if (v.is_zero()) return std::numeric_limits<int>::max();
  PBWContext& ctx = Mdef.ctx();
  NuVec nu = ctx.drop_of(v.terms[0].first);
  int best = std::numeric_limits<int>::max();
  for (MonoId u : ctx.weight_basis(nu)) {
    R pairing = Mdef.shapovalov_pair(u, v);
    best = std::min(best, val_of(pairing));
    if (best == 0) break;
  }
  return best;
}

}  // namespace

int membership_degree(VermaModule<Poly>& Mdef, const GradedVector<Poly>& v) {
  return membership_degree_impl(Mdef, v, [](const Poly& p) { return p.valuation(); });
}

int membership_degree_local(VermaModule<LocalRat>& Mdef, const GradedVector<LocalRat>& v) {
  return membership_degree_impl(Mdef, v, [](const LocalRat& p) { return p.valuation(); });
}

}  // namespace vermacrit
