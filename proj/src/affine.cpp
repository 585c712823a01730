#include "vermacrit/affine.hpp"

#include <algorithm>

namespace vermacrit {

void AffElt::add(const AffKey& k, const Rat& c) {
  if (vermacrit::is_zero(c)) return;
  for (auto& t : terms) {
    if (t.key == k) {
      t.coef += c;
      if (vermacrit::is_zero(t.coef))
        terms.erase(terms.begin() + (&t - terms.data()));
      return;
    }
  }
  terms.push_back({k, c});
}

AffineAlgebra::AffineAlgebra(FiniteSuperAlgebra base) : g_(std::move(base)) {
  const int r = g_.rank;
  const int n = r + 2;

  form_h_.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) form_h_[i][j] = g_.form[g_.cartan[i]][g_.cartan[j]];
  form_h_[r][r + 1] = Rat(1);  // (K|D) = 1, (K|K) = (D|D) = 0
  form_h_[r + 1][r] = Rat(1);

  // Invert the form on hhat.
  Matrix<Rat> aug(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = form_h_[i][j];
    aug[i][n + i] = Rat(1);
  }
  if (static_cast<int>(rref(aug).size()) != n)
    throw ValidationFailure(g_.name + ": degenerate form on hhat");
  form_h_inv_.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form_h_inv_[i][j] = aug[i][n + j];

  // Simple roots: alpha_0 = delta - theta, then the finite simple roots.
  simple_root_fn_.assign(r + 1, std::vector<Rat>(n, Rat(0)));
  for (int i = 1; i <= r; ++i)
    for (int j = 0; j < r; ++j) simple_root_fn_[i][j] = g_.simple_roots[i - 1][j];
  for (int j = 0; j < r; ++j) simple_root_fn_[0][j] = -g_.weight_on_h[g_.theta_plus][j];
  simple_root_fn_[0][r + 1] = Rat(1);  // value on D

  delta_fn_.assign(n, Rat(0));
  delta_fn_[r + 1] = Rat(1);
  delta_nu_ = NuVec(static_cast<std::size_t>(r + 1));
  delta_nu_[0] = 1;
  for (int i = 1; i <= r; ++i) delta_nu_[i] = g_.theta_coords[i - 1];

  // rho: solve (rho, alpha_i) = (alpha_i, alpha_i)/2 with rho(D) = 0.
  {
    Matrix<Rat> sys(r + 1, std::vector<Rat>(r + 2, Rat(0)));
    for (int i = 0; i <= r; ++i) {
      std::vector<Rat> h = dual_element(simple_root_fn_[i]);
      for (int j = 0; j <= r; ++j) sys[i][j] = h[j];  // unknowns rho(h_1..h_r), rho(K)
      sys[i][r + 1] = fn_pair(simple_root_fn_[i], simple_root_fn_[i]) / 2;
    }
    std::vector<int> piv = rref(sys);
    if (static_cast<int>(piv.size()) != r + 1 || piv.back() == r + 1)
      throw ValidationFailure(g_.name + ": rho system is singular");
    rho_hat_.assign(n, Rat(0));
    for (int i = 0; i <= r; ++i) rho_hat_[piv[i]] = sys[i][r + 1];
  }
  dual_coxeter_ = rho_hat_[r];

  chevalley_.push_back({AffKey::loop(g_.theta_minus, 1), AffKey::loop(g_.theta_plus, -1)});
  for (const auto& [e, f] : g_.chevalley)
    chevalley_.push_back({AffKey::loop(e, 0), AffKey::loop(f, 0)});
}

AffElt AffineAlgebra::bracket(const AffKey& a, const AffKey& b) const {
  AffElt out;
  if (a.kind == AffKey::K || b.kind == AffKey::K) return out;
  if (a.kind == AffKey::D) {
    out.add(b, Rat(b.deg));
    return out;
  }
  if (b.kind == AffKey::D) {
    out.add(a, Rat(-a.deg));
    return out;
  }
  const SparseElt& br = g_.bracket(a.base, b.base);
  for (const auto& [k, c] : br.terms) out.add(AffKey::loop(k, a.deg + b.deg), c);
  if (a.deg == -b.deg && a.deg != 0) {
    Rat central = Rat(a.deg) * g_.form[a.base][b.base];
    out.add(AffKey::central(), central);
  }
  return out;
}

Rat AffineAlgebra::form_pair(const AffKey& a, const AffKey& b) const {
  if (a.kind == AffKey::Loop && b.kind == AffKey::Loop)
    return a.deg == -b.deg ? g_.form[a.base][b.base] : Rat(0);
  if (a.kind == AffKey::Loop || b.kind == AffKey::Loop) return Rat(0);
  if (a.kind != b.kind) return Rat(1);  // (K|D)
  return Rat(0);
}

std::pair<AffKey, Rat> AffineAlgebra::sigma(const AffKey& k) const {
  if (k.kind != AffKey::Loop) return {k, Rat(1)};
  return {AffKey::loop(g_.sigma_of[k.base], -k.deg), g_.sigma_coef[k.base]};
}

NuVec AffineAlgebra::weight_nu(const AffKey& k) const {
  NuVec nu(static_cast<std::size_t>(rank() + 1));
  if (k.kind != AffKey::Loop) return nu;
  nu[0] = k.deg;
  for (int i = 1; i <= rank(); ++i)
    nu[i] = k.deg * g_.theta_coords[i - 1] + g_.root_coords[k.base][i - 1];
  return nu;
}

std::vector<Rat> AffineAlgebra::functional_of_nu(const NuVec& nu) const {
  std::vector<Rat> fn(hdim(), Rat(0));
  for (int i = 0; i <= rank(); ++i)
    for (int j = 0; j < hdim(); ++j) fn[j] += Rat(nu[i]) * simple_root_fn_[i][j];
  return fn;
}

std::vector<Rat> AffineAlgebra::dual_element(const std::vector<Rat>& beta) const {
  std::vector<Rat> h(hdim(), Rat(0));
  for (int i = 0; i < hdim(); ++i)
    for (int j = 0; j < hdim(); ++j) h[i] += form_h_inv_[i][j] * beta[j];
  return h;
}

Rat AffineAlgebra::fn_pair(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  std::vector<Rat> hb = dual_element(b);
  Rat acc(0);
  for (int i = 0; i < hdim(); ++i) acc += a[i] * hb[i];
  return acc;
}

std::vector<PositiveRoot> AffineAlgebra::positive_roots(const TruncationWindow& w) const {
  std::vector<PositiveRoot> out;
  for (int m = 0; m <= w.max_delta_degree; ++m) {
    // Imaginary m delta with multiplicity rank.
    if (m >= 1) {
      NuVec nu = m * delta_nu_;
      if (w.contains(nu)) out.push_back({nu, 0, rank(), true});
    }
    for (int i = 0; i < g_.dim; ++i) {
      int rs = g_.root_sign(i);
      if (rs == 0) continue;
      if (rs < 0 && m == 0) continue;  // beta + m delta positive needs m >= 1 for beta < 0
      NuVec nu = weight_nu(AffKey::loop(i, m));
      if (!nu.nonneg() || nu.is_zero()) continue;
      if (w.contains(nu)) out.push_back({nu, g_.parity[i], 1, false});
    }
  }
  std::sort(out.begin(), out.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    if (a.nu.height() != b.nu.height()) return a.nu.height() < b.nu.height();
    return a.nu.c < b.nu.c;
  });
  return out;
}

RootKind AffineAlgebra::classify_root(const NuVec& alpha, const TruncationWindow& w) const {
  for (const auto& r : positive_roots(w))
    if (r.nu == alpha) return r.imaginary ? RootKind::Imaginary : RootKind::Real;
  throw NotARoot("not a positive root in the window: " + alpha.str());
}

SplitBlock AffineAlgebra::split_block(const AffKey& k) const {
  if (k.kind != AffKey::Loop) return SplitBlock::Other;
  int rs = g_.root_sign(k.base);
  if (rs > 0) return SplitBlock::NPlus;
  if (rs < 0) return SplitBlock::NMinus;
  return SplitBlock::H;
}

bool AffineAlgebra::in_n_minus_hat(const AffKey& k) const {
  if (k.kind != AffKey::Loop) return false;
  int rs = g_.root_sign(k.base);
  return k.deg < 0 || (k.deg == 0 && rs < 0);
}

bool AffineAlgebra::in_n_hat(const AffKey& k) const {
  if (k.kind != AffKey::Loop) return false;
  int rs = g_.root_sign(k.base);
  return k.deg > 0 || (k.deg == 0 && rs > 0);
}

std::string AffineAlgebra::label(const AffKey& k) const {
  if (k.kind == AffKey::K) return "K";
  if (k.kind == AffKey::D) return "D";
  return g_.labels[k.base] + "(" + std::to_string(k.deg) + ")";
}

void AffineAlgebra::validate(int max_deg) const {
  std::vector<AffKey> basis;
  for (int m = -max_deg; m <= max_deg; ++m)
    for (int i = 0; i < g_.dim; ++i) basis.push_back(AffKey::loop(i, m));
  basis.push_back(AffKey::central());
  basis.push_back(AffKey::derivation());

  auto bracket_elt = [&](const AffKey& a, const AffElt& b) {
    AffElt out;
    for (const auto& t : b.terms) {
      AffElt br = bracket(a, t.key);
      for (const auto& u : br.terms) out.add(u.key, t.coef * u.coef);
    }
    return out;
  };

  // Super-Jacobi on all affine triples in range. Terms whose inner bracket
  // leaves the degree range are consistent by bilinearity in t-degree, so
  // triples are restricted to |sum of degrees| <= max_deg.
  for (const auto& x : basis)
    for (const auto& y : basis) {
      AffElt xy = bracket(x, y);
      for (const auto& z : basis) {
        int dx = x.kind == AffKey::Loop ? x.deg : 0;
        int dy = y.kind == AffKey::Loop ? y.deg : 0;
        int dz = z.kind == AffKey::Loop ? z.deg : 0;
        if (std::abs(dx + dy + dz) > max_deg) continue;
        AffElt lhs = bracket_elt(x, bracket(y, z));
        AffElt r1;
        for (const auto& t : xy.terms) {
          AffElt br = bracket(t.key, z);
          for (const auto& u : br.terms) r1.add(u.key, t.coef * u.coef);
        }
        AffElt r2 = bracket_elt(y, bracket(x, z));
        Rat s(koszul_sign(parity(x), parity(y)));
        AffElt diff;
        for (const auto& t : lhs.terms) diff.add(t.key, t.coef);
        for (const auto& t : r1.terms) diff.add(t.key, -t.coef);
        for (const auto& t : r2.terms) diff.add(t.key, -s * t.coef);
        if (!diff.is_zero())
          throw ValidationFailure(g_.name + "^(1): affine super-Jacobi fails at (" + label(x) +
                                  "," + label(y) + "," + label(z) + ")");
      }
    }

  // Form invariance ([x,y]|z) = (x|[y,z]).
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        Rat lhs(0), rhs(0);
        for (const auto& t : bracket(x, y).terms) lhs += t.coef * form_pair(t.key, z);
        for (const auto& t : bracket(y, z).terms) rhs += t.coef * form_pair(x, t.key);
        if (lhs != rhs)
          throw ValidationFailure(g_.name + "^(1): affine form not invariant at (" + label(x) +
                                  "," + label(y) + "," + label(z) + ")");
      }
}

}  // namespace vermacrit
