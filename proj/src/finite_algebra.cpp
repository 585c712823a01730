#include "vermacrit/finite_algebra.hpp"

#include "vermacrit/linalg.hpp"

#include <algorithm>

namespace vermacrit {

void SparseElt::add(int idx, const Rat& c) {
  if (vermacrit::is_zero(c)) return;
  auto it = std::lower_bound(terms.begin(), terms.end(), idx,
                             [](const auto& t, int i) { return t.first < i; });
  if (it != terms.end() && it->first == idx) {
    it->second += c;
    if (vermacrit::is_zero(it->second)) terms.erase(it);
  } else {
    terms.insert(it, {idx, c});
  }
}

SparseElt operator+(const SparseElt& a, const SparseElt& b) {
  SparseElt r = a;
  for (const auto& [i, c] : b.terms) r.add(i, c);
  return r;
}

SparseElt operator-(const SparseElt& a, const SparseElt& b) {
  SparseElt r = a;
  for (const auto& [i, c] : b.terms) r.add(i, -c);
  return r;
}

SparseElt operator*(const Rat& s, SparseElt a) {
  if (vermacrit::is_zero(s)) return SparseElt{};
  for (auto& [i, c] : a.terms) c *= s;
  return a;
}

SparseElt FiniteSuperAlgebra::bracket(const SparseElt& a, const SparseElt& b) const {
  SparseElt r;
  for (const auto& [i, ci] : a.terms)
    for (const auto& [j, cj] : b.terms)
      for (const auto& [k, ck] : bracket_[i][j].terms) r.add(k, ci * cj * ck);
  return r;
}

Rat FiniteSuperAlgebra::form_pair(const SparseElt& a, const SparseElt& b) const {
  Rat r(0);
  for (const auto& [i, ci] : a.terms)
    for (const auto& [j, cj] : b.terms) r += ci * cj * form[i][j];
  return r;
}

bool FiniteSuperAlgebra::is_cartan(int i) const {
  return std::find(cartan.begin(), cartan.end(), i) != cartan.end();
}

int FiniteSuperAlgebra::root_sign(int i) const {
  for (int c : root_coords[i]) {
    if (c > 0) return 1;
    if (c < 0) return -1;
  }
  return 0;
}

namespace {

// Matrix realization in gl(n0|n1): n x n rational matrices with the parity
// of E_ij given by p(i)+p(j).
struct MatRep {
  int n = 0;
  std::vector<int> row_parity;
  std::vector<std::vector<Rat>> basis_mats;  // flattened n*n, row major
  std::vector<int> parity;
  std::vector<std::string> labels;

  int add(const std::string& label, const std::vector<std::pair<std::pair<int, int>, Rat>>& units) {
    std::vector<Rat> m(n * n, Rat(0));
    int par = -1;
    for (const auto& [ij, c] : units) {
      m[ij.first * n + ij.second] += c;
      int p = (row_parity[ij.first] + row_parity[ij.second]) % 2;
      if (par == -1) par = p;
      if (par != p) throw ValidationFailure("mixed parity basis matrix");
    }
    basis_mats.push_back(std::move(m));
    parity.push_back(par == -1 ? 0 : par);
    labels.push_back(label);
    return static_cast<int>(basis_mats.size()) - 1;
  }

  std::vector<Rat> matmul(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    std::vector<Rat> c(n * n, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (vermacrit::is_zero(a[i * n + k])) continue;
        for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
      }
    return c;
  }

  Rat supertrace(const std::vector<Rat>& a) const {
    Rat s(0);
    for (int i = 0; i < n; ++i) s += (row_parity[i] ? -a[i * n + i] : a[i * n + i]);
    return s;
  }

  // Expresses a matrix in the chosen basis; throws if it is outside the span.
  SparseElt express(const std::vector<Rat>& m) const {
    const int d = static_cast<int>(basis_mats.size());
    Matrix<Rat> sys(n * n, std::vector<Rat>(d + 1, Rat(0)));
    for (int e = 0; e < n * n; ++e) {
      for (int b = 0; b < d; ++b) sys[e][b] = basis_mats[b][e];
      sys[e][d] = m[e];
    }
    std::vector<int> pivots = rref(sys);
    SparseElt out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] == d) throw ValidationFailure("matrix outside basis span");
      out.add(pivots[r], sys[r][d]);
    }
    return out;
  }

  std::vector<Rat> transpose(const std::vector<Rat>& a) const {
    std::vector<Rat> t(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
    return t;
  }
};

FiniteSuperAlgebra from_matrices(const std::string& name, const MatRep& rep,
                                 const std::vector<int>& cartan,
                                 const std::vector<std::pair<int, int>>& chevalley, int theta_plus,
                                 int theta_minus) {
  FiniteSuperAlgebra g;
  g.name = name;
  g.dim = static_cast<int>(rep.basis_mats.size());
  g.rank = static_cast<int>(cartan.size());
  g.labels = rep.labels;
  g.parity = rep.parity;
  g.cartan = cartan;
  g.chevalley = chevalley;
  g.theta_plus = theta_plus;
  g.theta_minus = theta_minus;

  g.bracket_.assign(g.dim, std::vector<SparseElt>(g.dim));
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      auto ab = rep.matmul(rep.basis_mats[i], rep.basis_mats[j]);
      auto ba = rep.matmul(rep.basis_mats[j], rep.basis_mats[i]);
      std::vector<Rat> br(rep.n * rep.n);
      const Rat s(koszul_sign(g.parity[i], g.parity[j]));
      for (int e = 0; e < rep.n * rep.n; ++e) br[e] = ab[e] - s * ba[e];
      g.bracket_[i][j] = rep.express(br);
    }

  g.form.assign(g.dim, std::vector<Rat>(g.dim, Rat(0)));
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      g.form[i][j] = rep.supertrace(rep.matmul(rep.basis_mats[i], rep.basis_mats[j]));

  // ad-weights on the Cartan basis.
  g.weight_on_h.assign(g.dim, std::vector<Rat>(g.rank, Rat(0)));
  for (int i = 0; i < g.dim; ++i) {
    for (int hj = 0; hj < g.rank; ++hj) {
      const SparseElt& br = g.bracket_[cartan[hj]][i];
      if (br.is_zero()) continue;
      if (br.terms.size() != 1 || br.terms[0].first != i)
        throw ValidationFailure(name + ": basis vector " + g.labels[i] + " is not an ad-h eigenvector");
      g.weight_on_h[i][hj] = br.terms[0].second;
    }
  }

  // Simple roots are the weights of the chevalley e_i.
  for (const auto& [e, f] : chevalley) {
    (void)f;
    g.simple_roots.push_back(g.weight_on_h[e]);
  }

  // Integer coordinates of every root on the simple roots.
  g.root_coords.assign(g.dim, std::vector<int>(g.rank, 0));
  for (int i = 0; i < g.dim; ++i) {
    Matrix<Rat> sys(g.rank, std::vector<Rat>(g.rank + 1, Rat(0)));
    for (int r = 0; r < g.rank; ++r) {
      for (int c = 0; c < g.rank; ++c) sys[r][c] = g.simple_roots[c][r];
      sys[r][g.rank] = g.weight_on_h[i][r];
    }
    std::vector<int> pivots = rref(sys);
    std::vector<Rat> sol(g.rank, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] == g.rank) throw ValidationFailure("weight outside root lattice span");
      sol[pivots[r]] = sys[r][g.rank];
    }
    for (int c = 0; c < g.rank; ++c) g.root_coords[i][c] = static_cast<int>(rat_to_long(sol[c]));
  }
  g.theta_coords = g.root_coords[theta_plus];

  // sigma = transpose in the matrix realization; basis maps to scaled basis.
  g.sigma_of.assign(g.dim, -1);
  g.sigma_coef.assign(g.dim, Rat(0));
  for (int i = 0; i < g.dim; ++i) {
    SparseElt t = rep.express(rep.transpose(rep.basis_mats[i]));
    if (t.terms.size() != 1)
      throw ValidationFailure("sigma does not map basis to scaled basis");
    g.sigma_of[i] = t.terms[0].first;
    g.sigma_coef[i] = t.terms[0].second;
  }

  g.validate();
  return g;
}

}  // namespace

void FiniteSuperAlgebra::validate() const {
  // Super-Jacobi over all basis triples:
  // [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]].
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y)
      for (int z = 0; z < dim; ++z) {
        SparseElt lhs = bracket(SparseElt{{{x, Rat(1)}}}, bracket_[y][z]);
        SparseElt r1 = bracket(bracket_[x][y], SparseElt{{{z, Rat(1)}}});
        SparseElt r2 = Rat(koszul_sign(parity[x], parity[y])) * bracket(SparseElt{{{y, Rat(1)}}}, bracket_[x][z]);
        if (!(lhs - r1 - r2).is_zero())
          throw ValidationFailure(name + ": super-Jacobi fails at triple (" + labels[x] + "," +
                                  labels[y] + "," + labels[z] + ")");
      }

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      // Even, supersymmetric form.
      if (parity[i] != parity[j] && !vermacrit::is_zero(form[i][j]))
        throw ValidationFailure(name + ": form is not even");
      if (form[i][j] != Rat(koszul_sign(parity[i], parity[j])) * form[j][i])
        throw ValidationFailure(name + ": form is not supersymmetric");
      // Invariance ([x,y]|z) = (x|[y,z]).
      for (int k = 0; k < dim; ++k) {
        Rat lhs(0), rhs(0);
        for (const auto& [t, c] : bracket_[i][j].terms) lhs += c * form[t][k];
        for (const auto& [t, c] : bracket_[j][k].terms) rhs += c * form[i][t];
        if (lhs != rhs) throw ValidationFailure(name + ": form is not invariant");
      }
    }

  // [e_i, f_i] must be the form-dual of alpha_i scaled by (e_i|f_i).
  for (std::size_t s = 0; s < chevalley.size(); ++s) {
    auto [e, f] = chevalley[s];
    Rat ef = form[e][f];
    if (vermacrit::is_zero(ef)) throw ValidationFailure(name + ": (e_i|f_i) vanishes");
    SparseElt h_ef = bracket_[e][f];
    // Check alpha_j(h_ef) = ef * (alpha_i, alpha_j) for all j, where the form
    // on weights is induced by (-|-) restricted to h.
    for (std::size_t j = 0; j < chevalley.size(); ++j) {
      Rat lhs(0);
      for (const auto& [t, c] : h_ef.terms) {
        // alpha_j evaluated on basis vector t (must be a Cartan vector).
        for (int r = 0; r < rank; ++r)
          if (cartan[r] == t) lhs += c * simple_roots[j][r];
      }
      // (alpha_i, alpha_j) via the inverse Cartan form.
      Matrix<Rat> sys(rank, std::vector<Rat>(rank + 1, Rat(0)));
      for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < rank; ++c) sys[r][c] = form[cartan[r]][cartan[c]];
        sys[r][rank] = simple_roots[s][r];
      }
      std::vector<int> piv = rref(sys);
      Rat pair(0);
      for (std::size_t r = 0; r < piv.size(); ++r)
        if (piv[r] < rank) pair += sys[r][rank] * simple_roots[j][piv[r]];
      if (lhs != ef * pair)
        throw ValidationFailure(name + ": (e_i|f_i) normalization inconsistent with the form");
    }
  }

  // sigma is a naive anti-involution fixing h.
  auto sigma = [&](const SparseElt& a) {
    SparseElt r;
    for (const auto& [i, c] : a.terms) r.add(sigma_of[i], c * sigma_coef[i]);
    return r;
  };
  for (int i = 0; i < dim; ++i) {
    SparseElt ss = sigma(sigma(SparseElt{{{i, Rat(1)}}}));
    if (!(ss - SparseElt{{{i, Rat(1)}}}).is_zero())
      throw ValidationFailure(name + ": sigma is not an involution");
    for (int j = 0; j < dim; ++j) {
      SparseElt lhs = sigma(bracket_[i][j]);
      SparseElt rhs = bracket(sigma(SparseElt{{{j, Rat(1)}}}), sigma(SparseElt{{{i, Rat(1)}}}));
      if (!(lhs - rhs).is_zero())
        throw ValidationFailure(name + ": sigma is not an anti-automorphism");
      if (form_pair(sigma(SparseElt{{{j, Rat(1)}}}), sigma(SparseElt{{{i, Rat(1)}}})) != form[i][j])
        throw ValidationFailure(name + ": sigma does not preserve the form");
    }
  }
  for (int c : cartan)
    if (sigma_of[c] != c || sigma_coef[c] != 1)
      throw ValidationFailure(name + ": sigma does not fix h");
  for (const auto& [e, f] : chevalley)
    if (sigma_of[e] != f || sigma_coef[e] != 1)
      throw ValidationFailure(name + ": sigma(e_i) != f_i");
}

FiniteSuperAlgebra build_from_catalog(const std::string& name) {
  if (name == "sl2") {
    MatRep rep;
    rep.n = 2;
    rep.row_parity = {0, 0};
    int e = rep.add("e1", {{{0, 1}, Rat(1)}});
    int h = rep.add("h1", {{{0, 0}, Rat(1)}, {{1, 1}, Rat(-1)}});
    int f = rep.add("f1", {{{1, 0}, Rat(1)}});
    return from_matrices("sl2", rep, {h}, {{e, f}}, e, f);
  }
  if (name == "sl3") {
    MatRep rep;
    rep.n = 3;
    rep.row_parity = {0, 0, 0};
    int e1 = rep.add("e1", {{{0, 1}, Rat(1)}});
    int e2 = rep.add("e2", {{{1, 2}, Rat(1)}});
    int e12 = rep.add("e12", {{{0, 2}, Rat(1)}});
    int h1 = rep.add("h1", {{{0, 0}, Rat(1)}, {{1, 1}, Rat(-1)}});
    int h2 = rep.add("h2", {{{1, 1}, Rat(1)}, {{2, 2}, Rat(-1)}});
    int f1 = rep.add("f1", {{{1, 0}, Rat(1)}});
    int f2 = rep.add("f2", {{{2, 1}, Rat(1)}});
    int f12 = rep.add("f12", {{{2, 0}, Rat(1)}});
    return from_matrices("sl3", rep, {h1, h2}, {{e1, f1}, {e2, f2}}, e12, f12);
  }
  if (name == "sl(2|1)") {
    // 3x3 supertraceless matrices, grading (2|1). The supertrace form.
    MatRep rep;
    rep.n = 3;
    rep.row_parity = {0, 0, 1};
    int e1 = rep.add("e1", {{{0, 1}, Rat(1)}});
    int e2 = rep.add("e2", {{{1, 2}, Rat(1)}});
    int e12 = rep.add("e12", {{{0, 2}, Rat(1)}});
    int h1 = rep.add("h1", {{{0, 0}, Rat(1)}, {{1, 1}, Rat(-1)}});
    int h2 = rep.add("h2", {{{1, 1}, Rat(1)}, {{2, 2}, Rat(1)}});
    int f1 = rep.add("f1", {{{1, 0}, Rat(1)}});
    int f2 = rep.add("f2", {{{2, 1}, Rat(1)}});
    int f12 = rep.add("f12", {{{2, 0}, Rat(1)}});
    return from_matrices("sl(2|1)", rep, {h1, h2}, {{e1, f1}, {e2, f2}}, e12, f12);
  }
  throw UnknownAlgebra("unknown algebra: " + name);
}

std::vector<std::string> catalog_names() { return {"sl2", "sl3", "sl(2|1)"}; }

}  // namespace vermacrit
