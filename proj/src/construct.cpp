#include "vermacrit/construct.hpp"

#include <algorithm>

namespace vermacrit {

AffKey shift_T(int m, const AffKey& u) {
  if (u.kind != AffKey::Loop) throw NotLoopElement("T_m is undefined on K and D");
  return AffKey::loop(u.base, u.deg - m);
}

namespace {

template <typename R>
int val_of(const R&);
template <>
int val_of<Rat>(const Rat& a) {
  return is_zero(a) ? std::numeric_limits<int>::max() : 0;
}
template <>
int val_of<LocalRat>(const LocalRat& a) {
  return a.is_zero() ? std::numeric_limits<int>::max() : a.valuation();
}

// Unique solution of A x = rhs with minimal-valuation pivoting; divisions
// stay inside the ring by the pivot choice.
template <typename R>
std::vector<R> solve_unique(Matrix<R> A, std::vector<R> rhs, std::size_t cols) {
  const std::size_t rows = A.size();
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t best = rows;
    int bestv = std::numeric_limits<int>::max();
    for (std::size_t r = rank; r < rows; ++r) {
      int v = val_of<R>(A[r][c]);
      if (v < bestv) {
        bestv = v;
        best = r;
      }
    }
    if (best == rows || bestv == std::numeric_limits<int>::max()) continue;
    std::swap(A[best], A[rank]);
    std::swap(rhs[best], rhs[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || RingOps<R>::is_zero(A[r][c])) continue;
      R f = A[r][c] / A[rank][c];
      for (std::size_t j = c; j < cols; ++j) A[r][j] -= f * A[rank][j];
      rhs[r] -= f * rhs[rank];
    }
    pivot_of_col[c] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] < 0)
      throw NonUniqueSolution("intertwiner solve: free variable; window too small or weight "
                              "outside the generic set");
  for (std::size_t r = rank; r < rows; ++r)
    if (!RingOps<R>::is_zero(rhs[r]))
      throw NoSolution("intertwiner solve: inconsistent equivariance constraints");
  std::vector<R> x(cols, RingOps<R>::zero());
  for (std::size_t c = 0; c < cols; ++c) x[c] = rhs[pivot_of_col[c]] / A[pivot_of_col[c]][c];
  return x;
}

struct ProblemSpaces {
  std::vector<AffKey> v_basis;  // B'
  std::vector<AffKey> q_basis;  // weight elements of q within the window
  AffKey a0;
};

ProblemSpaces make_spaces(const AffineAlgebra& A, const TruncationWindow& w,
                          const IntertwinerProblem& P, bool plus_side) {
  ProblemSpaces out;
  const auto& g = A.g();
  out.a0 = AffKey::loop(g.cartan[P.cartan_index], 0);
  out.v_basis.push_back(out.a0);
  const int lo = plus_side ? 0 : 1;
  const int hi = plus_side ? P.m - 1 : P.m;
  for (int s = lo; s <= hi; ++s)
    for (int i = 0; i < g.dim; ++i) {
      if (g.root_sign(i) != (plus_side ? 1 : -1)) continue;
      out.v_basis.push_back(AffKey::loop(i, s));
    }
  // Order B' by ascending weight height so each psi value depends only on
  // the earlier ones.
  std::stable_sort(out.v_basis.begin(), out.v_basis.end(), [&](const AffKey& x, const AffKey& y) {
    return A.weight_nu(x).height() < A.weight_nu(y).height();
  });

  for (int s = 0; s <= w.max_delta_degree; ++s)
    for (int i = 0; i < g.dim; ++i) {
      int rs = g.root_sign(i);
      bool in_n_side = plus_side ? (rs > 0 && s >= 0) : (rs < 0 && s >= 1);
      bool in_h = rs == 0 && s >= 1 && P.seed_is_vacuum;
      if (in_n_side || in_h) out.q_basis.push_back(AffKey::loop(i, s));
    }
  return out;
}

}  // namespace

template <typename R>
PsiSolution<R> solve_psi(VermaModule<R>& M, const IntertwinerProblem& P,
                         const GradedVector<R>& w) {
  const AffineAlgebra& A = M.algebra();
  PBWContext& ctx = M.ctx();
  const bool plus_side = ctx.order() == OrderKind::PlusAdapted;
  ProblemSpaces sp = make_spaces(A, ctx.window(), P, plus_side);

  if (w.is_zero()) throw NoSolution("solve_psi: zero seed vector");
  const NuVec drop_w = ctx.drop_of(w.terms[0].first);
  // Precondition: q_A w = 0.
  for (const AffKey& u : sp.q_basis) {
    NuVec target = drop_w - A.weight_nu(u);
    if (!target.nonneg() || !ctx.window().contains(target)) continue;
    if (!M.act(u, w).is_zero()) throw NoSolution("solve_psi: the seed is not q-invariant");
  }

  PsiSolution<R> out;
  out.v_basis = sp.v_basis;
  out.values.resize(sp.v_basis.size());

  for (std::size_t bi = 0; bi < sp.v_basis.size(); ++bi) {
    const AffKey& b = sp.v_basis[bi];
    if (b == sp.a0) {
      out.values[bi] = w;
      continue;
    }
    const NuVec drop_b = drop_w + A.weight_nu(b);
    if (!ctx.window().contains(drop_b))
      throw WindowExceeded("solve_psi: psi value outside the window");
    const auto& basis = ctx.weight_basis(drop_b);
    const std::size_t n = basis.size();

    Matrix<R> rows;
    std::vector<R> rhs;
    for (const AffKey& u : sp.q_basis) {
      NuVec target = drop_b - A.weight_nu(u);
      if (!target.nonneg() || !ctx.window().contains(target)) continue;
      const auto& tbasis = ctx.weight_basis(target);
      if (tbasis.empty()) continue;

      // RHS: psi(u . b^*) with (u f)(y) = -(-1)^{p(u)p(f)} f([u, y]).
      GradedVector<R> rvec;
      const Rat sgn(-koszul_sign(A.parity(u), A.parity(b)));
      for (std::size_t yi = 0; yi < sp.v_basis.size(); ++yi) {
        const AffKey& y = sp.v_basis[yi];
        AffElt br = A.bracket(u, y);
        Rat cb(0);
        for (const auto& t : br.terms)
          if (t.key == b) cb += t.coef;
        if (is_zero(cb)) continue;
        // u b^* has y^*-coefficient sgn * cb; wt(y) < wt(b), so psi(y^*)
        // is already solved.
        rvec.add_scaled(out.values[yi], RingOps<R>::from_rat(sgn * cb));
      }

      // Rows: coordinates of u . (unknown) in the target space.
      Matrix<R> block(tbasis.size(), std::vector<R>(n, RingOps<R>::zero()));
      for (std::size_t j = 0; j < n; ++j) {
        const auto& col = M.act1(u, basis[j]);
        for (const auto& [mid, c] : col.terms)
          block[ctx.basis_position(target, mid)][j] = c;
      }
      std::vector<R> rblock(tbasis.size(), RingOps<R>::zero());
      for (const auto& [mid, c] : rvec.terms) rblock[ctx.basis_position(target, mid)] = c;
      for (std::size_t r = 0; r < tbasis.size(); ++r) {
        rows.push_back(std::move(block[r]));
        rhs.push_back(std::move(rblock[r]));
      }
    }
    std::vector<R> x = solve_unique<R>(std::move(rows), std::move(rhs), n);
    out.values[bi] = from_coords(ctx, drop_b, x);
  }
  return out;
}

template <typename R>
ConstructedVector<R> construct_v(VermaModule<R>& M, const IntertwinerProblem& P,
                                 const GradedVector<R>& w) {
  const AffineAlgebra& A = M.algebra();
  PBWContext& ctx = M.ctx();
  PsiSolution<R> psi = solve_psi(M, P, w);

  ConstructedVector<R> out;
  for (std::size_t bi = 0; bi < psi.v_basis.size(); ++bi) {
    if (psi.values[bi].is_zero()) continue;
    AffKey lowered = shift_T(P.m, psi.v_basis[bi]);
    out.v += M.act(lowered, psi.values[bi]);
  }
  if (out.v.is_zero()) throw std::logic_error("construct_v: the constructed vector vanished");

  // HC(v) = a(-m) HC(w) in the module's own ordering.
  {
    GradedVector<R> lhs = hc_project(ctx, out.v);
    GradedVector<R> rhs;
    int az = ctx.gen_index(AffKey::loop(A.g().cartan[P.cartan_index], -P.m));
    if (az < 0) throw WindowExceeded("construct_v: a(-m) outside the window");
    for (const auto& [mid, c] : hc_project(ctx, w).terms) {
      for (const auto& [m2, c2] : ctx.insert_left(static_cast<uint16_t>(az), mid).terms)
        rhs.add(m2, c * RingOps<R>::from_rat(c2));
    }
    GradedVector<R> diff = lhs;
    diff.add_scaled(rhs, RingOps<R>::from_rat(Rat(-1)));
    if (!diff.is_zero()) throw std::logic_error("construct_v: HC certificate failed");
    out.hc_checked = true;
  }

  // u v = 0 for every weight element u of q with wt u != m delta.
  {
    const bool plus_side = ctx.order() == OrderKind::PlusAdapted;
    ProblemSpaces sp = make_spaces(A, ctx.window(), P, plus_side);
    const NuVec md = P.m * A.delta_nu();
    const NuVec drop_v = ctx.drop_of(out.v.terms[0].first);
    for (const AffKey& u : sp.q_basis) {
      NuVec wu = A.weight_nu(u);
      if (wu == md) continue;
      NuVec target = drop_v - wu;
      if (!target.nonneg() || !ctx.window().contains(target)) continue;
      if (!M.act(u, out.v).is_zero())
        throw std::logic_error("construct_v: annihilation certificate failed at " + A.label(u));
    }
    out.annihilation_checked = true;
  }
  return out;
}

template PsiSolution<Rat> solve_psi(VermaModule<Rat>&, const IntertwinerProblem&,
                                    const GradedVector<Rat>&);
template PsiSolution<LocalRat> solve_psi(VermaModule<LocalRat>&, const IntertwinerProblem&,
                                         const GradedVector<LocalRat>&);
template ConstructedVector<Rat> construct_v(VermaModule<Rat>&, const IntertwinerProblem&,
                                            const GradedVector<Rat>&);
template ConstructedVector<LocalRat> construct_v(VermaModule<LocalRat>&,
                                                 const IntertwinerProblem&,
                                                 const GradedVector<LocalRat>&);

const GradedVector<LocalRat>& HcInverse::of(MonoId z) {
  auto it = cache_.find(z);
  if (it != cache_.end()) return it->second;

  PBWContext& ctx = M_->ctx();
  GradedVector<LocalRat> w;
  w.add(ctx.one(), RingOps<LocalRat>::one());
  const Mono zm = ctx.mono(z);
  bool first = true;
  for (std::size_t i = zm.f.size(); i-- > 0;) {
    auto [g, e] = zm.f[i];
    const NegGen& gen = ctx.gen(g);
    if (gen.block != SplitBlock::H)
      throw NotImaginaryWeight("hc_inverse: argument is not a monomial in H_-");
    int cartan_index = -1;
    for (int j = 0; j < M_->algebra().rank(); ++j)
      if (M_->algebra().g().cartan[j] == gen.key.base) cartan_index = j;
    for (uint16_t rep = 0; rep < e; ++rep) {
      IntertwinerProblem P{-gen.key.deg, cartan_index, first};
      w = construct_v(*M_, P, w).v;
      first = false;
    }
  }
  return cache_.emplace(z, std::move(w)).first->second;
}

RatVector HcInverse::at_zero(MonoId z) {
  const GradedVector<LocalRat>& v = of(z);
  RatVector out;
  for (const auto& [m, c] : v.terms) out.add(m, c.eval_at_zero());
  return out;
}

LevelCoefficient level_coefficient(const AffineAlgebra& alg, const TruncationWindow& w,
                                   int cartan_d, int cartan_a, int m) {
  LevelCoefficient out;
  const auto& g = alg.g();
  const AffKey dm = AffKey::loop(g.cartan[cartan_d], m);
  const AffKey am = AffKey::loop(g.cartan[cartan_a], -m);
  out.pairing = alg.form_pair(dm, am);
  if (is_zero(out.pairing))
    throw InconsistentCoefficient("level_coefficient: (d|a) = 0, the scalar is not determined");

  // Two non-critical weights in Lambda (certified below).
  std::vector<Rat> levels = {Rat(1, 3), Rat(1, 5)};
  std::vector<Rat> cs;
  for (const Rat& level : levels) {
    std::vector<Rat> coords;
    const long primes[] = {7, 11, 13};
    for (int i = 0; i < alg.rank(); ++i) coords.push_back(Rat(1, primes[i % 3]));
    coords.push_back(level);
    coords.push_back(Rat(0));
    Weight lam(coords);
    if (!in_lambda_set(alg, lam, w) || alg.is_critical(lam))
      throw InconsistentCoefficient("level_coefficient: probe weight left Lambda");

    PBWContext ctx(&alg, w, OrderKind::PlusAdapted);
    VermaModule<Rat> M(&ctx, lam);
    GradedVector<Rat> vac;
    vac.add(ctx.one(), Rat(1));
    IntertwinerProblem P{m, cartan_a, true};
    GradedVector<Rat> v = construct_v(M, P, vac).v;

    GradedVector<Rat> dv = M.act(dm, v);
    Rat scalar(0);
    for (const auto& [mid, c] : dv.terms) {
      if (mid != ctx.one())
        throw InconsistentCoefficient("level_coefficient: d(m) v is not a multiple of v_lambda");
      scalar = c;
    }
    cs.push_back(scalar / out.pairing - Rat(m) * level);
  }
  out.c = cs[0];
  out.consistent = cs[0] == cs[1];
  if (!out.consistent)
    throw InconsistentCoefficient("level_coefficient: the two-level extractions disagree");
  out.vanishing_level = -out.c / Rat(m);

  // Independent supertrace route:
  // c (d|a) = (1/2) sum_{0 <= s < m} [str_{g_s} - str_{Htilde_s}](ad d(0) ad a(0));
  // the Htilde correction vanishes here since ad a(0) kills Htilde.
  const AffKey d0 = AffKey::loop(g.cartan[cartan_d], 0);
  const AffKey a0 = AffKey::loop(g.cartan[cartan_a], 0);
  Rat str_total(0), str_h(0);
  for (int s = 0; s < m; ++s) {
    for (int i = 0; i < g.dim; ++i) {
      AffKey x = AffKey::loop(i, s);
      // coefficient of x in [d(0), [a(0), x]]
      Rat diag(0);
      for (const auto& t1 : alg.bracket(a0, x).terms)
        for (const auto& t2 : alg.bracket(d0, t1.key).terms)
          if (t2.key == x) diag += t1.coef * t2.coef;
      Rat signed_diag = g.parity[i] ? -diag : diag;
      str_total += signed_diag;
      if (g.root_sign(i) == 0) str_h += signed_diag;
    }
    // K and D (s = 0 only) commute with a(0); no contribution.
  }
  out.c_supertrace = ((str_total - str_h) / 2) / out.pairing;
  return out;
}

}  // namespace vermacrit
