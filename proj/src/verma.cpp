#include "vermacrit/verma.hpp"

#include <algorithm>
#include <deque>

namespace vermacrit {

bool is_pure_H(PBWContext& ctx, MonoId m) {
  for (auto [g, e] : ctx.mono(m).f) {
    (void)e;
    if (ctx.gen(g).block != SplitBlock::H) return false;
  }
  return true;
}

namespace {

void require_imaginary(PBWContext& ctx, const RatVector& v) {
  if (v.is_zero()) return;
  NuVec drop = ctx.drop_of(v.terms[0].first);
  NuVec expect = drop.delta_degree() * ctx.algebra().delta_nu();
  if (!(drop == expect))
    throw NotImaginaryWeight("HC projection: weight drop " + drop.str() +
                             " is not a multiple of delta");
}

}  // namespace

RatVector hc_plus(PBWContext& plus, const RatVector& v) {
  require_imaginary(plus, v);
  RatVector out;
  for (const auto& [m, c] : v.terms)
    if (is_pure_H(plus, m)) out.add(m, c);
  return out;
}

RatVector hc_minus(PBWContext& plus, PBWContext& minus, const RatVector& v) {
  require_imaginary(plus, v);
  RatVector in_minus = reorder(v, plus, minus);
  RatVector out;
  for (const auto& [m, c] : in_minus.terms) {
    if (!is_pure_H(minus, m)) continue;
    // H_- monomials exist verbatim in both orderings.
    Mono src = minus.mono(m);
    Mono dst;
    for (auto [g, e] : src.f) {
      int pg = plus.gen_index(minus.gen(g).key);
      dst.f.push_back({static_cast<uint16_t>(pg), e});
    }
    std::sort(dst.f.begin(), dst.f.end());
    out.add(plus.intern(dst), c);
  }
  return out;
}

std::vector<MonoId> s_basis(PBWContext& plus, int s) {
  NuVec nu = s * plus.algebra().delta_nu();
  std::vector<MonoId> out;
  for (MonoId m : plus.weight_basis(nu))
    if (is_pure_H(plus, m)) out.push_back(m);
  return out;
}

namespace {

std::vector<RatVector> nullspace_of_ops(VermaModule<Rat>& M, int s,
                                        const std::vector<AffKey>& ops) {
  PBWContext& ctx = M.ctx();
  const AffineAlgebra& A = M.algebra();
  NuVec nu = s * A.delta_nu();
  const auto& basis = ctx.weight_basis(nu);
  const std::size_t n = basis.size();

  Matrix<Rat> constraints;
  for (const AffKey& op : ops) {
    NuVec target = nu - A.weight_nu(op);
    if (!target.nonneg()) continue;
    if (!ctx.window().contains(target))
      throw WindowExceeded("singular solver: raising target outside window");
    const auto& tbasis = ctx.weight_basis(target);
    if (tbasis.empty()) continue;
    Matrix<Rat> rows(tbasis.size(), std::vector<Rat>(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j) {
      const auto& w = M.act1(op, basis[j]);
      for (const auto& [m, c] : w.terms) {
        int pos = ctx.basis_position(target, m);
        rows[pos][j] = c;
      }
    }
    for (auto& r : rows) constraints.push_back(std::move(r));
  }
  Matrix<Rat> kernel = nullspace(std::move(constraints), n);
  std::vector<RatVector> out;
  for (auto& row : kernel) out.push_back(from_coords(ctx, nu, row));
  return out;
}

}  // namespace

std::vector<RatVector> singular_vectors(VermaModule<Rat>& M, int s) {
  std::vector<AffKey> ops;
  for (const auto& [e, f] : M.algebra().chevalley()) {
    (void)f;
    ops.push_back(e);
  }
  return nullspace_of_ops(M, s, ops);
}

std::vector<RatVector> annihilated_by(VermaModule<Rat>& M, int s,
                                      const std::vector<AffKey>& ops) {
  return nullspace_of_ops(M, s, ops);
}

GenericityReport is_generic_critical(const AffineAlgebra& alg, const Weight& lam,
                                     const TruncationWindow& w) {
  GenericityReport rep;
  rep.critical = is_zero(alg.lam_rho_pair(lam, alg.delta_fn()));
  for (const auto& root : alg.positive_roots(w)) {
    if (root.imaginary) continue;
    std::vector<Rat> fn = alg.functional_of_nu(root.nu);
    Rat lr2 = 2 * alg.lam_rho_pair(lam, fn);
    Rat norm = alg.fn_pair(fn, fn);
    for (int k = 1; w.contains(k * root.nu); ++k) {
      if (root.parity == 1 && k % 2 == 0) continue;  // netted by the even root 2 alpha
      if (lr2 == Rat(k) * norm) {
        rep.generic = false;
        rep.witnesses.push_back({root.nu, k});
      }
    }
  }
  return rep;
}

bool in_lambda_set(const AffineAlgebra& alg, const Weight& lam, const TruncationWindow& w) {
  GenericityReport rep = is_generic_critical(alg, lam, w);
  return rep.generic;
}

RatVector singular_product(VermaModule<Rat>& M, const RatVector& v, const RatVector& w) {
  if (!M.generic_certified)
    throw GenericityUnverified("singular_product requires a certified generic critical weight");
  // phi_v(w) = u_w u_v v_lambda for w = u_w v_lambda, v = u_v v_lambda.
  return M.ctx().vec_mul(w, v);
}

SpanTable submodule_span(VermaModule<Rat>& M, const std::vector<RatVector>& gens) {
  PBWContext& ctx = M.ctx();
  SpanTable table;
  std::deque<std::pair<NuVec, RatVector>> work;

  auto insert = [&](const NuVec& nu, const RatVector& v) {
    if (v.is_zero()) return;
    auto [it, fresh] =
        table.spaces.try_emplace(nu, EchelonSpan(ctx.weight_basis(nu).size()));
    if (it->second.add(coords(ctx, nu, v))) work.push_back({nu, v});
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    insert(ctx.drop_of(g.terms[0].first), g);
  }
  while (!work.empty()) {
    auto [nu, v] = std::move(work.front());
    work.pop_front();
    for (std::size_t gi = 0; gi < ctx.gens().size(); ++gi) {
      NuVec target = nu + ctx.gen(gi).drop;
      if (!ctx.window().contains(target)) continue;
      RatVector lowered;
      for (const auto& [m, c] : v.terms)
        lowered.add_scaled(ctx.insert_left(static_cast<uint16_t>(gi), m), c);
      insert(target, lowered);
    }
  }
  return table;
}

}  // namespace vermacrit
