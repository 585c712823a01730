#pragma once

#include "vermacrit/linalg.hpp"
#include "vermacrit/pbw.hpp"

#include <optional>
#include <unordered_map>

namespace vermacrit {

// Verma module M(lambda) materialized inside the window, identified with
// U(n_-) on the PBW basis of the context. The coefficient ring R carries
// the highest weight (Rat, Q[x] for lambda + x xi, or the local ring).
template <typename R>
class VermaModule {
 public:
  VermaModule(PBWContext* ctx, WeightT<R> lambda) : ctx_(ctx), lambda_(std::move(lambda)) {}

  PBWContext& ctx() const { return *ctx_; }
  const AffineAlgebra& algebra() const { return ctx_->algebra(); }
  const WeightT<R>& lambda() const { return lambda_; }

  // Action of a basis element of the affinization on m v_lambda.
  const GradedVector<R>& act1(const AffKey& u, MonoId m) {
    const uint64_t key = pack(u, m);
    auto it = act_cache_.find(key);
    if (it != act_cache_.end()) return it->second;
    GradedVector<R> out = act1_compute(u, m);
    return act_cache_.emplace(key, std::move(out)).first->second;
  }

  GradedVector<R> act(const AffKey& u, const GradedVector<R>& v) {
    GradedVector<R> out;
    for (const auto& [m, c] : v.terms) out.add_scaled(act1(u, m), c);
    return out;
  }

  GradedVector<R> act_elt(const AffElt& u, const GradedVector<R>& v) {
    GradedVector<R> out;
    for (const auto& t : u.terms) out.add_scaled(act(t.key, v), RingOps<R>::from_rat(t.coef));
    return out;
  }

  // sigma(u) v for a PBW monomial u; the work behind the Shapovalov form.
  GradedVector<R> act_sigma_mono(MonoId u, GradedVector<R> v) {
    const Mono um = ctx_->mono(u);
    R scale = RingOps<R>::one();
    for (auto [g, e] : um.f) {
      auto [sk, sc] = algebra().sigma(ctx_->gen(g).key);
      for (uint16_t rep = 0; rep < e; ++rep) {
        v = act(sk, v);
        scale = scale * RingOps<R>::from_rat(sc);
      }
    }
    return v * scale;
  }

  // S(u, v) = HC(sigma(u) v) evaluated at lambda; u a basis monomial, v a
  // vector of the same weight drop.
  R shapovalov_pair(MonoId u, const GradedVector<R>& v) {
    if (!v.is_zero() && !(ctx_->drop_of(u) == ctx_->drop_of(v.terms[0].first)))
      throw WeightMismatch("shapovalov_pair: weights differ");
    GradedVector<R> w = act_sigma_mono(u, v);
    const MonoId unit = ctx_->one();
    for (const auto& [m, c] : w.terms)
      if (m == unit) return c;
    return RingOps<R>::zero();
  }

  // Gram matrix of the Shapovalov form on the weight space of drop nu.
  Matrix<R> gram_matrix(const NuVec& nu) {
    const auto& basis = ctx_->weight_basis(nu);
    const std::size_t n = basis.size();
    Matrix<R> out(n, std::vector<R>(n, RingOps<R>::zero()));
    for (std::size_t j = 0; j < n; ++j) {
      GradedVector<R> vj;
      vj.add(basis[j], RingOps<R>::one());
      for (std::size_t i = 0; i <= j; ++i) {
        out[i][j] = shapovalov_pair(basis[i], vj);
        out[j][i] = out[i][j];  // the naive anti-involution gives a symmetric form
      }
    }
    return out;
  }

  bool generic_certified = false;

 private:
  static uint64_t pack(const AffKey& u, MonoId m) {
    return (uint64_t(u.kind) << 62) | (uint64_t(uint8_t(u.base)) << 54) |
           (uint64_t(uint16_t(u.deg + 512)) << 38) | uint64_t(m);
  }

  R cartan_eval(int base, MonoId m) const {
    const AffineAlgebra& A = algebra();
    int pos = -1;
    for (int j = 0; j < A.rank(); ++j)
      if (A.g().cartan[j] == base) pos = j;
    NuVec drop = ctx_->drop_of(m);
    Rat drop_val(0);
    for (int i = 0; i <= A.rank(); ++i)
      if (drop[i] != 0) drop_val += Rat(drop[i]) * A.simple_root_fn(i)[pos];
    return lambda_.v[pos] - RingOps<R>::from_rat(drop_val);
  }

  GradedVector<R> act1_compute(const AffKey& u, MonoId m) {
    GradedVector<R> out;
    const AffineAlgebra& A = algebra();
    const int rk = A.rank();
    if (u.kind == AffKey::K) {
      out.add(m, lambda_.v[rk]);
      return out;
    }
    if (u.kind == AffKey::D) {
      R val = lambda_.v[rk + 1] - RingOps<R>::from_rat(Rat(ctx_->drop_of(m).delta_degree()));
      out.add(m, val);
      return out;
    }
    if (A.in_n_minus_hat(u)) {
      int gi = ctx_->gen_index(u);
      if (gi < 0) throw WindowExceeded("act: lowering leaves the window");
      return lift<R>(ctx_->insert_left(static_cast<uint16_t>(gi), m));
    }
    if (u.deg == 0 && A.g().root_sign(u.base) == 0) {
      out.add(m, cartan_eval(u.base, m));
      return out;
    }
    // Raising element: commute through the first factor, kill the vacuum.
    const Mono mm = ctx_->mono(m);
    if (mm.f.empty()) return out;
    const auto [f, e] = mm.f[0];
    Mono rest = mm;
    if (e > 1)
      rest.f[0].second--;
    else
      rest.f.erase(rest.f.begin());
    const MonoId rest_id = ctx_->intern(rest);

    const Rat sign(koszul_sign(A.parity(u), ctx_->gen(f).parity));
    const GradedVector<R>& tail = act1(u, rest_id);
    for (const auto& [mid, c] : tail.terms)
      out.add_scaled(lift<R>(ctx_->insert_left(f, mid)), c * RingOps<R>::from_rat(sign));
    AffElt br = A.bracket(u, ctx_->gen(f).key);
    for (const auto& t : br.terms)
      out.add_scaled(act1(t.key, rest_id), RingOps<R>::from_rat(t.coef));
    return out;
  }

  PBWContext* ctx_;
  WeightT<R> lambda_;
  std::unordered_map<uint64_t, GradedVector<R>> act_cache_;
};

// Coordinates of v in the PBW basis of its weight space.
template <typename R>
std::vector<R> coords(PBWContext& ctx, const NuVec& nu, const GradedVector<R>& v) {
  const auto& basis = ctx.weight_basis(nu);
  std::vector<R> out(basis.size(), RingOps<R>::zero());
  for (const auto& [m, c] : v.terms) {
    int pos = ctx.basis_position(nu, m);
    if (pos < 0) throw WeightMismatch("coords: monomial outside the weight space " + nu.str());
    out[pos] = c;
  }
  return out;
}

template <typename R>
GradedVector<R> from_coords(PBWContext& ctx, const NuVec& nu, const std::vector<R>& c) {
  const auto& basis = ctx.weight_basis(nu);
  GradedVector<R> v;
  for (std::size_t i = 0; i < c.size(); ++i) v.add(basis[i], c[i]);
  return v;
}

bool is_pure_H(PBWContext& ctx, MonoId m);

// Pure H_- read-off in the context's own ordering: HC_+ for a plus-adapted
// context, HC_- for a minus-adapted one.
template <typename R>
GradedVector<R> hc_project(PBWContext& ctx, const GradedVector<R>& v) {
  GradedVector<R> out;
  for (const auto& [m, c] : v.terms)
    if (is_pure_H(ctx, m)) out.add(m, c);
  return out;
}

// HC_+ : read-off of the pure H_- terms in the plus-adapted basis. Throws
// NotImaginaryWeight when v is not in a lambda - s delta weight space.
RatVector hc_plus(PBWContext& plus, const RatVector& v);
// HC_- via re-expression in the minus-adapted basis; result is returned as
// pure H_- monomials of the plus context.
RatVector hc_minus(PBWContext& plus, PBWContext& minus, const RatVector& v);

// dim S_{-s delta}: monomials in H_- generators of drop s delta.
std::vector<MonoId> s_basis(PBWContext& plus, int s);

// Basis of the space of singular vectors at weight lambda - s delta:
// nullspace of the stacked affine Chevalley raising operators.
std::vector<RatVector> singular_vectors(VermaModule<Rat>& M, int s);

// Nullspace at lambda - s delta of a caller-chosen family of raising
// elements (used to cross-check Lemma-style annihilation statements).
std::vector<RatVector> annihilated_by(VermaModule<Rat>& M, int s, const std::vector<AffKey>& ops);

struct GenericityReport {
  bool critical = false;
  bool generic = true;
  // Violated hyperplanes: a real positive root alpha and k >= 1 with
  // 2(lambda + rho, alpha) = k (alpha, alpha).
  std::vector<std::pair<NuVec, int>> witnesses;
  bool ok() const { return critical && generic; }
};

GenericityReport is_generic_critical(const AffineAlgebra& alg, const Weight& lam,
                                     const TruncationWindow& w);
// lambda in Lambda: no real-root Shapovalov factor vanishes in the window
// (the level may or may not be critical).
bool in_lambda_set(const AffineAlgebra& alg, const Weight& lam, const TruncationWindow& w);

// phi_v(w) for the [g,g]-endomorphism phi_v with phi_v(v_lambda) = v.
RatVector singular_product(VermaModule<Rat>& M, const RatVector& v, const RatVector& w);

// Graded span of U(n_-) applied to the generators, within the window.
struct SpanTable {
  std::unordered_map<NuVec, EchelonSpan, NuVecHash> spaces;
  int dim_at(const NuVec& nu) const {
    auto it = spaces.find(nu);
    return it == spaces.end() ? 0 : static_cast<int>(it->second.dim());
  }
};
SpanTable submodule_span(VermaModule<Rat>& M, const std::vector<RatVector>& gens);

}  // namespace vermacrit
