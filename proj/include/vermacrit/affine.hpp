#pragma once

#include "vermacrit/finite_algebra.hpp"
#include "vermacrit/lattice.hpp"
#include "vermacrit/linalg.hpp"
#include "vermacrit/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vermacrit {

// A basis element of the affinization: x_base t^deg, or K, or D.
struct AffKey {
  enum Kind { Loop = 0, K = 1, D = 2 };
  Kind kind = Loop;
  int base = 0;
  int deg = 0;

  static AffKey loop(int base, int deg) { return {Loop, base, deg}; }
  static AffKey central() { return {K, 0, 0}; }
  static AffKey derivation() { return {D, 0, 0}; }

  bool operator==(const AffKey& o) const {
    return kind == o.kind && base == o.base && deg == o.deg;
  }
  bool operator<(const AffKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (base != o.base) return base < o.base;
    return deg < o.deg;
  }
};

struct AffTerm {
  AffKey key;
  Rat coef;
};

// Sparse element of the affinization.
struct AffElt {
  std::vector<AffTerm> terms;
  void add(const AffKey& k, const Rat& c);
  bool is_zero() const { return terms.empty(); }
};

// Weight: values on the fixed basis (h_1..h_r, K, D) of hhat, over a ring.
template <typename R>
struct WeightT {
  std::vector<R> v;
  WeightT() = default;
  explicit WeightT(std::vector<R> vals) : v(std::move(vals)) {}
  const R& level(int rank) const { return v[rank]; }
};
using Weight = WeightT<Rat>;

enum class RootKind { Real, Imaginary };

struct PositiveRoot {
  NuVec nu;        // coordinates on the affine simple roots
  int parity = 0;  // 0 even, 1 odd
  int mult = 1;    // root-space dimension
  bool imaginary = false;
};

// Position of an affine basis element in the triangular splits
// n_- = N^+_- + H_- + N^-_- and n = N^- + H + N^+.
enum class SplitBlock { NPlus, H, NMinus, Other };

class AffineAlgebra {
 public:
  explicit AffineAlgebra(FiniteSuperAlgebra base);

  const FiniteSuperAlgebra& g() const { return g_; }
  int rank() const { return g_.rank; }
  int hdim() const { return g_.rank + 2; }

  // [a, b] with the affinized relations.
  AffElt bracket(const AffKey& a, const AffKey& b) const;
  // Invariant form extended to the affinization.
  Rat form_pair(const AffKey& a, const AffKey& b) const;
  int parity(const AffKey& k) const { return k.kind == AffKey::Loop ? g_.parity[k.base] : 0; }

  // The naive anti-involution: x t^m -> sigma_g(x) t^{-m}, fixes K and D.
  std::pair<AffKey, Rat> sigma(const AffKey& k) const;

  // Weight of a basis element on the affine simple roots (K, D weight 0).
  NuVec weight_nu(const AffKey& k) const;

  // Functionals on hhat are value vectors on (h_1..h_r, K, D).
  std::vector<Rat> functional_of_nu(const NuVec& nu) const;
  const std::vector<Rat>& simple_root_fn(int i) const { return simple_root_fn_[i]; }
  const std::vector<Rat>& delta_fn() const { return delta_fn_; }
  const NuVec& delta_nu() const { return delta_nu_; }

  // Form on hhat^* between two rational functionals.
  Rat fn_pair(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  // (lambda, beta) for a weight over a ring and a rational functional.
  template <typename R>
  R weight_fn_pair(const WeightT<R>& lam, const std::vector<Rat>& beta) const {
    std::vector<Rat> hb = dual_element(beta);
    R acc = RingOps<R>::zero();
    for (int i = 0; i < hdim(); ++i)
      if (!is_zero(hb[i])) acc += lam.v[i] * RingOps<R>::from_rat(hb[i]);
    return acc;
  }
  // Coordinates of h_beta = form^{-1}(beta).
  std::vector<Rat> dual_element(const std::vector<Rat>& beta) const;

  const std::vector<Rat>& rho_hat() const { return rho_hat_; }
  const Rat& dual_coxeter() const { return dual_coxeter_; }
  Rat critical_level() const { return -dual_coxeter_; }

  // (lambda + rho, beta) over the weight's ring.
  template <typename R>
  R lam_rho_pair(const WeightT<R>& lam, const std::vector<Rat>& beta) const {
    R acc = weight_fn_pair(lam, beta);
    acc += RingOps<R>::from_rat(fn_pair(rho_hat_, beta));
    return acc;
  }

  template <typename R>
  bool is_critical(const WeightT<R>& lam) const {
    return RingOps<R>::is_zero(lam_rho_pair(lam, delta_fn_));
  }

  // Affine Chevalley pairs (e_i, f_i), i = 0..rank; i = 0 is
  // (x_{-theta} t, x_{theta} t^{-1}).
  const std::vector<std::pair<AffKey, AffKey>>& chevalley() const { return chevalley_; }

  // Positive roots within the window, as a multiset with multiplicities.
  std::vector<PositiveRoot> positive_roots(const TruncationWindow& w) const;

  RootKind classify_root(const NuVec& alpha, const TruncationWindow& w) const;

  SplitBlock split_block(const AffKey& k) const;
  bool in_n_minus_hat(const AffKey& k) const;  // member of n_-
  bool in_n_hat(const AffKey& k) const;        // member of n

  std::string label(const AffKey& k) const;

  // Exhaustive checks within |deg| <= max_deg; throws ValidationFailure.
  void validate(int max_deg) const;

 private:
  FiniteSuperAlgebra g_;
  Matrix<Rat> form_h_;
  Matrix<Rat> form_h_inv_;
  std::vector<std::vector<Rat>> simple_root_fn_;  // alpha_0 .. alpha_rank
  std::vector<Rat> delta_fn_;
  NuVec delta_nu_;
  std::vector<Rat> rho_hat_;
  Rat dual_coxeter_;
  std::vector<std::pair<AffKey, AffKey>> chevalley_;
};

}  // namespace vermacrit
