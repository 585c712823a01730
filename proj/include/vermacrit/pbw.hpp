#pragma once

#include "vermacrit/affine.hpp"
#include "vermacrit/errors.hpp"
#include "vermacrit/lattice.hpp"
#include "vermacrit/ring.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace vermacrit {

enum class OrderKind { PlusAdapted, MinusAdapted };

// One generator of n_- inside the window.
struct NegGen {
  AffKey key;
  NuVec drop;  // weight drop (= -weight), nonneg coordinates
  int parity = 0;
  SplitBlock block = SplitBlock::Other;
  std::string label;
};

// PBW monomial: factors (generator index, exponent), generator indices
// strictly increasing in the context's global ordering.
struct Mono {
  std::vector<std::pair<uint16_t, uint16_t>> f;
  bool operator==(const Mono& o) const { return f == o.f; }
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto [g, e] : m.f) h = (h ^ (std::size_t(g) << 16 ^ e)) * 0x100000001b3ULL;
    return h;
  }
};

using MonoId = uint32_t;

// Sparse linear combination of PBW monomials of a common weight.
template <typename R>
struct GradedVector {
  std::vector<std::pair<MonoId, R>> terms;  // MonoId ascending, no zero coeffs

  bool is_zero() const { return terms.empty(); }

  void add(MonoId m, const R& c) {
    if (RingOps<R>::is_zero(c)) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), m,
                               [](const auto& t, MonoId i) { return t.first < i; });
    if (it != terms.end() && it->first == m) {
      it->second += c;
      if (RingOps<R>::is_zero(it->second)) terms.erase(it);
    } else {
      terms.insert(it, {m, c});
    }
  }
  void add_scaled(const GradedVector& o, const R& s) {
    if (RingOps<R>::is_zero(s)) return;
    for (const auto& [m, c] : o.terms) add(m, c * s);
  }
  GradedVector& operator+=(const GradedVector& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
  }
  GradedVector operator*(const R& s) const {
    GradedVector r;
    if (RingOps<R>::is_zero(s)) return r;
    r.terms = terms;
    for (auto& [m, c] : r.terms) c = c * s;
    return r;
  }
};

using RatVector = GradedVector<Rat>;

// PBW basis machinery for one (algebra, window, ordering) triple: generator
// tables, monomial interning, straightening into normal form, and the left
// multiplication by n_- generators. The straightening cache supports
// concurrent readers with serialized insertion.
class PBWContext {
 public:
  PBWContext(const AffineAlgebra* alg, TruncationWindow window, OrderKind order);

  const AffineAlgebra& algebra() const { return *alg_; }
  const TruncationWindow& window() const { return window_; }
  OrderKind order() const { return order_; }
  const std::vector<NegGen>& gens() const { return gens_; }

  // Generator index of a basis element of n_-; -1 when outside the window.
  int gen_index(const AffKey& k) const;
  const NegGen& gen(int i) const { return gens_[i]; }

  MonoId intern(const Mono& m);
  const Mono& mono(MonoId id) const;
  MonoId one();  // the empty monomial

  NuVec drop_of(MonoId m) const;
  int parity_of(MonoId m) const;
  std::string mono_label(MonoId m) const;

  // Normal form of g * m in U(n_-); coefficients are rational.
  const RatVector& insert_left(uint16_t g, MonoId m);

  // Normal form of (the product of a's factors) * b.
  RatVector mono_mul(const Mono& a, MonoId b);
  RatVector vec_mul(const RatVector& a, const RatVector& b);

  // PBW basis of the weight space of drop nu, deterministic order.
  const std::vector<MonoId>& weight_basis(const NuVec& nu);

  // Index of a monomial inside weight_basis(drop); -1 when absent.
  int basis_position(const NuVec& nu, MonoId m);

 private:
  void enumerate(std::size_t gen_pos, NuVec remaining, Mono& acc, std::vector<MonoId>& out);

  const AffineAlgebra* alg_;
  TruncationWindow window_;
  OrderKind order_;
  std::vector<NegGen> gens_;
  std::map<std::pair<int, int>, int> gen_by_key_;  // (base, deg) -> index

  mutable std::shared_mutex mono_mu_;
  std::unordered_map<Mono, MonoId, MonoHash> mono_ids_;
  std::vector<Mono> monos_;

  mutable std::shared_mutex cache_mu_;
  std::unordered_map<uint64_t, RatVector> insert_cache_;

  mutable std::shared_mutex basis_mu_;
  std::unordered_map<NuVec, std::vector<MonoId>, NuVecHash> bases_;
  std::unordered_map<NuVec, std::unordered_map<MonoId, int>, NuVecHash> basis_pos_;
};

// Rebuilds a vector expressed in `from` in the PBW basis of `to` (the two
// contexts must share algebra and window).
RatVector reorder(const RatVector& v, PBWContext& from, PBWContext& to);

template <typename R>
GradedVector<R> lift(const RatVector& v) {
  GradedVector<R> out;
  out.terms.reserve(v.terms.size());
  for (const auto& [m, c] : v.terms) out.terms.push_back({m, RingOps<R>::from_rat(c)});
  return out;
}

}  // namespace vermacrit
