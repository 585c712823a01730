#include "vermacrit/pbw.hpp"

#include <algorithm>
#include <mutex>

namespace vermacrit {

namespace {

int block_rank(SplitBlock b, OrderKind order) {
  // Plus-adapted: N^+_- < H_- < N^-_-; minus-adapted swaps the N blocks.
  switch (b) {
    case SplitBlock::NPlus:
      return order == OrderKind::PlusAdapted ? 0 : 2;
    case SplitBlock::H:
      return 1;
    case SplitBlock::NMinus:
      return order == OrderKind::PlusAdapted ? 2 : 0;
    default:
      return 3;
  }
}

}  // namespace

PBWContext::PBWContext(const AffineAlgebra* alg, TruncationWindow window, OrderKind order)
    : alg_(alg), window_(window), order_(order) {
  const auto& g = alg_->g();
  for (int deg = 0; deg >= -window.max_delta_degree; --deg) {
    for (int i = 0; i < g.dim; ++i) {
      AffKey k = AffKey::loop(i, deg);
      if (!alg_->in_n_minus_hat(k)) continue;
      NuVec drop = NuVec(static_cast<std::size_t>(alg_->rank() + 1)) - alg_->weight_nu(k);
      if (!window.contains(drop)) continue;
      gens_.push_back({k, drop, g.parity[i], alg_->split_block(k), alg_->label(k)});
    }
  }
  std::sort(gens_.begin(), gens_.end(), [&](const NegGen& a, const NegGen& b) {
    int ba = block_rank(a.block, order_), bb = block_rank(b.block, order_);
    if (ba != bb) return ba < bb;
    if (a.drop.delta_degree() != b.drop.delta_degree())
      return a.drop.delta_degree() < b.drop.delta_degree();
    return a.key.base < b.key.base;
  });
  for (std::size_t i = 0; i < gens_.size(); ++i)
    gen_by_key_[{gens_[i].key.base, gens_[i].key.deg}] = static_cast<int>(i);
  one();
}

int PBWContext::gen_index(const AffKey& k) const {
  auto it = gen_by_key_.find({k.base, k.deg});
  return it == gen_by_key_.end() ? -1 : it->second;
}

MonoId PBWContext::intern(const Mono& m) {
  {
    std::shared_lock lk(mono_mu_);
    auto it = mono_ids_.find(m);
    if (it != mono_ids_.end()) return it->second;
  }
  std::unique_lock lk(mono_mu_);
  auto [it, fresh] = mono_ids_.try_emplace(m, static_cast<MonoId>(monos_.size()));
  if (fresh) monos_.push_back(m);
  return it->second;
}

const Mono& PBWContext::mono(MonoId id) const {
  std::shared_lock lk(mono_mu_);
  return monos_[id];
}

MonoId PBWContext::one() { return intern(Mono{}); }

NuVec PBWContext::drop_of(MonoId m) const {
  NuVec nu(static_cast<std::size_t>(alg_->rank() + 1));
  Mono mm = mono(m);
  for (auto [g, e] : mm.f) nu += e * gens_[g].drop;
  return nu;
}

int PBWContext::parity_of(MonoId m) const {
  int p = 0;
  Mono mm = mono(m);
  for (auto [g, e] : mm.f) p += gens_[g].parity * e;
  return p & 1;
}

std::string PBWContext::mono_label(MonoId m) const {
  Mono mm = mono(m);
  if (mm.f.empty()) return "1";
  std::string s;
  for (auto [g, e] : mm.f) {
    if (!s.empty()) s += ".";
    s += gens_[g].label;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

const RatVector& PBWContext::insert_left(uint16_t g, MonoId m) {
  const uint64_t key = (uint64_t(g) << 32) | m;
  {
    std::shared_lock lk(cache_mu_);
    auto it = insert_cache_.find(key);
    if (it != insert_cache_.end()) return it->second;
  }

  RatVector result;
  const Mono mm = mono(m);
  if (mm.f.empty()) {
    Mono single;
    single.f.push_back({g, 1});
    result.add(intern(single), Rat(1));
  } else {
    const auto [f, e] = mm.f[0];
    if (g < f) {
      Mono ext = mm;
      ext.f.insert(ext.f.begin(), {g, 1});
      result.add(intern(ext), Rat(1));
    } else if (g == f && gens_[g].parity == 0) {
      Mono ext = mm;
      ext.f[0].second++;
      result.add(intern(ext), Rat(1));
    } else {
      // Either g == f odd (g^2 = [g,g]/2) or g > f (one Koszul swap).
      Mono rest = mm;
      if (e > 1)
        rest.f[0].second--;
      else
        rest.f.erase(rest.f.begin());
      MonoId rest_id = intern(rest);

      if (g == f) {
        AffElt br = alg_->bracket(gens_[g].key, gens_[g].key);
        for (const auto& t : br.terms) {
          int gi = gen_index(t.key);
          if (gi < 0) throw WindowExceeded("straighten: bracket leaves the window");
          result.add_scaled(insert_left(static_cast<uint16_t>(gi), rest_id), t.coef / 2);
        }
      } else {
        RatVector swapped = insert_left(g, rest_id);
        Rat sign(koszul_sign(gens_[g].parity, gens_[f].parity));
        for (const auto& [mid, c] : swapped.terms)
          result.add_scaled(insert_left(f, mid), sign * c);
        AffElt br = alg_->bracket(gens_[g].key, gens_[f].key);
        for (const auto& t : br.terms) {
          int gi = gen_index(t.key);
          if (gi < 0) throw WindowExceeded("straighten: bracket leaves the window");
          result.add_scaled(insert_left(static_cast<uint16_t>(gi), rest_id), t.coef);
        }
      }
    }
  }

  std::unique_lock lk(cache_mu_);
  return insert_cache_.try_emplace(key, std::move(result)).first->second;
}

RatVector PBWContext::mono_mul(const Mono& a, MonoId b) {
  RatVector acc;
  acc.add(b, Rat(1));
  for (std::size_t i = a.f.size(); i-- > 0;) {
    auto [g, e] = a.f[i];
    for (uint16_t rep = 0; rep < e; ++rep) {
      RatVector next;
      for (const auto& [mid, c] : acc.terms) next.add_scaled(insert_left(g, mid), c);
      acc = std::move(next);
    }
  }
  return acc;
}

RatVector PBWContext::vec_mul(const RatVector& a, const RatVector& b) {
  RatVector out;
  for (const auto& [ma, ca] : a.terms) {
    const Mono am = mono(ma);
    for (const auto& [mb, cb] : b.terms) out.add_scaled(mono_mul(am, mb), ca * cb);
  }
  return out;
}

void PBWContext::enumerate(std::size_t gen_pos, NuVec remaining, Mono& acc,
                           std::vector<MonoId>& out) {
  if (remaining.is_zero()) {
    // Remaining generators contribute exponent zero.
    out.push_back(intern(acc));
    return;
  }
  if (gen_pos == gens_.size()) return;
  const NegGen& g = gens_[gen_pos];
  int emax = 0;
  {
    NuVec left = remaining;
    while (left.dominates(g.drop) && !g.drop.is_zero()) {
      left = left - g.drop;
      ++emax;
    }
    if (g.parity == 1) emax = std::min(emax, 1);
  }
  for (int e = emax; e >= 0; --e) {
    if (e > 0) acc.f.push_back({static_cast<uint16_t>(gen_pos), static_cast<uint16_t>(e)});
    NuVec left = remaining - e * g.drop;
    enumerate(gen_pos + 1, left, acc, out);
    if (e > 0) acc.f.pop_back();
  }
}

const std::vector<MonoId>& PBWContext::weight_basis(const NuVec& nu) {
  if (!window_.contains(nu)) throw WindowExceeded("weight_basis: " + nu.str() + " outside window");
  {
    std::shared_lock lk(basis_mu_);
    auto it = bases_.find(nu);
    if (it != bases_.end()) return it->second;
  }
  std::vector<MonoId> out;
  Mono acc;
  enumerate(0, nu, acc, out);
  std::unique_lock lk(basis_mu_);
  auto [it, fresh] = bases_.try_emplace(nu, std::move(out));
  if (fresh) {
    auto& pos = basis_pos_[nu];
    for (std::size_t i = 0; i < it->second.size(); ++i)
      pos[it->second[i]] = static_cast<int>(i);
  }
  return it->second;
}

int PBWContext::basis_position(const NuVec& nu, MonoId m) {
  weight_basis(nu);
  std::shared_lock lk(basis_mu_);
  const auto& pos = basis_pos_.at(nu);
  auto it = pos.find(m);
  return it == pos.end() ? -1 : it->second;
}

RatVector reorder(const RatVector& v, PBWContext& from, PBWContext& to) {
  RatVector out;
  for (const auto& [mid, c] : v.terms) {
    Mono src = from.mono(mid);
    RatVector acc;
    acc.add(to.one(), Rat(1));
    for (std::size_t i = src.f.size(); i-- > 0;) {
      auto [g, e] = src.f[i];
      int tg = to.gen_index(from.gen(g).key);
      if (tg < 0) throw WindowExceeded("reorder: generator outside target window");
      for (uint16_t rep = 0; rep < e; ++rep) {
        RatVector next;
        for (const auto& [mid2, c2] : acc.terms)
          next.add_scaled(to.insert_left(static_cast<uint16_t>(tg), mid2), c2);
        acc = std::move(next);
      }
    }
    out.add_scaled(acc, c);
  }
  return out;
}

}  // namespace vermacrit
