#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vermacrit/pbw.hpp"
#include "vermacrit/verma.hpp"

#include <random>

using namespace vermacrit;

namespace {

struct Lab {
  AffineAlgebra alg;
  PBWContext plus;
  explicit Lab(const std::string& name, TruncationWindow w = {3, 8})
      : alg(build_from_catalog(name)), plus(&alg, w, OrderKind::PlusAdapted) {}
};

AffKey by_label(const AffineAlgebra& A, const std::string& lbl, int deg) {
  for (int i = 0; i < A.g().dim; ++i)
    if (A.g().labels[i] == lbl) return AffKey::loop(i, deg);
  throw std::runtime_error("no such label");
}

Weight generic_critical_weight(const AffineAlgebra& A) {
  std::vector<Rat> v;
  const long primes[] = {7, 11, 13};
  for (int i = 0; i < A.rank(); ++i) v.push_back(Rat(1, primes[i % 3]));
  v.push_back(A.critical_level());
  v.push_back(Rat(0));
  return Weight(std::move(v));
}

}  // namespace

TEST_CASE("weight space dimensions match the multiset oracle") {
  for (const auto& name : {"sl2", "sl(2|1)"}) {
    Lab lab(name, {2, 6});
    TruncationWindow w = lab.plus.window();
    // Every nu in the window grid.
    std::vector<NuVec> grid;
    std::function<void(NuVec&, std::size_t)> gen = [&](NuVec& nu, std::size_t pos) {
      if (pos == nu.size()) {
        if (w.contains(nu)) grid.push_back(nu);
        return;
      }
      for (int c = 0; c <= (pos == 0 ? w.max_delta_degree : w.max_height); ++c) {
        nu[pos] = c;
        if (nu.height() <= w.max_height) gen(nu, pos + 1);
        nu[pos] = 0;
      }
    };
    NuVec nu(static_cast<std::size_t>(lab.alg.rank() + 1));
    gen(nu, 0);
    for (const auto& v : grid)
      CHECK(static_cast<long>(lab.plus.weight_basis(v).size()) ==
            oracle::tau_bruteforce(lab.alg, w, v));
  }
}

TEST_CASE("frozen tau values for sl2-hat") {
  // Oracle-computed: tau(0)=1, tau(delta)=2, tau(2delta)=6.
  Lab lab("sl2", {2, 6});
  NuVec delta = lab.alg.delta_nu();
  CHECK(lab.plus.weight_basis(NuVec(std::vector<int>{0, 0})).size() == 1);
  CHECK(lab.plus.weight_basis(delta).size() == 2);
  CHECK(oracle::tau_bruteforce(lab.alg, lab.plus.window(), delta) == 2);
  CHECK(lab.plus.weight_basis(2 * delta).size() == 6);
  CHECK(oracle::tau_bruteforce(lab.alg, lab.plus.window(), 2 * delta) == 6);
}

TEST_CASE("straightening basics") {
  Lab lab("sl2", {3, 8});
  PBWContext& P = lab.plus;
  const AffineAlgebra& A = lab.alg;

  AffKey f0 = by_label(A, "f1", 0), h1m = by_label(A, "h1", -1), h2m = by_label(A, "h1", -2);
  int gf = P.gen_index(f0), gh1 = P.gen_index(h1m), gh2 = P.gen_index(h2m);
  REQUIRE(gf >= 0);
  REQUIRE(gh1 >= 0);
  REQUIRE(gh2 >= 0);

  // Already-ordered monomial: f(0)^2 built by repeated insertion.
  RatVector v = P.insert_left(static_cast<uint16_t>(gf), P.one());
  REQUIRE(v.terms.size() == 1);
  RatVector v2;
  for (const auto& [m, c] : v.terms) v2.add_scaled(P.insert_left(static_cast<uint16_t>(gf), m), c);
  REQUIRE(v2.terms.size() == 1);
  CHECK(v2.terms[0].second == 1);
  CHECK(P.mono(v2.terms[0].first).f.size() == 1);
  CHECK(P.mono(v2.terms[0].first).f[0].second == 2);

  // Commuting H_- generators: h(-1)h(-2) = h(-2)h(-1).
  auto prod = [&](int a, int b) {
    RatVector r = P.insert_left(static_cast<uint16_t>(b), P.one());
    RatVector out;
    for (const auto& [m, c] : r.terms) out.add_scaled(P.insert_left(static_cast<uint16_t>(a), m), c);
    return out;
  };
  RatVector p12 = prod(gh1, gh2), p21 = prod(gh2, gh1);
  REQUIRE(p12.terms.size() == 1);
  CHECK(p12.terms.size() == p21.terms.size());
  CHECK(p12.terms[0].first == p21.terms[0].first);
  CHECK(p12.terms[0].second == p21.terms[0].second);

  // Straightening an out-of-order product e(-1) after f(0): f(0)*e(-1)
  // reverses to normal order with a bracket correction.
  AffKey em1 = by_label(A, "e1", -1);
  int ge = P.gen_index(em1);
  RatVector w = P.insert_left(static_cast<uint16_t>(ge), P.one());
  RatVector fw;
  for (const auto& [m, c] : w.terms) fw.add_scaled(P.insert_left(static_cast<uint16_t>(gf), m), c);
  // f(0) e(-1) = +- e(-1) f(0) + [f(0), e(-1)] with [f,e](-1) = -h(-1).
  bool has_h = false, has_ef = false;
  for (const auto& [m, c] : fw.terms) {
    const Mono& mm = P.mono(m);
    if (mm.f.size() == 1 && mm.f[0].first == gh1) {
      has_h = true;
      CHECK(c == -1);
    }
    if (mm.f.size() == 2) has_ef = true;
  }
  CHECK(has_h);
  CHECK(has_ef);
}

TEST_CASE("odd generators square to half brackets") {
  Lab lab("sl(2|1)", {2, 6});
  PBWContext& P = lab.plus;
  AffKey f2 = by_label(lab.alg, "f2", 0);
  int g = P.gen_index(f2);
  REQUIRE(g >= 0);
  // [f2, f2] = 0 in sl(2|1) (isotropic odd root), so f2^2 = 0.
  RatVector v = P.insert_left(static_cast<uint16_t>(g), P.one());
  RatVector v2;
  for (const auto& [m, c] : v.terms) v2.add_scaled(P.insert_left(static_cast<uint16_t>(g), m), c);
  CHECK(v2.is_zero());
}

TEST_CASE("reorder round trip") {
  Lab lab("sl2", {2, 6});
  PBWContext minus(&lab.alg, lab.plus.window(), OrderKind::MinusAdapted);
  NuVec delta = lab.alg.delta_nu();
  for (MonoId m : lab.plus.weight_basis(2 * delta)) {
    RatVector v;
    v.add(m, Rat(1));
    RatVector there = reorder(v, lab.plus, minus);
    RatVector back = reorder(there, minus, lab.plus);
    REQUIRE(back.terms.size() == 1);
    CHECK(back.terms[0].first == m);
    CHECK(back.terms[0].second == 1);
  }
}

TEST_CASE("module axiom on random pairs") {
  // act(u, act(w, v)) - (-1)^{p(u)p(w)} act(w, act(u, v)) = act([u,w], v).
  for (const auto& name : {"sl2", "sl(2|1)"}) {
    Lab lab(name, {2, 6});
    VermaModule<Rat> M(&lab.plus, generic_critical_weight(lab.alg));
    const auto& g = lab.alg.g();

    std::mt19937 rng(20240811);
    std::vector<AffKey> pool;
    for (int i = 0; i < g.dim; ++i)
      for (int m = -2; m <= 2; ++m) pool.push_back(AffKey::loop(i, m));
    pool.push_back(AffKey::central());
    pool.push_back(AffKey::derivation());

    NuVec delta = lab.alg.delta_nu();
    const auto& basis = lab.plus.weight_basis(delta);
    for (int trial = 0; trial < 60; ++trial) {
      AffKey u = pool[rng() % pool.size()];
      AffKey w = pool[rng() % pool.size()];
      MonoId m = basis[rng() % basis.size()];
      // Skip when intermediate weights leave the window.
      NuVec du = lab.alg.weight_nu(u), dw = lab.alg.weight_nu(w);
      NuVec base = delta;
      auto ok = [&](const NuVec& x) { return x.nonneg() && lab.plus.window().contains(x); };
      if (!ok(base - du) || !ok(base - dw) || !ok(base - du - dw)) continue;

      GradedVector<Rat> vm;
      vm.add(m, Rat(1));
      GradedVector<Rat> lhs = M.act(u, M.act(w, vm));
      GradedVector<Rat> rhs1 = M.act(w, M.act(u, vm));
      Rat sign(koszul_sign(lab.alg.parity(u), lab.alg.parity(w)));
      GradedVector<Rat> rhs = M.act_elt(lab.alg.bracket(u, w), vm);
      rhs.add_scaled(rhs1, sign);
      CHECK(lhs.terms == rhs.terms);
    }
  }
}

TEST_CASE("basic Verma relations") {
  Lab lab("sl2", {2, 6});
  VermaModule<Rat> M(&lab.plus, generic_critical_weight(lab.alg));
  const AffineAlgebra& A = lab.alg;

  // e1(0) f1(0) v = lambda(h1) v.
  AffKey e0 = by_label(A, "e1", 0), f0 = by_label(A, "f1", 0), h1 = by_label(A, "h1", 0);
  GradedVector<Rat> unit;
  unit.add(lab.plus.one(), Rat(1));
  auto fv = M.act(f0, unit);
  auto efv = M.act(e0, fv);
  REQUIRE(efv.terms.size() == 1);
  CHECK(efv.terms[0].first == lab.plus.one());
  CHECK(efv.terms[0].second == Rat(1, 7));

  // K scales by the level everywhere.
  auto kv = M.act(AffKey::central(), fv);
  CHECK(kv.terms[0].second == Rat(-2));

  // h(1) h(-1) v = (h|h) lambda(K) v = 2 lambda(K) v (pairing lemma, m=1).
  auto hv = M.act(by_label(A, "h1", -1), unit);
  auto hhv = M.act(by_label(A, "h1", 1), hv);
  REQUIRE(hhv.terms.size() == 1);
  CHECK(hhv.terms[0].second == Rat(-4));
  (void)h1;
}

TEST_CASE("shapovalov pair basics") {
  Lab lab("sl2", {2, 6});
  Weight lam = generic_critical_weight(lab.alg);
  VermaModule<Rat> M(&lab.plus, lam);

  GradedVector<Rat> unit;
  unit.add(lab.plus.one(), Rat(1));
  CHECK(M.shapovalov_pair(lab.plus.one(), unit) == 1);

  AffKey f0 = by_label(lab.alg, "f1", 0);
  auto fv = M.act(f0, unit);
  CHECK(M.shapovalov_pair(fv.terms[0].first, fv) == Rat(1, 7));

  CHECK_THROWS_AS(M.shapovalov_pair(lab.plus.one(), fv), WeightMismatch);
}
