#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vermacrit/affine.hpp"
#include "vermacrit/finite_algebra.hpp"

using namespace vermacrit;

namespace {

int find_label(const FiniteSuperAlgebra& g, const std::string& name) {
  for (int i = 0; i < g.dim; ++i)
    if (g.labels[i] == name) return i;
  return -1;
}

}  // namespace

TEST_CASE("catalog shapes") {
  FiniteSuperAlgebra sl2 = build_from_catalog("sl2");
  CHECK(sl2.dim == 3);
  CHECK(sl2.rank == 1);
  CHECK(sl2.chevalley.size() == 1);

  FiniteSuperAlgebra sl3 = build_from_catalog("sl3");
  CHECK(sl3.dim == 8);
  CHECK(sl3.chevalley.size() == 2);

  FiniteSuperAlgebra sl21 = build_from_catalog("sl(2|1)");
  CHECK(sl21.dim == 8);
  int odd = 0;
  for (int p : sl21.parity) odd += p;
  CHECK(odd == 4);
  // Supertrace form: (e2|f2) = str(E23 E32) = str(E22) = 1, and the odd
  // simple root is isotropic.
  int e2 = sl21.chevalley[1].first, f2 = sl21.chevalley[1].second;
  CHECK(sl21.form[e2][f2] == 1);
  CHECK(sl21.parity[e2] == 1);

  CHECK_THROWS_AS(build_from_catalog("e8"), UnknownAlgebra);
}

TEST_CASE("affine brackets") {
  AffineAlgebra A(build_from_catalog("sl2"));
  const auto& g = A.g();
  int e = find_label(g, "e1"), f = find_label(g, "f1"), h = find_label(g, "h1");

  // [e(1), f(-1)] = h(0) + (e|f) K with (e|f) = 1.
  AffElt r = A.bracket(AffKey::loop(e, 1), AffKey::loop(f, -1));
  REQUIRE(r.terms.size() == 2);
  Rat hc(0), kc(0);
  for (const auto& t : r.terms) {
    if (t.key.kind == AffKey::K) kc = t.coef;
    if (t.key.kind == AffKey::Loop && t.key.base == h && t.key.deg == 0) hc = t.coef;
  }
  CHECK(hc == 1);
  CHECK(kc == 1);

  // [h(2), h(-2)] = 2 (h|h) K = 4K.
  AffElt r2 = A.bracket(AffKey::loop(h, 2), AffKey::loop(h, -2));
  REQUIRE(r2.terms.size() == 1);
  CHECK(r2.terms[0].key.kind == AffKey::K);
  CHECK(r2.terms[0].coef == 4);

  // K is central.
  for (int i = 0; i < g.dim; ++i)
    for (int m = -2; m <= 2; ++m)
      CHECK(A.bracket(AffKey::central(), AffKey::loop(i, m)).is_zero());

  // [D, a(m)] = m a(m).
  AffElt rd = A.bracket(AffKey::derivation(), AffKey::loop(e, -3));
  REQUIRE(rd.terms.size() == 1);
  CHECK(rd.terms[0].coef == -3);
}

TEST_CASE("affine validity within |m| <= 2") {
  for (const auto& name : catalog_names()) {
    AffineAlgebra A(build_from_catalog(name));
    CHECK_NOTHROW(A.validate(2));
  }
}

TEST_CASE("rho and the critical level") {
  AffineAlgebra sl2(build_from_catalog("sl2"));
  CHECK(sl2.dual_coxeter() == 2);
  CHECK(sl2.critical_level() == -2);

  AffineAlgebra sl3(build_from_catalog("sl3"));
  CHECK(sl3.dual_coxeter() == 3);

  AffineAlgebra sl21(build_from_catalog("sl(2|1)"));
  CHECK(sl21.dual_coxeter() == 1);

  // (rho, alpha_i) = (alpha_i, alpha_i)/2 for every affine simple root.
  for (int i = 0; i <= sl21.rank(); ++i) {
    const auto& a = sl21.simple_root_fn(i);
    CHECK(sl21.fn_pair(sl21.rho_hat(), a) == sl21.fn_pair(a, a) / 2);
  }

  // h_delta = K and (D|h_delta) = 1: dual of delta has K-coordinate 1 only.
  auto hd = sl2.dual_element(sl2.delta_fn());
  CHECK(hd[0] == 0);
  CHECK(hd[1] == 1);  // K coordinate
  CHECK(hd[2] == 0);

  // Critical test: level -h_vee iff (lambda+rho, delta) = 0.
  Weight lam(std::vector<Rat>{Rat(1, 7), Rat(-2), Rat(0)});
  CHECK(sl2.is_critical(lam));
  Weight lam2(std::vector<Rat>{Rat(1, 7), Rat(0), Rat(0)});
  CHECK_FALSE(sl2.is_critical(lam2));
}

TEST_CASE("root classification") {
  AffineAlgebra A(build_from_catalog("sl2"));
  TruncationWindow w{2, 6};
  NuVec delta = A.delta_nu();
  CHECK(A.classify_root(delta, w) == RootKind::Imaginary);
  NuVec alpha1(std::vector<int>{0, 1});
  CHECK(A.classify_root(alpha1, w) == RootKind::Real);
  NuVec dma = delta - alpha1;  // delta - alpha_1
  CHECK(A.classify_root(dma, w) == RootKind::Real);
  CHECK((A.fn_pair(A.functional_of_nu(dma), A.functional_of_nu(dma))) == 2);
  CHECK_THROWS_AS(A.classify_root(NuVec(std::vector<int>{1, 3}), w), NotARoot);

  // Imaginary iff the form with every root vanishes.
  for (const auto& r : A.positive_roots(w)) {
    bool orth = true;
    for (const auto& r2 : A.positive_roots(w))
      if (!is_zero(A.fn_pair(A.functional_of_nu(r.nu), A.functional_of_nu(r2.nu)))) orth = false;
    CHECK(orth == r.imaginary);
  }
}

TEST_CASE("sigma is the naive anti-involution") {
  for (const auto& name : catalog_names()) {
    AffineAlgebra A(build_from_catalog(name));
    const auto& g = A.g();
    // sigma fixes hhat.
    CHECK(A.sigma(AffKey::central()).first == AffKey::central());
    CHECK(A.sigma(AffKey::derivation()).first == AffKey::derivation());
    for (int j = 0; j < A.rank(); ++j) {
      auto [k, c] = A.sigma(AffKey::loop(g.cartan[j], 0));
      CHECK(k == AffKey::loop(g.cartan[j], 0));
      CHECK(c == 1);
    }
    // sigma(e_i) = f_i on all affine Chevalley generators.
    for (const auto& [e, f] : A.chevalley()) {
      auto [k, c] = A.sigma(e);
      CHECK(k == f);
      CHECK(c == 1);
    }
    // Involution on the whole basis, all degrees in range.
    for (int i = 0; i < g.dim; ++i)
      for (int m = -3; m <= 3; ++m) {
        auto [k1, c1] = A.sigma(AffKey::loop(i, m));
        auto [k2, c2] = A.sigma(k1);
        CHECK(k2 == AffKey::loop(i, m));
        CHECK(c1 * c2 == 1);
      }
    // sigma swaps the splits: sigma(N^+) = N^-_-, sigma(N^-_-) = N^+.
    for (int i = 0; i < g.dim; ++i)
      for (int m = -3; m <= 3; ++m) {
        AffKey k = AffKey::loop(i, m);
        auto [sk, sc] = A.sigma(k);
        CHECK(A.in_n_minus_hat(sk) == A.in_n_hat(k));
        CHECK(A.split_block(sk) == (A.split_block(k) == SplitBlock::NPlus
                                        ? SplitBlock::NMinus
                                        : A.split_block(k) == SplitBlock::NMinus
                                              ? SplitBlock::NPlus
                                              : A.split_block(k)));
      }
  }
}

TEST_CASE("pairing lemma and the Heisenberg split") {
  for (const auto& name : catalog_names()) {
    AffineAlgebra A(build_from_catalog(name));
    const auto& g = A.g();
    // [x, y] = m (x|y) K for x in Htilde_m, y in Htilde_{-m}.
    for (int m = 1; m <= 4; ++m)
      for (int i = 0; i < A.rank(); ++i)
        for (int j = 0; j < A.rank(); ++j) {
          AffKey x = AffKey::loop(g.cartan[i], m), y = AffKey::loop(g.cartan[j], -m);
          AffElt br = A.bracket(x, y);
          Rat expect = Rat(m) * A.form_pair(x, y);
          if (is_zero(expect)) {
            CHECK(br.is_zero());
          } else {
            REQUIRE(br.terms.size() == 1);
            CHECK(br.terms[0].key.kind == AffKey::K);
            CHECK(br.terms[0].coef == expect);
          }
        }
    // H_- is purely even and abelian.
    for (int m = 1; m <= 3; ++m)
      for (int k = 1; k <= 3; ++k)
        for (int i = 0; i < A.rank(); ++i)
          for (int j = 0; j < A.rank(); ++j) {
            CHECK(g.parity[g.cartan[i]] == 0);
            if (m != k || true)
              CHECK(A.bracket(AffKey::loop(g.cartan[i], -m), AffKey::loop(g.cartan[j], -k))
                        .is_zero());
          }
    // N^+_- closed under bracket.
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < g.dim; ++j)
        for (int m = 1; m <= 2; ++m)
          for (int k = 1; k <= 2; ++k) {
            AffKey x = AffKey::loop(i, -m), y = AffKey::loop(j, -k);
            if (A.split_block(x) != SplitBlock::NPlus || A.split_block(y) != SplitBlock::NPlus)
              continue;
            for (const auto& t : A.bracket(x, y).terms)
              CHECK(A.split_block(t.key) == SplitBlock::NPlus);
          }
  }
}
