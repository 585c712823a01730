#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vermacrit/linalg.hpp"
#include "vermacrit/local_ring.hpp"
#include "vermacrit/poly.hpp"

using namespace vermacrit;

TEST_CASE("poly arithmetic and valuation") {
  Poly x = Poly::x();
  Poly p = x * x + Rat(3) * x + Poly(Rat(2));  // x^2 + 3x + 2
  Poly q = x + Poly(Rat(1));

  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(-1)) == 0);
  CHECK(Poly::divexact(p, q) == x + Poly(Rat(2)));
  CHECK_THROWS(Poly::divexact(p + Poly(Rat(1)), q));

  Poly v = x * x * (x + Poly(Rat(5)));
  CHECK(v.valuation() == 2);
  CHECK(Poly().valuation() > 1000);
  CHECK((p * v).valuation() == p.valuation() + v.valuation());

  Poly g = Poly::gcd(p, q * (x + Poly(Rat(7))));
  CHECK(g == q);
}

TEST_CASE("poly unit inverse mod x^n") {
  Poly u = Poly(Rat(2)) + Rat(3) * Poly::x();
  Poly inv = u.unit_inverse(6);
  CHECK((u * inv).truncated(6) == Poly(Rat(1)));
  CHECK_THROWS(Poly::x().unit_inverse(4));
}

TEST_CASE("local ring normalizes and guards units") {
  Poly x = Poly::x();
  LocalRat a(x * x + x, x + Poly(Rat(1)));  // x(x+1)/(x+1) = x
  CHECK(a.num() == x);
  CHECK(a.den() == Poly(Rat(1)));
  CHECK(a.valuation() == 1);

  LocalRat b(Poly(Rat(1)), x + Poly(Rat(2)));
  CHECK(b.eval_at_zero() == Rat(1, 2));
  CHECK((a * b).valuation() == 1);
  CHECK_THROWS(LocalRat(Poly(Rat(1)), x));
  CHECK((LocalRat(x * x) / LocalRat(x, x + Poly(Rat(1)))).num() == x * (x + Poly(Rat(1))));
}

TEST_CASE("rational and polynomial determinants agree") {
  // 3x3 with polynomial entries; brute-force expansion as the oracle.
  Poly x = Poly::x();
  Matrix<Poly> m = {{x + Poly(Rat(1)), x, Poly(Rat(2))},
                    {Poly(Rat(3)), x * x, x},
                    {Poly(Rat(1)), Poly(), x + Poly(Rat(4))}};
  auto brute = [&]() {
    Poly det;
    int idx[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    for (int p = 0; p < 6; ++p) {
      Poly term = m[0][idx[p][0]] * m[1][idx[p][1]] * m[2][idx[p][2]];
      det += (p < 3 ? term : -term);
    }
    return det;
  };
  Poly expect = brute();
  CHECK(det_poly_bareiss(m) == expect);
  CHECK(det_poly_interp(m) == expect);

  Matrix<Rat> r = {{Rat(1, 2), Rat(3)}, {Rat(5), Rat(7, 3)}};
  CHECK(det_rat(r) == Rat(1, 2) * Rat(7, 3) - Rat(15));
}

TEST_CASE("rref, nullspace, echelon span") {
  Matrix<Rat> m = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(1), Rat(0), Rat(1)}};
  CHECK(rank(m) == 2);
  auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  // Check A v = 0.
  for (const auto& row : Matrix<Rat>{{Rat(1), Rat(2), Rat(3)}, {Rat(1), Rat(0), Rat(1)}}) {
    Rat acc(0);
    for (int j = 0; j < 3; ++j) acc += row[j] * ns[0][j];
    CHECK(acc == 0);
  }

  EchelonSpan span(3);
  CHECK(span.add({Rat(1), Rat(1), Rat(0)}));
  CHECK(span.add({Rat(0), Rat(1), Rat(1)}));
  CHECK_FALSE(span.add({Rat(1), Rat(2), Rat(1)}));
  CHECK(span.dim() == 2);
  CHECK(span.contains({Rat(2), Rat(3), Rat(1)}));
  CHECK_FALSE(span.contains({Rat(0), Rat(0), Rat(1)}));
}
