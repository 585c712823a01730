#pragma once

#include "vermacrit/verma.hpp"

namespace vermacrit {

// The degree shift u(j) -> u(j - m) on the loop part.
AffKey shift_T(int m, const AffKey& u);

// Data of one plus- or minus-side construction step for z = a(-m), where a
// is a Cartan direction. The side is read off the module's ordering.
struct IntertwinerProblem {
  int m = 1;             // z = a(-m)
  int cartan_index = 0;  // a = h_{cartan_index + 1}
  bool seed_is_vacuum = true;  // include H in q (valid when H w = 0)
};

template <typename R>
struct PsiSolution {
  std::vector<AffKey> v_basis;          // B' = {a(0)} followed by V cap N^{+/-}
  std::vector<GradedVector<R>> values;  // psi(b*) per element of B'
};

// The unique weight q-homomorphism with psi(a(0)^*) = w, solved degree by
// degree from the equivariance constraints. Throws NoSolution or
// NonUniqueSolution when the linear systems degenerate.
template <typename R>
PsiSolution<R> solve_psi(VermaModule<R>& M, const IntertwinerProblem& P, const GradedVector<R>& w);

template <typename R>
struct ConstructedVector {
  GradedVector<R> v;
  bool hc_checked = false;            // HC(v) = a(-m) HC(w) verified
  bool annihilation_checked = false;  // q-annihilation away from weight m delta verified
};

// v = sum_b T_m(b) psi(b^*) over the weight basis of V.
template <typename R>
ConstructedVector<R> construct_v(VermaModule<R>& M, const IntertwinerProblem& P,
                                 const GradedVector<R>& w);

// HC^{-1}(z) for a monomial z in the H_- generators: iterated construction
// seeded with the vacuum. Results are cached per module.
class HcInverse {
 public:
  explicit HcInverse(VermaModule<LocalRat>* M) : M_(M) {}
  const GradedVector<LocalRat>& of(MonoId z);
  RatVector at_zero(MonoId z);
  VermaModule<LocalRat>& module() { return *M_; }

 private:
  VermaModule<LocalRat>* M_;
  std::unordered_map<MonoId, GradedVector<LocalRat>> cache_;
};

// Extraction of the scalar c in d(m) v = (d|a)(m level + c) v_lambda across
// two levels, with the supertrace evaluation as an independent route.
struct LevelCoefficient {
  Rat pairing;          // (d(m)|a(-m))
  Rat c;                // from the two-level solve
  Rat c_supertrace;     // (1/2) sum_{0<=s<m} str_{g_s}(ad d . ad a) / (d|a)
  bool consistent = false;
  Rat vanishing_level;  // -c/m; the level where v becomes singular
};

LevelCoefficient level_coefficient(const AffineAlgebra& alg, const TruncationWindow& w,
                                   int cartan_d, int cartan_a, int m);

}  // namespace vermacrit
