#pragma once

#include "vermacrit/characters.hpp"
#include "vermacrit/verma.hpp"

namespace vermacrit {

// One-parameter weight family lambda_0 + t mu.
struct LambdaLine {
  Weight base;
  Weight dir;
};

WeightT<Poly> line_weight(const LambdaLine& line);
// lambda + x xi for the Jantzen deformation.
WeightT<Poly> deformed_weight(const Weight& lam, const Weight& xi);

// One factor phi_{m gamma} of the Kac-Kazhdan determinant formula along a
// line, with its net exponent tau(nu - m gamma) (sign-alternating for odd
// gamma, multiplied by the root multiplicity).
struct DetFactor {
  NuVec gamma;
  int m = 1;
  long exponent = 0;
  Poly phi;  // 2(lambda + rho, m gamma) - (m gamma, m gamma) along the line
};

struct KKProduct {
  std::vector<DetFactor> factors;
  Poly numerator;    // product of factors with positive exponent
  Poly denominator;  // product of factors with negative exponent
  long degree() const { return numerator.degree() - denominator.degree(); }
};

KKProduct kk_product(const AffineAlgebra& alg, const LambdaLine& line, const NuVec& nu,
                     const TruncationWindow& w, const TruncatedCharacter& tau);

// Exact determinant of the Gram matrix on the weight space lambda(t) - nu.
Poly gram_det(VermaModule<Poly>& M, const NuVec& nu);

struct DetCheck {
  NuVec nu;
  long dim = 0;
  long det_degree = 0;
  long product_degree = 0;
  bool degree_match = false;
  bool match = false;
  Rat ratio;  // det * denominator = ratio * numerator
};

DetCheck det_vs_product_check(VermaModule<Poly>& M, const LambdaLine& line, const NuVec& nu,
                              const TruncatedCharacter& tau);

// A line direction suitable for determinant comparison: pairs nontrivially
// with every root in the window. Throws when `dir` fails that.
void check_line_direction(const AffineAlgebra& alg, const Weight& dir, const TruncationWindow& w);

}  // namespace vermacrit
