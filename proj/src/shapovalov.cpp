#include "vermacrit/shapovalov.hpp"

namespace vermacrit {

WeightT<Poly> line_weight(const LambdaLine& line) {
  WeightT<Poly> out;
  for (std::size_t i = 0; i < line.base.v.size(); ++i)
    out.v.push_back(Poly({line.base.v[i], line.dir.v[i]}));
  return out;
}

WeightT<Poly> deformed_weight(const Weight& lam, const Weight& xi) {
  return line_weight({lam, xi});
}

KKProduct kk_product(const AffineAlgebra& alg, const LambdaLine& line, const NuVec& nu,
                     const TruncationWindow& w, const TruncatedCharacter& tau) {
  KKProduct out;
  out.numerator = Poly(Rat(1));
  out.denominator = Poly(Rat(1));
  WeightT<Poly> lam = line_weight(line);

  for (const auto& root : alg.positive_roots(w)) {
    for (int m = 1; nu.dominates(m * root.nu); ++m) {
      long t = tau.at(nu - m * root.nu);
      if (t == 0) continue;
      long exponent = static_cast<long>(root.mult) * t;
      if (root.parity == 1 && m % 2 == 0) exponent = -exponent;

      std::vector<Rat> fn = alg.functional_of_nu(m * root.nu);
      Poly phi = Rat(2) * alg.lam_rho_pair(lam, fn) - Poly(alg.fn_pair(fn, fn));
      DetFactor factor{root.nu, m, exponent, phi};
      for (long rep = 0; rep < std::abs(exponent); ++rep) {
        if (exponent > 0)
          out.numerator *= phi;
        else
          out.denominator *= phi;
      }
      out.factors.push_back(std::move(factor));
    }
  }
  return out;
}

Poly gram_det(VermaModule<Poly>& M, const NuVec& nu) { return det_poly(M.gram_matrix(nu)); }

DetCheck det_vs_product_check(VermaModule<Poly>& M, const LambdaLine& line, const NuVec& nu,
                              const TruncatedCharacter& tau) {
  DetCheck out;
  out.nu = nu;
  out.dim = static_cast<long>(M.ctx().weight_basis(nu).size());
  Poly det = gram_det(M, nu);
  KKProduct prod = kk_product(M.algebra(), line, nu, M.ctx().window(), tau);
  out.det_degree = det.degree();
  out.product_degree = prod.degree();
  out.degree_match = out.det_degree == out.product_degree;
  if (det.is_zero()) return out;

  // det * denominator = c * numerator for a nonzero constant c.
  Poly lhs = det * prod.denominator;
  if (lhs.degree() != prod.numerator.degree()) return out;
  Rat c = lhs.coeffs().back() / prod.numerator.coeffs().back();
  out.match = lhs == c * prod.numerator;
  out.ratio = c;
  return out;
}

void check_line_direction(const AffineAlgebra& alg, const Weight& dir, const TruncationWindow& w) {
  for (const auto& root : alg.positive_roots(w)) {
    std::vector<Rat> fn = alg.functional_of_nu(root.nu);
    if (is_zero(alg.weight_fn_pair(dir, fn)))
      throw DegenerateDirection("line direction is orthogonal to the root " + root.nu.str());
  }
}

}  // namespace vermacrit
