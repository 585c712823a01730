#pragma once

#include "vermacrit/characters.hpp"
#include "vermacrit/shapovalov.hpp"
#include "vermacrit/verma.hpp"

namespace vermacrit {

// Two-sided unimodular reduction of a matrix over Q[x]_(x) to diagonal
// x^{d_i} * unit, computed on truncated power series. `valuation` must be
// the exact x-valuation of det G; it pins the working precision.
struct SmithResult {
  std::vector<int> d;       // diagonal valuations, ascending
  Matrix<Rat> col_at_zero;  // accumulated column transform evaluated at x = 0
};
SmithResult smith_local(Matrix<Poly> G, int valuation);

// Gram matrix of M(lambda + x xi) at drop nu; throws DegenerateDirection
// when its determinant vanishes identically.
Matrix<Poly> deformed_gram(VermaModule<Poly>& Mdef, const NuVec& nu);

struct JantzenLayers {
  NuVec nu;
  int valuation = 0;        // upsilon_x(det S_nu(lambda + x xi))
  std::vector<int> dims;    // dim M(lambda)^k at lambda - nu, k = 0,1,... (trailing 0)
  Matrix<Rat> fk_columns;   // column i = x=0 evaluation of the i-th F^k basis vector
  std::vector<int> column_valuations;  // d_i per column, ascending
  // Rows = reduced echelon basis of the evaluated layer F^k at x=0.
  Matrix<Rat> layer_basis(int k) const;
};

JantzenLayers jantzen_layers(VermaModule<Poly>& Mdef, const NuVec& nu);

struct SumFormulaCheck {
  NuVec nu;
  long layer_sum = 0;
  long valuation = 0;
  bool match = false;
  bool critical = false;
  long imaginary_census = 0;  // sum over (m, s) of mult(s delta) tau(nu - m s delta)
  bool census_match = false;
  bool ok() const { return match && (!critical || census_match); }
};

SumFormulaCheck sum_formula_check(VermaModule<Poly>& Mdef, const JantzenLayers& layers,
                                  const TruncatedCharacter& tau);

// x-adic valuation of the Shapovalov pairings of v against the whole weight
// space: v lies in F^k exactly for k <= the returned value.
int membership_degree(VermaModule<Poly>& Mdef, const GradedVector<Poly>& v);
int membership_degree_local(VermaModule<LocalRat>& Mdef, const GradedVector<LocalRat>& v);

}  // namespace vermacrit
