#pragma once

#include "cdo/element.hpp"

namespace cdo {

// π(g) a_{-n} π(g)⁻¹ and π(g) b_{-n} π(g)⁻¹, expressed in u = γb+δ and γ,
// truncated: mode indices bounded by `cap` in absolute value, creation
// weight bounded by `cap`.  Annihilator tails are kept; they contract
// against later factors in adjoint_monomial.
UElement adjoint_a(int n, int cap);
UElement adjoint_b(int n, int cap);

struct AdjointExpansion {
    PartitionPair source;
    int cap = 0;
    UElement element;  // K-reduced; every term satisfies the exponent laws
};

// π(g) a_{-λ} b_{-μ} π(g)⁻¹ mod K at the given cap (default: the pair's
// conformal weight).  Factors multiplied left to right, one K-reduction at
// the end, then the Lemma-shape assertions.  Results are cached per
// (pair, cap); the cache is safe for concurrent population.
const AdjointExpansion& adjoint_monomial(const PartitionPair& p, int cap = -1);

// Structure constant c^s_{λ,μ,λ',μ'}: the rational left at slot (λ',μ',s)
// after dividing out the forced γ- and u-powers; 0 when the slot is absent.
Rational extract_c(const AdjointExpansion& exp, const PartitionPair& q, int s);
Rational extract_c(const PartitionPair& p, const PartitionPair& q, int s);

// t^μ_ν = (-1)^{p(ν)-p(μ)} c⁰_{∅,μ,∅,ν}; requires |μ| = |ν|, p(ν) ≥ p(μ).
Rational t_coeff(const Partition& mu, const Partition& nu);

}  // namespace cdo
