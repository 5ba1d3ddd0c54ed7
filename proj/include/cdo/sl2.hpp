#pragma once

#include "cdo/element.hpp"

namespace cdo {

// E = -a_{-1}, F = a_{-1}b0^2 + 2b_{-1}, H = -2a_{-1}b0.
enum class Sl2 { E, F, H };

// The infinitesimal dot-action x_(0).B = x_(0)B - Bx_(0) on Ū/K, computed
// from the per-factor closed forms (E and H act diagonally up to a b0
// shift; F Leibniz-distributes over the factors).  Input must be
// annihilator-free.  `cap` truncates F's infinite tails; the default -1
// uses each monomial's own conformal weight, which is exact.
BElement act_zero_mode(Sl2 x, const BElement& v, int cap = -1);

// Per-factor F-action formulas, exposed for tests.
BElement f0_on_a_neg(int n, int cap);  // -2 Σ a_{-1-i} b_{-n+i+1} - 2 Σ b_{-n-i} a_i
BElement f0_on_b_neg(int m);           // 2 b_{-m} b0 + Σ_{i+j=m} b_{-i} b_{-j}
BElement f0_on_a0_pow(int k);          // k(k+1) a0^{k-1} - 2k a0^k b0
BElement f0_on_b0_pow(int l);          // l b0^{l+1}

}  // namespace cdo
