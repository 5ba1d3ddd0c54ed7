#pragma once

#include <map>

#include "cdo/partition.hpp"
#include "cdo/quasimod.hpp"

namespace cdo {

// tr t^{H0} q^{L0} of C[a_{-n}, b_{-n}]: c(m,n) = #{(λ,μ) : |λ|+|μ| = n,
// 2(p(λ)-p(μ)) = m}.
struct TwoVarTrace {
    int order = 0;
    std::map<std::pair<int, int>, Integer> c;  // (m, n) -> count

    Integer count(int m, int n) const {
        auto it = c.find({m, n});
        return it == c.end() ? Integer(0) : it->second;
    }
};

// Pair counting, cross-checked internally against the product
// Π 1/(1-t²qⁿ) · Π 1/(1-t⁻²qⁿ) (internal_error on mismatch).
TwoVarTrace two_variable_trace(int order);

// #partitions of n into exactly k parts.
Integer partitions_with_parts(int n, int k);

// Σ_m Σ_n dim M_{2m}(Γ) q^{2n+m} Π_{i≤n}(1-q^i)⁻¹ Π_{j≤m+n}(1-q^j)⁻¹,
// truncated at q^order.  table == nullptr selects Γ(1).
QSeries character_product(int order, const DimensionTable* table);

// Reference path: coefficient of qⁿ is Σ over the partition pairs of
// weight n of dim M_{2(p(μ)-p(λ))}(Γ), by direct enumeration.
QSeries character_direct_serial(int order, const DimensionTable* table);

// Same sum with the per-coefficient loop parallelized (OpenMP when
// enabled; identical results to the serial reference by construction).
QSeries character_direct(int order, const DimensionTable* table);

}  // namespace cdo
