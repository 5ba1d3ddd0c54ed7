#include "cdo/character.hpp"

#include <deque>
#include <mutex>
#include <vector>

namespace cdo {

Integer partitions_with_parts(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    // p(n,k) = p(n-1,k-1) + p(n-k,k)
    static std::deque<std::vector<Integer>> table;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    for (int m = static_cast<int>(table.size()); m <= n; ++m) {
        std::vector<Integer> row(m + 1, Integer(0));
        if (m == 0) {
            row[0] = 1;
        } else {
            for (int j = 1; j <= m; ++j) {
                row[j] = table[m - 1][j - 1];
                if (m - j >= j) row[j] += table[m - j][j];
            }
        }
        table.push_back(std::move(row));
    }
    return table[n][k];
}

namespace {

// Per-weight tallies of pairs by p(λ) - p(μ): counts[l + n] for l in [-n, n].
std::vector<Integer> pair_counts_by_l(int n) {
    std::vector<Integer> counts(2 * n + 1, Integer(0));
    for (int j = 0; j <= n; ++j) {
        const auto& lams = partitions_of(j);
        const auto& mus = partitions_of(n - j);
        for (const auto& lam : lams)
            for (const auto& mu : mus) counts[lam.count() - mu.count() + n] += 1;
    }
    return counts;
}

}  // namespace

TwoVarTrace two_variable_trace(int order) {
    require(order >= 0, "two_variable_trace: negative order");
    TwoVarTrace out;
    out.order = order;
    for (int n = 0; n <= order; ++n) {
        auto counts = pair_counts_by_l(n);
        for (int l = -n; l <= n; ++l)
            if (counts[l + n] != 0) out.c[{2 * l, n}] = counts[l + n];
    }

    // Cross-check against Π 1/(1-t²qⁿ) Π 1/(1-t⁻²qⁿ): series[n] maps the
    // t²-exponent to the coefficient of qⁿ.
    std::vector<std::map<int, Integer>> series(order + 1);
    series[0][0] = 1;
    for (int sign : {+1, -1}) {
        for (int k = 1; k <= order; ++k) {
            // multiply by 1/(1 - t^{±2} q^k): f[n] += t^{±2} f[n-k]
            for (int n = k; n <= order; ++n)
                for (const auto& [e, c] : series[n - k]) series[n][e + sign] += c;
        }
    }
    for (int n = 0; n <= order; ++n)
        for (const auto& [e, c] : series[n])
            check(c == out.count(2 * e, n), "two_variable_trace: product cross-check failed");
    for (const auto& [mn, c] : out.c) {
        auto it = series[mn.second].find(mn.first / 2);
        check(it != series[mn.second].end() && it->second == c,
              "two_variable_trace: enumeration term missing from the product");
    }
    return out;
}

QSeries character_product(int order, const DimensionTable* table) {
    require(order >= 0, "character_product: negative order");
    QSeries out(order);
    for (int m = 0; m <= order; ++m) {
        const long dim = dim_M(2 * m, table);  // looked up even when 0 contributes
        if (dim == 0) continue;
        // running inner = Π_{i≤n}(1-q^i)⁻¹ Π_{j≤m+n}(1-q^j)⁻¹
        QSeries inner(order);
        inner[0] = 1;
        for (int j = 1; j <= m; ++j) inner.mul_inv_one_minus_qk(j);
        for (int n = 0; 2 * n + m <= order; ++n) {
            if (n > 0) {
                inner.mul_inv_one_minus_qk(n);
                inner.mul_inv_one_minus_qk(m + n);
            }
            for (int i = 0; 2 * n + m + i <= order; ++i)
                out[2 * n + m + i] += Rational(dim) * inner[i];
        }
    }
    return out;
}

namespace {

Rational direct_coefficient(int n, const DimensionTable* table) {
    Rational total(0);
    auto counts = pair_counts_by_l(n);
    for (int l = -n; l <= n; ++l) {
        if (counts[l + n] == 0) continue;
        long dim = dim_M(-2 * l, table);  // weight 2(p(μ)-p(λ)) = -2l
        if (dim) total += Rational(counts[l + n]) * dim;
    }
    return total;
}

}  // namespace

QSeries character_direct_serial(int order, const DimensionTable* table) {
    require(order >= 0, "character_direct: negative order");
    QSeries out(order);
    for (int n = 0; n <= order; ++n) out[n] = direct_coefficient(n, table);
    return out;
}

QSeries character_direct(int order, const DimensionTable* table) {
    require(order >= 0, "character_direct: negative order");
    partitions_of(order);  // warm the shared cache before going parallel
    QSeries out(order);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int n = 0; n <= order; ++n) {
        try {
            out[n] = direct_coefficient(n, table);  // distinct slots per iteration
        } catch (...) {
#pragma omp critical(cdo_character_err)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace cdo
