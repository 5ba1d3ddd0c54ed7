#include "cdo/adjoint.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace cdo {

namespace {

void put_b_mode(Word& w, int sub) {
    if (sub < 0) w.bn = w.bn.with_part(-sub);
    else w.bp = w.bp.with_part(sub);
}

GammaPoly gmono(long c, int deg) { return GammaPoly::monomial(Rational(c), deg); }

Integer mult_factorial(const Partition& p) {
    Integer r = 1;
    int prev = 0;
    for (int v : p.parts()) {
        if (v == prev) continue;
        prev = v;
        r *= factorial(p.multiplicity(v));
    }
    return r;
}

}  // namespace

UElement adjoint_a(int n, int cap) {
    require(n >= 1, "adjoint_a: mode index must be ≥ 1");
    UElement e;
    auto add = [&](Word w, GammaPoly c) {
        if (w.creation_weight() > cap) return;
        e.add(std::move(w), std::move(c));
    };

    // a_{-n}((γb+δ)² + γ² Σ_{i≠0} b_{-i} b_i); the i and -i summands agree.
    if (n <= cap) {
        Word lead;
        lead.an = Partition({n});
        lead.upow = 2;
        add(std::move(lead), gmono(1, 0));
        for (int i = 1; i <= cap; ++i) {
            Word w;
            w.an = Partition({n});
            w.bn = Partition({i});
            w.bp = Partition({i});
            add(std::move(w), gmono(2, 2));
        }
    }

    // Σ_{k≥1,k≠n} a_{-k} (2γ(γb+δ) b_{-n+k} + γ² Σ_{i+j=n-k} b_{-i}b_{-j})
    // and Σ_{k≥0} (2γ(γb+δ) b_{-n-k} + γ² Σ_{i+j=n+k} b_{-i}b_{-j}) a_k,
    // indices from ±[1, cap], ordered pairs (i, j).
    for (int sector = 0; sector < 2; ++sector) {
        for (int k = sector == 0 ? 1 : 0; k <= cap; ++k) {
            if (sector == 0 && k == n) continue;
            const int bsum = sector == 0 ? n - k : n + k;
            Word base;
            if (sector == 0) {
                base.an = Partition({k});
            } else if (k == 0) {
                base.a0 = 1;
            } else {
                base.ap = Partition({k});
            }

            if (bsum != 0 && std::abs(bsum) <= cap) {
                Word w = base;
                w.upow = 1;
                put_b_mode(w, -bsum);
                add(std::move(w), gmono(2, 1));
            }
            for (int i = -cap; i <= cap; ++i) {
                if (i == 0) continue;
                int j = bsum - i;
                if (j == 0 || std::abs(j) > cap) continue;
                Word w = base;
                put_b_mode(w, -i);
                put_b_mode(w, -j);
                add(std::move(w), gmono(1, 2));
            }
        }
    }

    // + 2n γ² b_{-n}
    if (n <= cap) {
        Word w;
        w.bn = Partition({n});
        add(std::move(w), gmono(2 * n, 2));
    }
    return e;
}

UElement adjoint_b(int n, int cap) {
    require(n >= 1, "adjoint_b: mode index must be ≥ 1");
    UElement e;
    // Σ_{l≥1} Σ_{i_1+...+i_l = n, i_t ≠ 0} (-γ)^{l-1} (γb+δ)^{-l-1} b_{-i_1}...b_{-i_l}
    // grouped by the multisets of positive and negative entries; the
    // multinomial counts the orderings of the signed composition.
    for (int s = n; s <= cap; ++s) {
        const int t = s - n;
        for (const auto& pos : partitions_of(s)) {
            if (!pos.parts().empty() && pos.parts().front() > cap) continue;
            for (const auto& neg : partitions_of(t)) {
                if (!neg.parts().empty() && neg.parts().front() > cap) continue;
                const int len = pos.count() + neg.count();
                check(len <= n + 2 * cap, "adjoint_b: composition length bound violated");
                Integer orderings = factorial(len) / (mult_factorial(pos) * mult_factorial(neg));
                Integer c = orderings;
                if ((len - 1) & 1) c = -c;
                Word w;
                w.bn = pos;
                w.bp = neg;
                w.upow = -len - 1;
                e.add(std::move(w), GammaPoly::monomial(Rational(c), len - 1));
            }
        }
    }
    return e;
}

namespace {

void assert_expansion_shape(const AdjointExpansion& exp) {
    const PartitionPair& p = exp.source;
    const int l = p.l();
    bool leading_seen = false;
    for (const auto& [w, coeff] : exp.element.terms()) {
        check(!w.has_annihilators() && w.b0 == 0, "adjoint expansion: unreduced word");
        check(w.creation_weight() == p.weight(), "adjoint expansion: weight drift");
        const PartitionPair q = w.pair();
        const int lp = q.l();
        const int s = w.a0;
        Rational c;
        int deg = 0;
        check(coeff.is_monomial(&c, &deg), "adjoint expansion: non-monomial γ coefficient");
        check(deg == l - lp - s, "adjoint expansion: γ exponent law violated");
        check(w.upow == l + lp + s, "adjoint expansion: u exponent law violated");
        check(s >= 0 && 2 * s <= l - lp, "adjoint expansion: s out of range");
        check(compare_pairs(q, p) <= 0, "adjoint expansion: ordering law violated");
        check(q.lambda.count() <= p.lambda.count(), "adjoint expansion: p(λ') > p(λ)");
        if (lp == l) {
            check(q == p && s == 0 && c == 1,
                  "adjoint expansion: level-l term other than the unit leading term");
            leading_seen = true;
        }
    }
    check(leading_seen, "adjoint expansion: missing leading term");
}

}  // namespace

const AdjointExpansion& adjoint_monomial(const PartitionPair& p, int cap) {
    if (cap < 0) cap = p.weight();
    require(cap >= p.weight(), "adjoint_monomial: cap below the pair weight");

    using Key = std::tuple<std::vector<int>, std::vector<int>, int>;
    static std::map<Key, AdjointExpansion> cache;
    static std::mutex mtx;
    Key key{p.lambda.parts(), p.mu.parts(), cap};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    UElement acc = UElement::unit();
    for (int part : p.lambda.parts()) acc = mul_raw(acc, adjoint_a(part, cap), cap);
    for (int part : p.mu.parts()) acc = mul_raw(acc, adjoint_b(part, cap), cap);

    AdjointExpansion exp{p, cap, k_reduce(acc)};
    assert_expansion_shape(exp);

    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(exp)).first->second;
}

Rational extract_c(const AdjointExpansion& exp, const PartitionPair& q, int s) {
    require(q.weight() == exp.source.weight(), "extract_c: weight mismatch");
    require(s >= 0, "extract_c: negative s");
    const int l = exp.source.l(), lp = q.l();
    Word slot;
    slot.an = q.lambda;
    slot.bn = q.mu;
    slot.a0 = s;
    slot.upow = l + lp + s;
    GammaPoly coeff = exp.element.coeff(slot);
    if (coeff.is_zero()) return Rational(0);
    Rational c;
    int deg = 0;
    check(coeff.is_monomial(&c, &deg) && deg == l - lp - s, "extract_c: malformed slot");
    return c;
}

Rational extract_c(const PartitionPair& p, const PartitionPair& q, int s) {
    return extract_c(adjoint_monomial(p), q, s);
}

Rational t_coeff(const Partition& mu, const Partition& nu) {
    require(mu.weight() == nu.weight(), "t_coeff: |μ| ≠ |ν|");
    require(nu.count() >= mu.count(), "t_coeff: p(ν) < p(μ)");
    Rational c = extract_c(adjoint_monomial({Partition{}, mu}), {Partition{}, nu}, 0);
    return (nu.count() - mu.count()) % 2 ? -c : c;
}

}  // namespace cdo
