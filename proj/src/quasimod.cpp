#include "cdo/quasimod.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace cdo {

std::string FunctionSymbol::str() const {
    std::string s = name;
    if (depth == 1) s += "'";
    else if (depth == 2) s += "''";
    else if (depth >= 3) s += "^(" + std::to_string(depth) + ")";
    return s;
}

bool TransformRule::operator==(const TransformRule& o) const {
    auto key = [](const RuleTerm& t) {
        return std::tuple(t.gamma_pow, t.upow, t.depth.value_or(-1));
    };
    auto sorted = [&](const TransformRule& r) {
        std::vector<RuleTerm> v = r.terms;
        std::sort(v.begin(), v.end(),
                  [&](const RuleTerm& a, const RuleTerm& b) { return key(a) < key(b); });
        return v;
    };
    auto a = sorted(*this), b = sorted(o);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (key(a[i]) != key(b[i]) || a[i].c != b[i].c) return false;
    return true;
}

TransformRule base_rule(SymbolKind kind, int weight2k) {
    TransformRule r;
    if (kind == SymbolKind::Modular) {
        require(weight2k >= 0 && weight2k % 2 == 0, "modular symbol weight must be even ≥ 0");
        r.terms.push_back({Rational(1), 0, weight2k, 0});  // f(gb) = u^{2k} f(b)
    } else {
        require(weight2k == 2, "the quasi-modular symbol E has weight 2");
        r.terms.push_back({Rational(1), 0, 2, 0});   // E(gb) = u² E(b) - γ u
        r.terms.push_back({Rational(-1), 1, 1, std::nullopt});
    }
    return r;
}

TransformRule derive_transform(const TransformRule& r) {
    std::map<std::tuple<int, int, int>, Rational> acc;
    auto put = [&acc](int g, int u, int d, const Rational& c) {
        auto [it, fresh] = acc.try_emplace({g, u, d}, c);
        if (!fresh) it->second += c;
    };
    for (const RuleTerm& t : r.terms) {
        // d/db of c γ^a u^b s^{(j)} = c·b γ^{a+1} u^{b-1} s^{(j)} + c γ^a u^b s^{(j+1)};
        // the whole derivative then gets multiplied by u² (chain rule, det 1).
        put(t.gamma_pow + 1, t.upow + 1, t.depth.value_or(-1), t.c * t.upow);
        if (t.depth) put(t.gamma_pow, t.upow + 2, *t.depth + 1, t.c);
    }
    TransformRule out;
    for (const auto& [key, c] : acc) {
        if (c == 0) continue;
        auto [g, u, d] = key;
        out.terms.push_back({c, g, u, d < 0 ? std::nullopt : std::optional<int>(d)});
    }
    return out;
}

const TransformRule& transform_rule(SymbolKind kind, int weight2k, int depth) {
    require(depth >= 0, "transform_rule: negative depth");
    using Key = std::tuple<SymbolKind, int, int>;
    static std::map<Key, TransformRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    Key key{kind, weight2k, depth};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TransformRule r = base_rule(kind, weight2k);
    for (int i = 0; i < depth; ++i) r = derive_transform(r);
    return cache.emplace(std::move(key), std::move(r)).first->second;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    require(order() == o.order(), "QSeries: order mismatch in +=");
    for (int n = 0; n <= order(); ++n) c_[n] += o.c_[n];
    return *this;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= order() && i <= r.order(); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j + i <= r.order() && j <= o.order(); ++j)
            if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

QSeries& QSeries::mul_inv_one_minus_qk(int k) {
    require(k >= 1, "mul_inv_one_minus_qk: k must be ≥ 1");
    for (int n = k; n <= order(); ++n) c_[n] += c_[n - k];
    return *this;
}

std::string QSeries::str() const {
    std::string s;
    for (int n = 0; n <= order(); ++n) {
        if (n) s += " ";
        s += rational_str(c_[n]);
    }
    return s;
}

QSeries e2_qexpansion(int order) {
    QSeries s(order);
    s[0] = 1;
    for (int n = 1; n <= order; ++n) {
        long sigma = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) sigma += d;
        s[n] = Rational(-24) * sigma;
    }
    return s;
}

long dim_M_full(int weight) {
    if (weight < 0 || weight % 2) return 0;
    return weight % 12 == 2 ? weight / 12 : weight / 12 + 1;
}

DimensionTable full_level_table(int max_weight) {
    DimensionTable t;
    t.group = "Gamma(1)";
    for (int k = 0; k <= max_weight; k += 2) t.dims[k] = dim_M_full(k);
    return t;
}

long dim_M(int weight, const DimensionTable* table) {
    if (weight < 0 || weight % 2) return 0;
    if (!table) return dim_M_full(weight);
    auto it = table->dims.find(weight);
    if (it == table->dims.end())
        throw missing_dimension_error("dimension table for " + table->group +
                                      " lacks weight " + std::to_string(weight));
    require(it->second >= 0, "dimension table entries must be nonnegative");
    return it->second;
}

}  // namespace cdo
