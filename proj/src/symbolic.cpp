#include "cdo/symbolic.hpp"

namespace cdo {

std::string SymbolicSum::str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += c.str();
        std::string w;
        for (int n : k.lambda.parts()) w += "a[-" + std::to_string(n) + "]";
        for (int m : k.mu.parts()) w += "b[-" + std::to_string(m) + "]";
        if (k.upow != 0) w += "u^" + std::to_string(k.upow);
        if (k.sym) w += (w.empty() ? "" : "*") + k.sym->str();
        if (!w.empty()) s += "*" + w;
    }
    return s;
}

SymbolicSum transformed_symbol(const FunctionSymbol& s) {
    const TransformRule& rule = transform_rule(s.kind, s.weight, s.depth);
    SymbolicSum out;
    for (const RuleTerm& t : rule.terms) {
        SymKey k;
        k.upow = t.upow;
        if (t.depth) {
            FunctionSymbol tgt = s;
            tgt.depth = *t.depth;
            k.sym = tgt;
        }
        out.add(std::move(k), GammaPoly::monomial(t.c, t.gamma_pow));
    }
    return out;
}

SymbolicSum apply_operator(const UElement& op, const SymbolicSum& fn) {
    SymbolicSum out;
    for (const auto& [w, wc] : op.terms()) {
        require(!w.has_annihilators(), "apply_operator: operator must be K-reduced");
        for (const auto& [fk, fc] : fn.terms()) {
            require(fk.lambda.is_empty() && fk.mu.is_empty(),
                    "apply_operator: function part carries mode operators");
            const int s = w.a0;
            // a0^s (u^q · F) = Σ_j C(s,j) q(q-1)..(q-j+1) γ^j u^{q-j} F^{(s-j)}
            for (int j = 0; j <= s; ++j) {
                if (!fk.sym && j != s) continue;  // constants die under d/db
                Integer f = binomial(s, j) * falling(fk.upow, j);
                if (f == 0) continue;
                SymKey k;
                k.lambda = w.an;
                k.mu = w.bn;
                k.upow = w.upow + fk.upow - j;
                if (fk.sym) k.sym = fk.sym->derived(s - j);
                out.add(std::move(k), (wc * fc).shifted(j, Rational(f)));
            }
        }
    }
    return out;
}

SymbolicSum apply_to_symbol(const UElement& op, const FunctionSymbol& f) {
    SymKey base;
    base.sym = f;
    return apply_operator(op, SymbolicSum::single(std::move(base), GammaPoly(1)));
}

SymbolicSum apply_to_constant(const UElement& op) {
    return apply_operator(op, SymbolicSum::single(SymKey{}, GammaPoly(1)));
}

}  // namespace cdo
