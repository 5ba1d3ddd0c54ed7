#include "cdo/lifting.hpp"

#include <algorithm>

namespace cdo {

namespace {

Word basis_to_word(const BasisWord& b) {
    Word w;
    w.an = b.pair.lambda;
    w.bn = b.pair.mu;
    w.a0 = b.a0;
    return w;
}

BElement times_b0(const BElement& a, int cap) {
    return multiply(a, BElement::single(word_b0(1), Rational(1)), cap);
}

void assert_operator_equations(const BElement& a, const PartitionPair& p0, int two_l, int cap) {
    check(act_zero_mode(Sl2::E, a, cap).is_zero(),
          "lifting operator for " + p0.str() + ": E0.A != 0");
    check(act_zero_mode(Sl2::H, a, cap) == a.scaled(Rational(two_l)),
          "lifting operator for " + p0.str() + ": H0.A != 2l·A");
    check(act_zero_mode(Sl2::F, a, cap) == times_b0(a, cap).scaled(Rational(-two_l)),
          "lifting operator for " + p0.str() + ": F0.A != -2l·A·b0");
}

}  // namespace

LiftingSolve solve_lifting(const PartitionPair& p0, int cap_delta) {
    require(p0.l() <= -1,
            "solve_lifting_operator requires l(λ0,μ0) ≤ -1, got l = " + std::to_string(p0.l()) +
                " for " + p0.str());
    const int l0 = p0.l();
    const int cap = p0.weight() + cap_delta;

    LiftingSolve out;
    const BasisSets sets = basis_sets(p0);
    const auto* top_group = sets.group(2 * l0);
    check(top_group && !top_group->empty() && top_group->front().pair == p0 &&
              top_group->front().a0 == 0,
          "basis listing does not start at a_{-λ0}b_{-μ0}");
    out.basis = *top_group;
    if (const auto* q = sets.group(2 * l0 - 2)) out.quotient = *q;
    out.maximal_count = 0;
    while (out.maximal_count < out.basis.size() && out.basis[out.maximal_count].a0 == 0)
        ++out.maximal_count;

    // Column-by-column image of F̄ = π' ∘ F0 in the (3.15) coordinates.
    const size_t rows = out.quotient.size();
    const size_t cols = out.basis.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, Rational(0)));
    for (size_t j = 0; j < cols; ++j) {
        BElement img = act_zero_mode(Sl2::F, BElement::single(basis_to_word(out.basis[j]), 1), cap);
        for (const auto& [w, c] : img.terms()) {
            check(w.b0 <= 1, "F0 image leaves the Prop 3.4 decomposition");
            if (w.b0 == 1) {
                // the M(2l0)·b0 component, killed by π'
                check(in_basis_set(p0, w.pair(), w.a0, 0) && w.pair().l() + w.a0 == l0,
                      "F0 image b0-part outside M(2l0)b0");
                continue;
            }
            BasisWord bw{w.pair(), w.a0};
            auto it = std::find(out.quotient.begin(), out.quotient.end(), bw);
            check(it != out.quotient.end(), "F0 image term outside the quotient basis");
            m[static_cast<size_t>(it - out.quotient.begin())][j] = c;
        }
    }

    // Split into (B, C); C must be lower triangular with the (3.19) diagonal.
    const size_t nb = out.maximal_count;
    out.B.assign(rows, std::vector<Rational>(nb, Rational(0)));
    out.C.assign(rows, std::vector<Rational>(rows, Rational(0)));
    check(cols == nb + rows, "basis/quotient size mismatch");
    for (size_t r = 0; r < rows; ++r) {
        for (size_t j = 0; j < nb; ++j) out.B[r][j] = m[r][j];
        for (size_t j = 0; j < rows; ++j) out.C[r][j] = m[r][nb + j];
    }
    for (size_t r = 0; r < rows; ++r)
        for (size_t j = r + 1; j < rows; ++j)
            check(out.C[r][j] == 0, "C is not lower triangular");
    for (size_t j = 0; j < rows; ++j) {
        const BasisWord& col = out.basis[nb + j];
        Rational expected = Rational(col.a0) * (2 * col.pair.l() + col.a0 + 1);
        check(out.C[j][j] == expected, "C diagonal disagrees with i(2l+i+1)");
        check(out.C[j][j] < 0, "C diagonal entry not strictly negative");
    }

    // x0 = 1, free coordinates x1..x_{l1} pinned to 0; forward substitution.
    std::vector<Rational> y(rows, Rational(0));
    for (size_t r = 0; r < rows; ++r) {
        Rational rhs = -out.B[r][0];
        for (size_t j = 0; j < r; ++j) rhs -= out.C[r][j] * y[j];
        y[r] = rhs / out.C[r][r];
    }

    BElement a = BElement::single(basis_to_word(out.basis[0]), Rational(1));
    for (size_t r = 0; r < rows; ++r)
        a.add(basis_to_word(out.basis[nb + r]), y[r]);

    assert_operator_equations(a, p0, 2 * l0, cap);
    out.op = {p0, std::move(a), LiftKind::Solved};
    return out;
}

LiftingOperator solve_lifting_operator(const PartitionPair& p0) {
    return solve_lifting(p0).op;
}

UElement to_u_flavor(const BElement& e) {
    UElement out;
    for (const auto& [w, c] : e.terms()) {
        require(w.b0 == 0 && !w.has_annihilators(), "to_u_flavor requires a b0-free element");
        Word u = w;
        out.add(std::move(u), GammaPoly(c));
    }
    return out;
}

LiftingOperator constant_lifting_operator(const PartitionPair& p0, int cap_delta) {
    require(p0.l() == 0, "constant_lifting_operator requires l(λ0,μ0) = 0, got l = " +
                             std::to_string(p0.l()) + " for " + p0.str());
    const int cap = p0.weight() + cap_delta;
    const AdjointExpansion& adj = adjoint_monomial(p0, cap);

    // (4.14): A = Σ_{p(μ)>p(λ)} (-1)^{-l-1}/(-l-1)! · c⁰ · a_{-λ} b_{-μ} a0^{-l-1}
    BElement a;
    for (const auto& pair : enumerate_pairs(p0.weight())) {
        if (pair.l() >= 0) continue;
        Rational c0 = extract_c(adj, pair, 0);
        if (c0 == 0) continue;
        const int s = -pair.l() - 1;
        Rational coeff = c0 / Rational(factorial(s));
        if (s % 2) coeff = -coeff;
        Word w;
        w.an = pair.lambda;
        w.bn = pair.mu;
        w.a0 = s;
        a.add(std::move(w), coeff);
    }

    // (4.7)-(4.9)
    check(act_zero_mode(Sl2::E, a, cap).is_zero(), "constant lifting: E0.A != 0");
    check(act_zero_mode(Sl2::H, a, cap) == a.scaled(Rational(-2)), "constant lifting: H0.A != -2A");
    check(act_zero_mode(Sl2::F, a, cap) == times_b0(a, cap).scaled(Rational(2)),
          "constant lifting: F0.A != 2A·b0");

    // (4.6): A·γ(γb0+δ)⁻¹ = π(g) a_{-λ0}b_{-μ0} - a_{-λ0}b_{-μ0}, both sides
    // evaluated on functions (a0 differentiates).
    SymKey gamma_over_u;
    gamma_over_u.upow = -1;
    SymbolicSum lhs =
        apply_operator(to_u_flavor(a), SymbolicSum::single(std::move(gamma_over_u), GammaPoly::monomial(1, 1)));
    SymbolicSum rhs = apply_to_constant(adj.element);
    SymKey lead;
    lead.lambda = p0.lambda;
    lead.mu = p0.mu;
    rhs += SymbolicSum::single(std::move(lead), GammaPoly(-1));
    check(lhs == rhs, "constant lifting: (4.6) fails for " + p0.str());

    return {p0, std::move(a), LiftKind::Constant};
}

InvariantVector lifting_vector(const LiftingOperator& op) {
    InvariantVector v;
    if (op.kind == LiftKind::Constant) {
        v.terms.push_back({Rational(1), op.leading, std::nullopt});
        for (const auto& [w, c] : op.element.terms())
            v.terms.push_back({c, w.pair(), FunctionSymbol{"E", SymbolKind::QuasiE, 2, w.a0}});
    } else {
        const int weight2l = -2 * op.leading.l();
        for (const auto& [w, c] : op.element.terms())
            v.terms.push_back({c, w.pair(), FunctionSymbol{"f", SymbolKind::Modular, weight2l, w.a0}});
    }
    return v;
}

InvariantVector section6_lifting(const Partition& mu, int weight2l) {
    require(weight2l > 0 && weight2l % 2 == 0, "section6_lifting needs a positive even weight");
    const int l = weight2l / 2;
    require(mu.count() == l, "section6_lifting requires p(μ) = " + std::to_string(l) +
                                 ", got p(μ) = " + std::to_string(mu.count()));
    InvariantVector v;
    for (const auto& nu : partitions_of(mu.weight())) {
        const int s = nu.count() - l;
        if (s < 0) continue;
        Rational c = t_coeff(mu, nu);
        if (c == 0) continue;
        for (int t = 0; t < s; ++t) c /= 2 * l + t;
        v.terms.push_back(
            {c, {Partition{}, nu}, FunctionSymbol{"f", SymbolKind::Modular, weight2l, s}});
    }
    VerifyResult r = verify_invariance(v);
    check(r.invariant, "section6_lifting produced a non-invariant vector for μ = " + mu.str());
    return v;
}

VerifyResult verify_invariance(const InvariantVector& v, int cap_delta) {
    VerifyResult out;
    for (const VectorTerm& t : v.terms) {
        SymKey k;
        k.lambda = t.pair.lambda;
        k.mu = t.pair.mu;
        k.sym = t.sym;
        out.residual += SymbolicSum::single(std::move(k), GammaPoly(-t.coeff));
    }
    for (const VectorTerm& t : v.terms) {
        const AdjointExpansion& adj = adjoint_monomial(t.pair, t.pair.weight() + cap_delta);
        SymbolicSum fn = t.sym ? transformed_symbol(*t.sym)
                               : SymbolicSum::single(SymKey{}, GammaPoly(1));
        out.residual += apply_operator(adj.element, fn).scaled(GammaPoly(t.coeff));
    }
    out.invariant = out.residual.is_zero();
    return out;
}

std::string vector_str(const InvariantVector& v) {
    if (v.terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const VectorTerm& t : v.terms) {
        bool neg = t.coeff < 0;
        Rational mag = neg ? Rational(-t.coeff) : t.coeff;
        if (first) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        first = false;
        std::string w;
        for (int n : t.pair.lambda.parts()) w += "a[-" + std::to_string(n) + "]";
        for (int m : t.pair.mu.parts()) w += "b[-" + std::to_string(m) + "]";
        if (t.sym) w += (w.empty() ? "" : "*") + t.sym->str();
        if (w.empty()) s += rational_str(mag);
        else if (mag == 1) s += w;
        else s += rational_str(mag) + "*" + w;
    }
    return s;
}

}  // namespace cdo
