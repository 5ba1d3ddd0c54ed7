#include "doctest.h"

#include "cdo/lifting.hpp"
#include "cdo/suite.hpp"

using namespace cdo;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

Word bw(std::vector<int> lam, std::vector<int> mu, int a0 = 0, int b0 = 0) {
    Word w;
    w.an = Partition(std::move(lam));
    w.bn = Partition(std::move(mu));
    w.a0 = a0;
    w.b0 = b0;
    return w;
}

FunctionSymbol fsym(int weight, int depth) {
    return {"f", SymbolKind::Modular, weight, depth};
}

}  // namespace

TEST_CASE("b[-1]^N lifts to itself") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> ones(n, 1);
        LiftingOperator op = solve_lifting_operator({P({}), P(ones)});
        CHECK(op.element == BElement::single(bw({}, ones), 1));
    }
}

TEST_CASE("the canonical solve at (∅,(2,1))") {
    LiftingSolve s = solve_lifting({P({}), P({2, 1})});
    BElement expect;
    expect.add(bw({}, {2, 1}), Rational(1));
    expect.add(bw({}, {1, 1, 1}, 1), Rational(1, 4));
    CHECK(s.op.element == expect);

    // matrix diagnostics: B = [1], C = [-4] = 1·(2·(-3)+1+1)
    REQUIRE(s.maximal_count == 1);
    REQUIRE(s.B.size() == 1);
    REQUIRE(s.C.size() == 1);
    CHECK(s.B[0][0] == 1);
    CHECK(s.C[0][0] == -4);
}

TEST_CASE("solver rejects l ≥ 0") {
    CHECK_THROWS_AS(solve_lifting_operator({P({1}), P({1})}), domain_error);
    CHECK_THROWS_AS(solve_lifting_operator({P({1}), P({})}), domain_error);
}

TEST_CASE("constant lifting rejects l ≠ 0") {
    CHECK_THROWS_AS(constant_lifting_operator({P({}), P({1})}), domain_error);
}

TEST_CASE("constant lifting at ((1),(1)) is the Virasoro correction") {
    LiftingOperator op = constant_lifting_operator({P({1}), P({1})});
    BElement expect;
    expect.add(bw({}, {2}), Rational(2));  // slot (∅,(2)): (-1)⁰/0!·2
    expect.add(bw({}, {1, 1}, 1), Rational(1));
    CHECK(op.element == expect);

    InvariantVector v = lifting_vector(op);
    REQUIRE(v.terms.size() == 3);
    CHECK(vector_str(v) == "a[-1]b[-1] + 2*b[-2]*E + b[-1]b[-1]*E'");
    VerifyResult r = verify_invariance(v);
    CHECK(r.invariant);
    CHECK(r.residual.is_zero());
}

TEST_CASE("the vacuum lifts to itself") {
    LiftingOperator op = constant_lifting_operator({P({}), P({})});
    CHECK(op.element.is_zero());
    InvariantVector v = lifting_vector(op);
    REQUIRE(v.terms.size() == 1);
    CHECK(v.terms[0].coeff == 1);
    CHECK(v.terms[0].pair == PartitionPair{P({}), P({})});
    CHECK(!v.terms[0].sym.has_value());
    CHECK(verify_invariance(v).invariant);
}

TEST_CASE("section 6 closed form") {
    SUBCASE("bottom case b[-1]^l f") {
        InvariantVector v = section6_lifting(P({1, 1}), 4);
        REQUIRE(v.terms.size() == 1);
        CHECK(v.terms[0].pair == PartitionPair{P({}), P({1, 1})});
        CHECK(v.terms[0].coeff == 1);
        CHECK(v.terms[0].sym == fsym(4, 0));
    }
    SUBCASE("μ = (2,1): agrees with the solver route") { check_canonical_example(0); }
    SUBCASE("μ = (2,1,1), l = 3") {
        InvariantVector v = section6_lifting(P({2, 1, 1}), 6);
        REQUIRE(v.terms.size() == 2);
        CHECK(v.terms[0].pair == PartitionPair{P({}), P({2, 1, 1})});
        CHECK(v.terms[0].coeff == 1);
        CHECK(v.terms[1].pair == PartitionPair{P({}), P({1, 1, 1, 1})});
        CHECK(v.terms[1].coeff == Rational(1, 6));
        CHECK(v.terms[1].sym == fsym(6, 1));
    }
    SUBCASE("weight/part-count preconditions") {
        CHECK_THROWS_AS(section6_lifting(P({2, 1}), 6), domain_error);
        CHECK_THROWS_AS(section6_lifting(P({2, 1}), 3), domain_error);
    }
}

TEST_CASE("apply_to_symbol") {
    // (b[-1]² a0) f = b[-1]² f'
    Word w = bw({}, {1, 1}, 1);
    w.upow = 0;
    UElement op = UElement::single(w, GammaPoly(1));
    SymbolicSum r = apply_to_symbol(op, fsym(4, 0));
    REQUIRE(r.size() == 1);
    SymKey k;
    k.mu = P({1, 1});
    k.sym = fsym(4, 1);
    CHECK(r.terms().begin()->first == k);
    CHECK(r.terms().begin()->second == GammaPoly(1));

    // a0² on u⁻¹: 2γ²u⁻³
    Word a2 = word_a0(2);
    SymKey uinv;
    uinv.upow = -1;
    SymbolicSum s = apply_operator(UElement::single(a2, GammaPoly(1)),
                                   SymbolicSum::single(uinv, GammaPoly(1)));
    REQUIRE(s.size() == 1);
    CHECK(s.terms().begin()->first.upow == -3);
    CHECK(s.terms().begin()->second == GammaPoly::monomial(2, 2));
}

TEST_CASE("verify_invariance distinguishes corrected and bare vectors") {
    // b[-1]² f with f of weight 4: immediately invariant
    InvariantVector good;
    good.terms.push_back({Rational(1), {P({}), P({1, 1})}, fsym(4, 0)});
    CHECK(verify_invariance(good).invariant);

    // b[-2] f with no correction term: fails, residual carries -γ u b[-1]² f
    InvariantVector bad;
    bad.terms.push_back({Rational(1), {P({}), P({2})}, fsym(4, 0)});
    VerifyResult r = verify_invariance(bad);
    CHECK(!r.invariant);
    SymKey missing;
    missing.mu = P({1, 1});
    missing.upow = 1;
    missing.sym = fsym(4, 0);
    auto it = r.residual.terms().find(missing);
    REQUIRE(it != r.residual.terms().end());
    CHECK(it->second == GammaPoly::monomial(-1, 1));
}

TEST_CASE("every solved operator satisfies the three operator equations") {
    check_solver_sweep(5, 0, false);
}

TEST_CASE("every constant lifting satisfies (4.6)-(4.9)") {
    check_constant_sweep(5, 0, false);
}

TEST_CASE("flavor bridge demands b0-free input") {
    BElement e = BElement::single(bw({}, {1}, 0, 1), 1);
    CHECK_THROWS_AS(to_u_flavor(e), domain_error);
}
