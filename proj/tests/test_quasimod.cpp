#include "doctest.h"

#include "cdo/quasimod.hpp"
#include "cdo/suite.hpp"

using namespace cdo;

TEST_CASE("base transformation rules") {
    TransformRule f = base_rule(SymbolKind::Modular, 4);
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].c == 1);
    CHECK(f.terms[0].upow == 4);
    CHECK(f.terms[0].depth == 0);

    TransformRule e = base_rule(SymbolKind::QuasiE, 2);
    REQUIRE(e.terms.size() == 2);
    CHECK_THROWS_AS(base_rule(SymbolKind::Modular, 3), domain_error);
    CHECK_THROWS_AS(base_rule(SymbolKind::QuasiE, 4), domain_error);
}

TEST_CASE("derive_transform produces the first-derivative table") {
    // f of weight 2k: c¹₀ = 2k (γ¹ u^{2k+1}), c¹₁ = 1 (u^{2k+2})
    for (int weight : {4, 6, 10}) {
        TransformRule r = derive_transform(base_rule(SymbolKind::Modular, weight));
        REQUIRE(r.terms.size() == 2);
        for (const RuleTerm& t : r.terms) {
            REQUIRE(t.depth.has_value());
            if (*t.depth == 0) {
                CHECK(t.c == weight);
                CHECK(t.gamma_pow == 1);
                CHECK(t.upow == weight + 1);
            } else {
                CHECK(t.c == 1);
                CHECK(t.gamma_pow == 0);
                CHECK(t.upow == weight + 2);
            }
        }
    }
}

TEST_CASE("the derived E-rule") {
    // E'(gb) = 2γu³E + u⁴E' - γ²u²
    TransformRule expect;
    expect.terms.push_back({Rational(2), 1, 3, 0});
    expect.terms.push_back({Rational(1), 0, 4, 1});
    expect.terms.push_back({Rational(-1), 2, 2, std::nullopt});
    CHECK(transform_rule(SymbolKind::QuasiE, 2, 1) == expect);
}

TEST_CASE("rule tables: positivity, integrality, identity specialization") {
    check_quasimod_rules();
}

TEST_CASE("E2 q-expansion") {
    QSeries s = e2_qexpansion(4);
    CHECK(s[0] == 1);
    CHECK(s[1] == -24);
    CHECK(s[2] == -72);
    CHECK(s[3] == -96);
    CHECK(s[4] == -168);
    CHECK(e2_qexpansion(5)[5] == -144);
    CHECK(e2_qexpansion(0) == QSeries{[] {
        QSeries one(0);
        one[0] = 1;
        return one;
    }()});
}

TEST_CASE("Γ(1) dimensions against the 4a+6b monomial count") {
    CHECK(dim_M_full(0) == 1);
    CHECK(dim_M_full(2) == 0);
    CHECK(dim_M_full(12) == 2);
    CHECK(dim_M(-4, nullptr) == 0);
    CHECK(dim_M(7, nullptr) == 0);
    for (int k = 0; k <= 40; ++k) {
        long count = 0;
        for (int a = 0; 4 * a <= k; ++a)
            if ((k - 4 * a) % 6 == 0) ++count;
        CHECK(dim_M(k, nullptr) == (k % 2 ? 0 : count));
    }
}

TEST_CASE("supplied tables never default silently") {
    DimensionTable t;
    t.group = "test";
    t.dims = {{0, 1}, {4, 1}};
    CHECK(dim_M(4, &t) == 1);
    CHECK(dim_M(-2, &t) == 0);  // negative weights bypass the table
    CHECK(dim_M(5, &t) == 0);   // odd weights bypass the table
    CHECK_THROWS_AS(dim_M(2, &t), missing_dimension_error);
}

TEST_CASE("QSeries arithmetic") {
    QSeries a(3);
    a[0] = 1;
    a[1] = Rational(1, 2);
    QSeries b(3);
    b[0] = 2;
    b[3] = 1;
    QSeries prod = a * b;
    CHECK(prod[0] == 2);
    CHECK(prod[1] == 1);
    CHECK(prod[3] == 1);  // q³·1 from a[0]*b[3]; a[1]*b[3] truncated away

    QSeries geo(6);
    geo[0] = 1;
    geo.mul_inv_one_minus_qk(2);
    for (int n = 0; n <= 6; ++n) CHECK(geo[n] == (n % 2 ? 0 : 1));
}
