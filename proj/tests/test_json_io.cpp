#include "doctest.h"

#include "cdo/json_io.hpp"

using namespace cdo;

namespace {

Word bw(std::vector<int> lam, std::vector<int> mu, int a0 = 0, int b0 = 0) {
    Word w;
    w.an = Partition(std::move(lam));
    w.bn = Partition(std::move(mu));
    w.a0 = a0;
    w.b0 = b0;
    return w;
}

}  // namespace

TEST_CASE("b-flavor element round trip") {
    BElement e;
    e.add(bw({2, 1}, {1}, 1, 2), Rational(-7, 3));
    e.add(bw({}, {}, 0, 0), Rational(5));
    CHECK(belement_from_json(element_to_json(e)) == e);
}

TEST_CASE("u-flavor element round trip") {
    UElement e;
    Word w = bw({1}, {2});
    w.upow = -3;
    w.a0 = 2;
    GammaPoly p = GammaPoly::monomial(Rational(1, 2), 0) + GammaPoly::monomial(-2, 3);
    e.add(w, p);
    CHECK(uelement_from_json(element_to_json(e)) == e);
}

TEST_CASE("flavor mismatch is rejected") {
    BElement e;
    e.add(bw({1}, {}), Rational(1));
    CHECK_THROWS_AS(uelement_from_json(element_to_json(e)), domain_error);
}

TEST_CASE("annihilator-carrying elements cannot be serialized") {
    BElement e;
    Word w;
    w.ap = Partition({1});
    e.add(w, Rational(1));
    CHECK_THROWS_AS(element_to_json(e), domain_error);
}

TEST_CASE("symbols, vectors, operators") {
    FunctionSymbol f{"f", SymbolKind::Modular, 6, 2};
    CHECK(symbol_from_json(symbol_to_json(f)) == f);
    FunctionSymbol e{"E", SymbolKind::QuasiE, 2, 1};
    CHECK(symbol_from_json(symbol_to_json(e)) == e);

    Json broken = symbol_to_json(f);
    broken["kind"] = "opaque";
    CHECK_THROWS_AS(symbol_from_json(broken), domain_error);

    InvariantVector v;
    v.terms.push_back({Rational(1), {Partition({1}), Partition({1})}, std::nullopt});
    v.terms.push_back({Rational(2), {Partition{}, Partition({2})}, e});
    InvariantVector rt = vector_from_json(vector_to_json(v));
    REQUIRE(rt.terms.size() == 2);
    CHECK(rt.terms[0] == v.terms[0]);
    CHECK(rt.terms[1] == v.terms[1]);

    LiftingOperator op;
    op.leading = {Partition{}, Partition({2, 1})};
    op.kind = LiftKind::Solved;
    op.element.add(bw({}, {2, 1}), Rational(1));
    op.element.add(bw({}, {1, 1, 1}, 1), Rational(1, 4));
    LiftingOperator rt_op = operator_from_json(operator_to_json(op));
    CHECK(rt_op.leading == op.leading);
    CHECK(rt_op.kind == op.kind);
    CHECK(rt_op.element == op.element);
}

TEST_CASE("dimension tables") {
    DimensionTable t;
    t.group = "Gamma0(2)";
    t.dims = {{0, 1}, {2, 1}, {4, 2}};
    DimensionTable rt = table_from_json(table_to_json(t));
    CHECK(rt.group == t.group);
    CHECK(rt.dims == t.dims);

    CHECK_THROWS_AS(table_from_json(Json{{"group", "x"}, {"dims", {{"3", 1}}}}), domain_error);
    CHECK_THROWS_AS(table_from_json(Json{{"group", "x"}, {"dims", {{"2", -1}}}}), domain_error);
    CHECK_THROWS_AS(table_from_json(Json{{"group", "x"}}), domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-12") == -12);
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational("x"), domain_error);
}
