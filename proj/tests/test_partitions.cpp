#include "doctest.h"

#include "cdo/partition.hpp"
#include "cdo/suite.hpp"

using namespace cdo;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("partition construction normalizes and validates") {
    CHECK(P({1, 3, 2}).str() == "3,2,1");
    CHECK(P({}).is_empty());
    CHECK(P({2, 2}).weight() == 4);
    CHECK(P({2, 2}).count() == 2);
    CHECK(P({4, 4, 1}).multiplicity(4) == 2);
    CHECK_THROWS_AS(P({0}), domain_error);
    CHECK_THROWS_AS(P({3, -1}), domain_error);
}

TEST_CASE("partition text round trip") {
    CHECK(Partition::parse("2,1").str() == "2,1");
    CHECK(Partition::parse("").is_empty());
    CHECK(Partition::parse(" 1 , 2 ").str() == "2,1");
    CHECK_THROWS_AS(Partition::parse("2,x"), domain_error);
    CHECK_THROWS_AS(Partition::parse("0"), domain_error);
    CHECK_THROWS_AS(Partition::parse("-3"), domain_error);
}

TEST_CASE("compare_partitions follows the lexicographic-then-longer rule") {
    CHECK(compare_partitions(P({2, 1}), P({1, 1, 1})) > 0);
    CHECK(compare_partitions(P({}), P({1})) < 0);
    CHECK(compare_partitions(P({2, 1}), P({2})) > 0);
    CHECK(compare_partitions(P({3, 1}), P({3, 1})) == 0);
}

TEST_CASE("compare_pairs follows (A1)-(A3)") {
    // A1: l decides
    CHECK(compare_pairs({P({1}), P({})}, {P({}), P({1})}) > 0);
    // A2: equal l, λ decides
    CHECK(compare_pairs({P({2}), P({1})}, {P({1, 1}), P({1})}) > 0);
    // A3: equal λ and p(μ); the smaller μ gives the greater pair
    CHECK(compare_pairs({P({1}), P({2, 2})}, {P({1}), P({3, 1})}) > 0);
}

TEST_CASE("successor_pair walks the weight class") {
    auto s1 = successor_pair({P({1}), P({1})});
    REQUIRE(s1.has_value());
    CHECK(*s1 == PartitionPair{P({}), P({2})});
    auto s2 = successor_pair({P({}), P({2})});
    REQUIRE(s2.has_value());
    CHECK(*s2 == PartitionPair{P({}), P({1, 1})});
    CHECK(!successor_pair({P({}), P({1, 1})}).has_value());
}

TEST_CASE("enumerate_pairs lists weight classes in decreasing order") {
    auto n0 = enumerate_pairs(0);
    REQUIRE(n0.size() == 1);
    CHECK(n0[0] == PartitionPair{P({}), P({})});

    auto n1 = enumerate_pairs(1);
    REQUIRE(n1.size() == 2);
    CHECK(n1[0] == PartitionPair{P({1}), P({})});
    CHECK(n1[1] == PartitionPair{P({}), P({1})});

    auto n2 = enumerate_pairs(2);
    REQUIRE(n2.size() == 5);
    CHECK(n2[0] == PartitionPair{P({1, 1}), P({})});
    CHECK(n2[1] == PartitionPair{P({2}), P({})});
    CHECK(n2[2] == PartitionPair{P({1}), P({1})});
    CHECK(n2[3] == PartitionPair{P({}), P({2})});
    CHECK(n2[4] == PartitionPair{P({}), P({1, 1})});
}

TEST_CASE("basis_sets matches the brute-force filter examples") {
    SUBCASE("(∅,(1,1)) has a single maximal layer") {
        BasisSets s = basis_sets({P({}), P({1, 1})});
        REQUIRE(s.by_weight.size() == 1);
        const auto* g = s.group(-4);
        REQUIRE(g != nullptr);
        REQUIRE(g->size() == 1);
        CHECK((*g)[0] == BasisWord{{P({}), P({1, 1})}, 0});
    }
    SUBCASE("(∅,(2,1)) layers") {
        BasisSets s = basis_sets({P({}), P({2, 1})});
        const auto* g4 = s.group(-4);
        REQUIRE(g4 != nullptr);
        REQUIRE(g4->size() == 2);
        CHECK((*g4)[0] == BasisWord{{P({}), P({2, 1})}, 0});
        CHECK((*g4)[1] == BasisWord{{P({}), P({1, 1, 1})}, 1});
        const auto* g6 = s.group(-6);
        REQUIRE(g6 != nullptr);
        REQUIRE(g6->size() == 1);
        CHECK((*g6)[0] == BasisWord{{P({}), P({1, 1, 1})}, 0});
    }
    SUBCASE("((1),(1)) maximal layer") {
        BasisSets s = basis_sets({P({1}), P({1})});
        const auto* g0 = s.group(0);
        REQUIRE(g0 != nullptr);
        REQUIRE(g0->size() == 3);
        CHECK((*g0)[0] == BasisWord{{P({1}), P({1})}, 0});
        CHECK((*g0)[1] == BasisWord{{P({}), P({2})}, 1});
        CHECK((*g0)[2] == BasisWord{{P({}), P({1, 1})}, 2});
        // b0 powers on the top pair stay in S, a0 powers do not
        CHECK(in_basis_set({P({1}), P({1})}, {P({1}), P({1})}, 0, 3));
        CHECK(!in_basis_set({P({1}), P({1})}, {P({1}), P({1})}, 1, 0));
    }
}

TEST_CASE("order and closure sweeps") {
    check_order_laws(6);
    check_successor_and_closure(6);
}
