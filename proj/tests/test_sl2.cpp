#include "doctest.h"

#include "cdo/sl2.hpp"
#include "cdo/suite.hpp"

using namespace cdo;

namespace {

Word bword(std::vector<int> lam, std::vector<int> mu, int a0 = 0, int b0 = 0) {
    Word w;
    w.an = Partition(std::move(lam));
    w.bn = Partition(std::move(mu));
    w.a0 = a0;
    w.b0 = b0;
    return w;
}

BElement single(Word w) { return BElement::single(std::move(w), Rational(1)); }

}  // namespace

TEST_CASE("F0 on single factors") {
    // F0.b[-1] = 2 b[-1] b0
    CHECK(act_zero_mode(Sl2::F, single(bword({}, {1}))) ==
          BElement::single(bword({}, {1}, 0, 1), 2));

    // F0.a0 = 2 - 2 a0 b0
    BElement fa0 = act_zero_mode(Sl2::F, single(word_a0(1)));
    BElement expect;
    expect.add(Word{}, Rational(2));
    expect.add(bword({}, {}, 1, 1), Rational(-2));
    CHECK(fa0 == expect);

    // F0.(b[-2]b[-1]) = 4 b[-2]b[-1]b0 + b[-1]^3
    BElement f21 = act_zero_mode(Sl2::F, single(bword({}, {2, 1})));
    BElement expect21;
    expect21.add(bword({}, {2, 1}, 0, 1), Rational(4));
    expect21.add(bword({}, {1, 1, 1}), Rational(1));
    CHECK(f21 == expect21);
}

TEST_CASE("H0 scales by the weight 2(p(λ)-p(μ)+k-l)") {
    BElement v = single(bword({2}, {1}, 1, 0));
    CHECK(act_zero_mode(Sl2::H, v) == v.scaled(2));
    BElement w = single(bword({}, {1, 1}, 0, 3));
    CHECK(act_zero_mode(Sl2::H, w) == w.scaled(-10));
}

TEST_CASE("E0 lowers b0 with coefficient -l") {
    CHECK(act_zero_mode(Sl2::E, single(bword({}, {1}, 0, 2))) ==
          BElement::single(bword({}, {1}, 0, 1), -2));
    CHECK(act_zero_mode(Sl2::E, single(bword({1}, {}, 2, 0))).is_zero());
}

TEST_CASE("F0 on a-modes produces the (3.10) tail") {
    // F0.a[-1] mod K at cap 2: -2 a[-1]b0 - 2 b[-1]a0
    BElement fa = act_zero_mode(Sl2::F, single(bword({1}, {})));
    BElement expect;
    expect.add(bword({1}, {}, 0, 1), Rational(-2));
    expect.add(bword({}, {1}, 1, 0), Rational(-2));
    CHECK(fa == expect);
}

TEST_CASE("annihilator-carrying input is rejected") {
    Word w;
    w.ap = Partition({1});
    CHECK_THROWS_AS(act_zero_mode(Sl2::H, BElement::single(w, 1)), domain_error);
}

TEST_CASE("sl2 bracket relations on low weights") { check_sl2_brackets(3, false); }

TEST_CASE("Lemma 3.2 stability and order decrease up to weight 5") {
    check_sl2_stability(5, false);
}
