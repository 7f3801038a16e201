#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rootzeta/weyl.hpp"

using namespace rootzeta;

namespace {

std::vector<std::string> words(const std::vector<WeylElement>& ws) {
    std::vector<std::string> out;
    for (auto& w : ws) out.push_back(w.word);
    return out;
}

}  // namespace

TEST_CASE("group closure") {
    const auto& W = weyl_group();
    CHECK(W.size() == 12);
    // contains -identity (the longest element)
    CHECK(std::count_if(W.begin(), W.end(), [](const WeylElement& w) {
              return w.mat == std::array<int, 4>{-1, 0, 0, -1};
          }) == 1);
    WeylElement s1 = simple_reflection(1), s2 = simple_reflection(2);
    CHECK((s1 * s1).mat == WeylElement{}.mat);
    CHECK((s2 * s2).mat == WeylElement{}.mat);
    CHECK(longest_element().word.size() == 6);
    // brute-force closure oracle: multiplying any two members stays inside
    for (auto& a : W)
        for (auto& b : W)
            CHECK(std::count_if(W.begin(), W.end(),
                                [&](const WeylElement& w) { return w.mat == (a * b).mat; }) == 1);
}

TEST_CASE("inversion sets") {
    CHECK(inversion_set(WeylElement{}).empty());
    WeylElement w1 = longest_element() * simple_reflection(1);
    CHECK(inversion_set(w1) == std::vector<int>{2, 3, 4, 5, 6});
    CHECK(inversion_set(longest_element()) == std::vector<int>{1, 2, 3, 4, 5, 6});
    // |inversions| equals reduced word length
    for (auto& w : weyl_group()) CHECK(inversion_set(w).size() == w.word.size());
}

TEST_CASE("parabolic transversals") {
    CHECK(words(parabolic_transversal({1})) ==
          std::vector<std::string>{"", "2", "21", "212", "2121", "21212"});
    CHECK(words(parabolic_transversal({2})) ==
          std::vector<std::string>{"", "1", "12", "121", "1212", "12121"});
    CHECK(parabolic_transversal({1, 2}).size() == 1);
    CHECK(parabolic_transversal({1, 2})[0].word.empty());
    CHECK_THROWS_AS(parabolic_transversal({}), std::invalid_argument);
    // |W^I| * |W_I| = |W| for |I| = 1
    CHECK(parabolic_transversal({1}).size() * 2 == weyl_group().size());
}

TEST_CASE("exponent action") {
    ExponentTuple s{11, 12, 13, 14, 15, 16};
    WeylElement w1 = longest_element() * simple_reflection(1);
    CHECK(act_on_exponents(w1.inverse(), s) == ExponentTuple{11, 13, 12, 14, 16, 15});
    CHECK(act_on_exponents(WeylElement{}, s) == s);
    WeylElement s1 = simple_reflection(1);
    CHECK(act_on_exponents(s1, act_on_exponents(s1, s)) == s);
    // group action: (vw)s = v(ws) for all pairs
    for (auto& v : weyl_group())
        for (auto& w : weyl_group())
            CHECK(act_on_exponents(v * w, s) == act_on_exponents(v, act_on_exponents(w, s)));
}

TEST_CASE("sign products") {
    ExponentTuple s{2, 1, 1, 1, 1, 1};
    CHECK(sign_product(WeylElement{}, s) == 1);
    WeylElement w1 = longest_element() * simple_reflection(1);
    CHECK(sign_product(w1, s) == -1);  // (-1)^{s2+s3+s4+s5+s6}
    CHECK(sign_product(longest_element(), ExponentTuple{2, 2, 2, 2, 2, 2}) == 1);
    // depends on the tuple only mod 2
    ExponentTuple t{4, 3, 7, 1, 5, 3}, t2{2, 1, 1, 3, 1, 1};
    for (auto& w : weyl_group()) CHECK(sign_product(w, t) == sign_product(w, t2));
}

TEST_CASE("functional sum terms") {
    // I = {1}, tuple (s,2,1,1,1,1): the six signed permutations of the
    // symmetrized sum; instantiate the free slot with a marker value
    const long S = 9;
    auto terms = functional_sum_terms({1}, ExponentTuple{S, 2, 1, 1, 1, 1});
    REQUIRE(terms.size() == 6);
    std::vector<SignedTerm> expect{
        {+1, {S, 2, 1, 1, 1, 1}}, {+1, {1, 2, 1, 1, S, 1}}, {-1, {1, 1, 2, 1, 1, S}},
        {+1, {1, 1, 1, 2, 1, S}}, {-1, {1, 1, 1, 2, S, 1}}, {+1, {S, 1, 2, 1, 1, 1}},
    };
    for (auto& e : expect) CHECK(std::count(terms.begin(), terms.end(), e) == 1);

    // I = {2}, tuple (p,s,q,r,u,v): the sign pattern of the six-term identity
    const long p = 2, s = 9, q = 3, r = 4, u = 5, v = 6;
    auto t2 = functional_sum_terms({2}, ExponentTuple{p, s, q, r, u, v});
    REQUIRE(t2.size() == 6);
    auto sgn = [](long e) { return e % 2 == 0 ? 1 : -1; };
    std::vector<SignedTerm> expect2{
        {+1, {p, s, q, r, u, v}},
        {sgn(p), {p, q, s, r, v, u}},
        {sgn(p + q), {v, q, r, s, p, u}},
        {sgn(p + q + v), {v, r, q, s, u, p}},
        {sgn(p + q + r + v), {u, r, s, q, v, p}},
        {sgn(p + q + r + u + v), {u, s, r, q, p, v}},
    };
    for (auto& e : expect2) CHECK(std::count(t2.begin(), t2.end(), e) == 1);

    // I = {1,2} leaves the identity alone
    auto t3 = functional_sum_terms({1, 2}, ExponentTuple{p, s, q, r, u, v});
    REQUIRE(t3.size() == 1);
    CHECK(t3[0] == SignedTerm{+1, {p, s, q, r, u, v}});
}

TEST_CASE("reduction terms") {
    WeylElement w0s1 = longest_element() * simple_reflection(1);
    WeylElement w0s2 = longest_element() * simple_reflection(2);

    // even p, odd r family: two +1 copies of the tuple
    {
        ExponentTuple s{2, 2, 2, 3, 2, 2};
        auto terms = reduction_terms({2}, w0s1, s);
        REQUIRE(terms.size() == 2);
        CHECK(terms[0] == SignedTerm{+1, s});
        CHECK(terms[1] == SignedTerm{+1, s});
    }
    // even q, odd u family
    {
        ExponentTuple s{2, 2, 3, 3, 2, 3};
        auto terms = reduction_terms({1}, w0s2, s);
        REQUIRE(terms.size() == 2);
        CHECK(terms[0] == SignedTerm{+1, s});
        CHECK(terms[1] == SignedTerm{+1, s});
    }
    // all-even tuple violates the sign hypothesis
    CHECK_THROWS_AS(reduction_terms({2}, w0s1, ExponentTuple{2, 2, 2, 2, 2, 2}),
                    HypothesisViolated);
    // tuple not fixed by w1
    CHECK_THROWS_AS(reduction_terms({2}, w0s1, ExponentTuple{2, 2, 3, 3, 2, 2}),
                    HypothesisViolated);
}
