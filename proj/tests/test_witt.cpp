#include "gvmlab/verify.hpp"
#include "gvmlab/witt.hpp"

#include <doctest.h>

using namespace gvmlab;

namespace {
WittElement t_d(std::size_t m, std::size_t i, std::size_t j) {
    std::vector<long> e(m, 0);
    e[i - 1] = 1;
    return WittElement::symbol(std::move(e), j);
}
}  // namespace

TEST_CASE("witt bracket on symbols") {
    // [t1 d1, d1] = -d1
    WittElement lhs = witt_bracket(t_d(2, 1, 1), WittElement::symbol({0, 0}, 1));
    WittElement want;
    want.add({0, 0}, 1, -1);
    CHECK(lhs == want);

    // [d1, t1 d2] = d2
    WittElement lhs2 = witt_bracket(WittElement::symbol({0, 0}, 1), t_d(2, 1, 2));
    CHECK(lhs2 == WittElement::symbol({0, 0}, 2));

    // [t^(1,1) d2, t^(0,1) d1]: exercises both terms
    WittElement a = WittElement::symbol({1, 1}, 2);
    WittElement b = WittElement::symbol({0, 1}, 1);
    WittElement got = witt_bracket(a, b);
    WittElement expect;
    expect.add({1, 1}, 1, 1);   // b_2 = 1 term: t^{(1,2)-e_2} d1
    expect.add({0, 2}, 2, -1);  // a_1 = 1 term: t^{(1,2)-e_1} d2
    CHECK(got == expect);
}

TEST_CASE("standard embedding display") {
    CHECK(embed_standard(2, SlGenerator::off_diagonal(1, 2)) == t_d(2, 1, 2));
    WittElement neg_d1;
    neg_d1.add({0, 0}, 1, -1);
    CHECK(embed_standard(2, SlGenerator::off_diagonal(3, 1)) == neg_d1);

    // [t_1 d, -d_1] = d + t_1 d_1, the image of [E_{1,m+1}, E_{m+1,1}]
    WittElement t1d = embed_standard(2, SlGenerator::off_diagonal(1, 3));
    WittElement bracket = witt_bracket(t1d, neg_d1);
    WittElement want = witt_euler(2);
    want.add(t_d(2, 1, 1));
    CHECK(bracket == want);
}

TEST_CASE("sigma at lambda = 1 matches the embedding on u^-") {
    Lambda ones = Lambda::ones(2);
    for (std::size_t i = 1; i <= 2; ++i)
        CHECK(sigma_lambda(2, ones, SlGenerator::off_diagonal(3, i)) ==
              embed_standard(2, SlGenerator::off_diagonal(3, i)));
}

TEST_CASE("sigma display at lambda = (1,2)") {
    Lambda lambda({Rational(1), Rational(2)});
    // sigma(E12) = 2 t1 d2 - 2 d2
    WittElement want;
    want.add({1, 0}, 2, 2);
    want.add({0, 0}, 2, -2);
    CHECK(sigma_lambda(2, lambda, SlGenerator::off_diagonal(1, 2)) == want);
}

TEST_CASE("sigma bracket identity [sigma(E_{m+1,i}), sigma(E_{i,m+1})]") {
    Lambda lambda({Rational(2, 3), Rational(-1, 2)});
    for (std::size_t i = 1; i <= 2; ++i) {
        WittElement lhs = witt_bracket(sigma_lambda(2, lambda, SlGenerator::off_diagonal(3, i)),
                                       sigma_lambda(2, lambda, SlGenerator::off_diagonal(i, 3)));
        WittElement rhs;
        rhs.add(sigma_lambda(2, lambda, SlGenerator::cartan(i, 3)), -1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("homomorphism suites") {
    CHECK(suite_embed_hom(2).passed);
    CHECK(suite_embed_hom(3).passed);
    CHECK(suite_sigma_hom(2, Lambda({Rational(1), Rational(2)})).passed);
    CHECK(suite_sigma_hom(2, Lambda({Rational(-2, 3), Rational(5)})).passed);
    CHECK(suite_sigma_hom(3, Lambda({Rational(1), Rational(1, 2), Rational(-3)})).passed);
}

TEST_CASE("lambda validation") {
    CHECK_THROWS_AS(Lambda({Rational(1), Rational(0)}), DomainError);
}
