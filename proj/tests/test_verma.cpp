#include "gvmlab/verma.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <thread>

using namespace gvmlab;

namespace {
Weight w2(const Rational& a, const Rational& b) {
    return Weight({a, b});
}
}  // namespace

TEST_CASE("verma basis enumeration by depth") {
    // gl(2): one negative root, monomials 1, E21, E21^2
    PbwRoots r2(2);
    auto groups = monomials_by_depth(r2, 2);
    std::size_t total = 0;
    for (const auto& [drop, monos] : groups)
        total += monos.size();
    CHECK(total == 3);

    // gl(3), depth 1: 1, E21, E31, E32
    PbwRoots r3(3);
    std::size_t total3 = 0;
    for (const auto& [drop, monos] : monomials_by_depth(r3, 1))
        total3 += monos.size();
    CHECK(total3 == 4);

    // gl(3), drop e_1 - e_3, depth 2: E31 and E32*E21
    auto space = monomials_with_drop(r3, {1, 0, -1});
    CHECK(space.size() == 2);
}

TEST_CASE("verma act straightening against the sl(2) string oracle") {
    test::RationalGen gen(3);
    for (int t = 0; t < 6; ++t) {
        Weight mu = w2(gen.next(), gen.next());
        VermaModule verma(mu, 8);
        Rational h = mu[0] - mu[1];
        std::size_t f = verma.roots().index_of(2, 1);
        for (long k = 1; k <= 5; ++k) {
            PbwMonomial fk = verma.empty_monomial().with_exp_delta(f, k);
            VermaVector got = verma.act(GlGenerator{1, 2}, fk);
            VermaVector want;
            verma_add(want, verma.empty_monomial().with_exp_delta(f, k - 1),
                      test::sl2_raising_coeff(h, k));
            CHECK(verma_equal(got, want));
        }
    }
}

TEST_CASE("verma act worked examples") {
    Weight mu = w2(Rational(1, 2), Rational(-1, 3));
    VermaModule verma(mu, 6);
    std::size_t f = verma.roots().index_of(2, 1);

    // E12 E21 v = (mu1 - mu2) v
    VermaVector one_step = verma.act(GlGenerator{1, 2},
                                     verma.empty_monomial().with_exp_delta(f, 1));
    CHECK(verma.vmu_coefficient(one_step) == mu[0] - mu[1]);

    // E12 E21^2 v = 2(mu1 - mu2 - 1) E21 v; frozen at this mu: -1/3
    VermaVector two_step = verma.act(GlGenerator{1, 2},
                                     verma.empty_monomial().with_exp_delta(f, 2));
    REQUIRE(two_step.size() == 1);
    CHECK(two_step.begin()->second == Rational(-1, 3));

    // E11 E21 v = (mu1 - 1) E21 v
    VermaVector cartan = verma.act(GlGenerator{1, 1},
                                   verma.empty_monomial().with_exp_delta(f, 1));
    REQUIRE(cartan.size() == 1);
    CHECK(cartan.begin()->second == mu[0] - Rational(1));

    // lowering beyond the cutoff must raise, never truncate silently
    VermaModule tight(mu, 1);
    CHECK_THROWS_AS(tight.act(GlGenerator{2, 1},
                              tight.empty_monomial().with_exp_delta(f, 1)),
                    TruncationError);
}

TEST_CASE("shapovalov gram examples") {
    // gl(2), drop e1-e2: [mu1 - mu2]
    Weight mu = w2(Rational(2, 3), Rational(1, 5));
    VermaModule verma(mu, 4);
    RationalMatrix g = verma.shapovalov_gram({1, -1});
    REQUIRE(g.rows() == 1);
    CHECK(g.at(0, 0) == mu[0] - mu[1]);

    VermaModule degenerate(w2(Rational(0), Rational(0)), 4);
    CHECK(degenerate.shapovalov_gram({1, -1}).at(0, 0) == Rational(0));

    RationalMatrix zero_drop = verma.shapovalov_gram({0, 0});
    REQUIRE(zero_drop.rows() == 1);
    CHECK(zero_drop.at(0, 0) == Rational(1));
}

TEST_CASE("simple quotient weight spaces") {
    SimpleModule trivial(w2(Rational(0), Rational(0)), 4);
    CHECK(trivial.dim({1, -1}) == 0);

    SimpleModule vec(w2(Rational(1), Rational(0)), 4);
    CHECK(vec.dim({1, -1}) == 1);
    CHECK(vec.dim({2, -2}) == 0);

    SimpleModule band(Weight({Rational(3), Rational(1), Rational(1)}), 4);
    CHECK(band.dim({1, -1, 0}) == 1);
}

TEST_CASE("weyl dimension and total quotient dimension agree") {
    CHECK(weyl_dimension(w2(Rational(1), Rational(0))) == 2);
    CHECK(weyl_dimension(Weight({Rational(2), Rational(1), Rational(0)})) == 8);
    CHECK(weyl_dimension(Weight({Rational(0), Rational(0), Rational(0)})) == 1);
    CHECK_THROWS_AS(weyl_dimension(w2(Rational(0), Rational(1))), DomainError);

    SimpleModule vec(w2(Rational(1), Rational(0)), 4);
    CHECK(total_quotient_dimension(vec) == 2);
    SimpleModule adj(Weight({Rational(2), Rational(1), Rational(0)}), 6);
    CHECK(total_quotient_dimension(adj) == 8);
}

TEST_CASE("module operations are safe under concurrent use") {
    Weight mu({Rational(1, 3), Rational(-1, 2), Rational(2)});
    SimpleModule simple(mu, 6);
    auto drops = drops_up_to_height(3, 4);
    std::vector<std::size_t> dims(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            std::size_t total = 0;
            for (const auto& drop : drops) {
                total += simple.dim(drop);
                for (const auto& mono : simple.space(drop).basis)
                    simple.act(GlGenerator{1, 2}, VermaVector{{mono, Rational(1)}});
            }
            dims[static_cast<std::size_t>(t)] = total;
        });
    for (auto& w : workers)
        w.join();
    for (int t = 1; t < 4; ++t)
        CHECK(dims[0] == dims[static_cast<std::size_t>(t)]);
    CHECK(dims[0] > 0);
}

TEST_CASE("shapovalov gram is symmetric") {
    test::RationalGen gen(43);
    for (int t = 0; t < 4; ++t) {
        Weight mu({gen.next(), gen.next(), gen.next()});
        VermaModule verma(mu, 5);
        for (const auto& drop : drops_up_to_height(3, 3)) {
            RationalMatrix g = verma.shapovalov_gram(drop);
            for (std::size_t r = 0; r < g.rows(); ++r)
                for (std::size_t c = 0; c < g.cols(); ++c)
                    CHECK(g.at(r, c) == g.at(c, r));
        }
    }
}

TEST_CASE("weight additivity of the generator action") {
    test::RationalGen gen(47);
    Weight mu({gen.next(), gen.next(), gen.next()});
    SimpleModule simple(mu, 6);
    PbwRoots roots(3);
    for (const auto& drop : drops_up_to_height(3, 3))
        for (const auto& mono : simple.space(drop).basis)
            for (std::size_t i = 1; i <= 3; ++i)
                for (std::size_t j = 1; j <= 3; ++j) {
                    if (i == j)
                        continue;
                    VermaVector y = simple.act(GlGenerator{i, j},
                                               VermaVector{{mono, Rational(1)}});
                    // image sits in the weight nu + e_i - e_j, i.e. drop - e_i + e_j
                    std::vector<long> want = drop;
                    want[i - 1] -= 1;
                    want[j - 1] += 1;
                    for (const auto& [m2, c] : y)
                        CHECK(m2.weight_drop(roots) == want);
                }
}

TEST_CASE("quotient action stays contravariant-consistent") {
    // acting then reducing equals reducing then acting
    test::RationalGen gen(17);
    Weight mu = w2(gen.next(), gen.next());
    SimpleModule simple(mu, 5);
    VermaModule verma(mu, 5);
    std::size_t f = verma.roots().index_of(2, 1);
    VermaVector x;
    verma_add(x, verma.empty_monomial().with_exp_delta(f, 2), Rational(3, 2));
    for (auto g : {GlGenerator{1, 2}, GlGenerator{2, 1}, GlGenerator{1, 1}}) {
        VermaVector a = simple.reduce(verma.act(g, x));
        VermaVector b = simple.act(g, simple.reduce(x));
        CHECK(verma_equal(a, b));
    }
}
