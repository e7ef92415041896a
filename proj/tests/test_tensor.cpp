#include "gvmlab/tensor.hpp"
#include "gvmlab/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace gvmlab;

namespace {

const Weight mu10({Rational(1), Rational(0)});
const Lambda lam12({Rational(1), Rational(2)});

TensorModule make_tensor(const Weight& mu_w, const Lambda& lambda, long depth = 8) {
    return TensorModule(std::make_shared<const HwModule>(mu_w, depth), lambda);
}

}  // namespace

TEST_CASE("pi action worked examples") {
    TensorModule tensor = make_tensor(mu10, lam12);
    HwVector w = tensor.w().highest_vector();
    TensorVector x0 = tensor.single(MultiIndex(2), w);

    // pi(d_i): 1 (x) w -> lambda_i^{-1} X_{e_i} (x) w
    TensorVector r1 = tensor.weyl_act({0, 0}, 2, x0);
    REQUIRE(r1.terms.size() == 1);
    CHECK(r1.terms.begin()->first == MultiIndex({0, 1}));
    auto ser = tensor.w().serialize(r1.terms.begin()->second);
    REQUIRE(ser.size() == 1);
    CHECK(ser[0].second == Rational(1, 2).str());

    // pi(t_2 d_1)(1 (x) w) = lambda_1^{-1} lambda_2 X_{e_1} (x) w + X_0 (x) E21 w
    TensorVector r2 = tensor.weyl_act({0, 1}, 1, x0);
    REQUIRE(r2.terms.size() == 2);
    CHECK(tensor.w().serialize(r2.terms.at(MultiIndex({1, 0})))[0].second ==
          Rational(2).str());
    auto e21w = tensor.w().serialize(r2.terms.at(MultiIndex({0, 0})));
    REQUIRE(e21w.size() == 1);
    CHECK(e21w[0].first == "E(2,1)");
}

TEST_CASE("pi is a homomorphism on the s-prime symbol set") {
    TensorModule tensor = make_tensor(mu10, lam12, 9);
    std::size_t m = 2;
    // generator symbols t^alpha d_i drawn from s': alpha in {0, e_i, e_i+e_s}
    std::vector<std::pair<std::vector<long>, std::size_t>> symbols;
    for (std::size_t i = 1; i <= m; ++i) {
        symbols.push_back({{0, 0}, i});
        for (std::size_t k = 1; k <= m; ++k) {
            std::vector<long> e(m, 0);
            e[k - 1] = 1;
            symbols.push_back({e, i});
            for (std::size_t s = 1; s <= m; ++s) {
                std::vector<long> e2 = e;
                e2[s - 1] += 1;
                symbols.push_back({e2, i});
            }
        }
    }
    auto basis = w_basis_up_to(tensor.w(), 2);
    for (const auto& [a, i] : symbols)
        for (const auto& [b, j] : symbols) {
            WittElement xa = WittElement::symbol(a, i);
            WittElement xb = WittElement::symbol(b, j);
            WittElement br = witt_bracket(xa, xb);
            for (long d = 0; d <= 1; ++d)
                for (const auto& eta : compositions_of_degree(m, d))
                    for (const auto& wv : basis) {
                        TensorVector v = tensor.single(eta, wv);
                        TensorVector lhs = tensor.witt_act(xa, tensor.witt_act(xb, v));
                        tensor.add_into(lhs, tensor.witt_act(xb, tensor.witt_act(xa, v)),
                                        -1);
                        TensorVector rhs = tensor.witt_act(br, v);
                        CHECK(tensor.equal(lhs, rhs));
                    }
        }
}

TEST_CASE("lemma 5.2 closed forms against the pi expansion") {
    CHECK(suite_lemma52(mu10, lam12, 2).passed);
    CHECK(suite_lemma52(Weight({Rational(1, 2), Rational(-1, 3)}),
                        Lambda({Rational(-2), Rational(1, 3)}), 2)
              .passed);
}

TEST_CASE("lemma 5.2 worked instances at eta = 0") {
    TensorModule tensor = make_tensor(mu10, lam12);
    HwVector w = tensor.w().highest_vector();
    TensorVector x0 = tensor.single(MultiIndex(2), w);

    // (2): X_0 (x) w -> X_0 (x) w - X_0 (x) E_{i,i} w
    TensorVector r2 = tensor.sprime_diag(1, x0);
    // on the highest vector E_{1,1} w = mu_1 w = w, so the result cancels
    CHECK(tensor.is_zero(r2));
    TensorVector r2b = tensor.sprime_diag(2, x0);
    REQUIRE(r2b.terms.size() == 1);  // (1 - mu_2) X_0 (x) w = X_0 (x) w

    // (3): L_i kills C (x) W
    CHECK(tensor.is_zero(tensor.sprime_L(1, x0)));
    CHECK(tensor.is_zero(tensor.sprime_L(2, x0)));

    // (1): eta_i = 0 leaves only the E_{i,j} term
    TensorVector r1 = tensor.sprime_offdiag(2, 1, x0);
    REQUIRE(r1.terms.size() == 1);
    CHECK(r1.terms.begin()->first == MultiIndex(2));
    auto ser = tensor.w().serialize(r1.terms.begin()->second);
    REQUIRE(ser.size() == 1);
    CHECK(ser[0].first == "E(2,1)");
    CHECK(ser[0].second == (lam12[1].inverse() * lam12[0]).str());
}

TEST_CASE("twisted module actions") {
    auto w_module = std::make_shared<const HwModule>(mu10, 6);
    TwistedLAction twist(w_module, lam12);

    // highest weight of the twist: mu + (|mu| - m - 1)(1,...,1) = (-1,-2)
    Weight tw = twist.highest_weight();
    CHECK(tw[0] == Rational(-1));
    CHECK(tw[1] == Rational(-2));

    // (E_{1,1} - E_{3,3}) w = (1 + 1 - 3) w = -w on the highest vector
    HwVector w = w_module->highest_vector();
    HwVector h1 = twist.act_h(1, w);
    HwVector expect = w_module->scaled(w, Rational(-1));
    CHECK(w_module->equal(h1, expect));

    // lambda = 1 leaves E_{i,j} untouched
    TwistedLAction plain_twist(w_module, Lambda::ones(2));
    HwVector a = plain_twist.act_offdiag(2, 1, w);
    HwVector b = w_module->act(GlGenerator{2, 1}, w);
    CHECK(w_module->equal(a, b));
}

TEST_CASE("iso map is a signed basis bijection") {
    auto w_module = std::make_shared<const HwModule>(mu10, 6);
    TensorModule tensor(w_module, lam12);
    GvmModule gvm(std::make_shared<TwistedLAction>(w_module, lam12));

    // v -> 1 (x) v
    TensorVector base = iso_map(tensor, gvm.generator());
    REQUIRE(base.terms.size() == 1);
    CHECK(base.terms.begin()->first == MultiIndex(2));

    // Y_{e_i} v -> -X_{e_i} (x) v
    for (std::size_t i = 1; i <= 2; ++i) {
        GvmVector y = gvm.act(SlGenerator::off_diagonal(3, i), gvm.generator());
        TensorVector img = iso_map(tensor, y);
        REQUIRE(img.terms.size() == 1);
        CHECK(img.terms.begin()->first == MultiIndex::unit(2, i - 1));
        CHECK(tensor.w().vmu_coefficient(img.terms.begin()->second) == Rational(-1));
    }

    // degree-d basis goes bijectively to {X_alpha (x) w} up to sign
    auto basis = w_basis_up_to(*w_module, 2);
    for (long d = 0; d <= 3; ++d)
        for (const auto& alpha : compositions_of_degree(2, d))
            for (const auto& wv : basis) {
                TensorVector img = iso_map(tensor, gvm.single(alpha, wv));
                REQUIRE(img.terms.size() == 1);
                CHECK(img.terms.begin()->first == alpha);
            }
}

TEST_CASE("iso verification at small depth") {
    IsoReport quick = iso_verify(mu10, Lambda::ones(2), 2, 6);
    CHECK(quick.all_passed());

    IsoReport wide = iso_verify(mu10, lam12, 3, 7);
    CHECK(wide.all_passed());
    CHECK(wide.generators.size() == 8);
}

TEST_CASE("tensor simplicity corollary") {
    // m=2, mu=(1,0): case 1 via mu_1 + |mu| - 1 = 1 in N, a = 1 not in {0}
    BlockProfile p10 = detect_profile(mu10);
    SimplicityVerdict v1 = tensor_simplicity(lam12, mu10, p10);
    CHECK_FALSE(v1.simple);
    CHECK(v1.case1_holds);
    CHECK_FALSE(v1.case2_holds);
    REQUIRE(v1.l.has_value());
    CHECK(*v1.l == 1);

    // m=2, mu=(0,0): both conditions fail
    Weight mu00({Rational(0), Rational(0)});
    SimplicityVerdict v2 = tensor_simplicity(lam12, mu00, detect_profile(mu00));
    CHECK(v2.simple);

    // verdict is lambda-independent
    test::RationalGen gen(41);
    for (int t = 0; t < 5; ++t) {
        Rational l1 = gen.next();
        Rational l2 = gen.next();
        if (l1.is_zero() || l2.is_zero())
            continue;
        Lambda other({l1, l2});
        SimplicityVerdict w1 = tensor_simplicity(other, mu10, p10);
        CHECK(w1.simple == v1.simple);
        CHECK(w1.case1_holds == v1.case1_holds);
        CHECK(w1.case2_holds == v1.case2_holds);
    }
}

TEST_CASE("tensor bracket consistency through sigma") {
    CHECK(suite_bracket_tensor(mu10, lam12, 2).passed);
}
