// Acceptance harness: one pass/fail line per criterion, nonzero exit on failure.

#include "gvmlab/gvm.hpp"
#include "gvmlab/tensor.hpp"
#include "gvmlab/verify.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gvmlab;

namespace {

struct Check {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
};

Weight rw(std::initializer_list<long> entries) {
    std::vector<Rational> v;
    for (long e : entries)
        v.emplace_back(e);
    return Weight(std::move(v));
}

GvmModule plain_module(const Weight& mu, long hw_depth) {
    return GvmModule(std::make_shared<PlainLAction>(
        std::make_shared<const HwModule>(mu, hw_depth)));
}

bool expect(bool ok, const std::string& what, std::string& detail) {
    if (!ok && detail.empty())
        detail = what;
    return ok;
}

// --- criterion 1: bracket-consistency master suite ---------------------------
bool criterion1(std::string& detail) {
    bool ok = true;
    Weight mu2({Rational(-1), Rational(-1, 2)});
    Weight mu3 = rw({3, 1, 1});
    ok &= expect(suite_bracket_hw(mu2, 3).passed, "bracket-hw m=2", detail);
    ok &= expect(suite_bracket_hw(mu3, 3).passed, "bracket-hw m=3", detail);
    ok &= expect(suite_bracket_band(mu2, detect_profile(mu2), 4, 3).passed,
                 "bracket-band m=2", detail);
    ok &= expect(suite_bracket_band(mu3, detect_profile(mu3), 5, 3).passed,
                 "bracket-band m=3", detail);
    ok &= expect(suite_bracket_gvm(mu2, 3).passed, "bracket-gvm m=2", detail);
    ok &= expect(suite_bracket_gvm(mu3, 3).passed, "bracket-gvm m=3", detail);
    Lambda lam2({Rational(1), Rational(2)});
    Lambda lam3({Rational(1), Rational(2), Rational(-1, 2)});
    ok &= expect(suite_bracket_tensor(rw({1, 0}), lam2, 3).passed,
                 "bracket-tensor m=2", detail);
    ok &= expect(suite_bracket_tensor(rw({1, 0, 0}), lam3, 3).passed,
                 "bracket-tensor m=3", detail);
    return ok;
}

// --- criterion 2: Lemma 4.1 closed forms vs commutator oracle ----------------
bool criterion2(std::string& detail) {
    test::RationalGen gen(101);
    bool ok = true;
    for (int t = 0; t < 5 && ok; ++t) {
        Weight mu({gen.next(), gen.next()});
        SuiteResult r = suite_lemma41(mu, 3);
        ok = expect(r.passed, "m=2 instance " + std::to_string(t) + ": " + r.detail,
                    detail);
    }
    for (int t = 0; t < 5 && ok; ++t) {
        Weight mu({gen.next(), gen.next(), gen.next()});
        SuiteResult r = suite_lemma41(mu, 3);
        ok = expect(r.passed, "m=3 instance " + std::to_string(t) + ": " + r.detail,
                    detail);
    }
    return ok;
}

// --- criterion 3: Theorem case (2) reproduction ------------------------------
bool case2_reproduction(const Weight& mu, std::string& detail) {
    BlockProfile profile = detect_profile(mu);
    SimplicityVerdict verdict = simplicity_criterion(mu, profile);
    bool ok = expect(!verdict.simple && verdict.case2_holds, "criterion misses case 2",
                     detail);
    long degree = (mu[mu.size() - 1] + Rational(1)).to_long();

    GvmModule gvm = plain_module(mu, search_depth_requirement(mu.size(), degree));
    SearchResult res = gvm.singular_search(degree);
    ok &= expect(!res.truncated && !res.lines.empty(), "search found nothing", detail);
    if (!ok)
        return false;
    const SingularLine* minimal = &res.lines.front();
    for (const auto& line : res.lines)
        if (grlex_less(line.leading, minimal->leading))
            minimal = &line;
    MultiIndex want(mu.size());
    for (long t = 0; t < degree; ++t)
        want = want.plus(mu.size() - 1);
    ok &= expect(minimal->leading == want, "minimal leading exponent is off", detail);
    GvmVector built = build_singular_case2(gvm);
    ok &= expect(gvm.equal(minimal->vector, built),
                 "search line differs from Y_{(mu_m+1)e_m} v", detail);
    StructuralReport rep = gvm.structural_checks(minimal->vector);
    ok &= expect(rep.all_passed(), "structural checks fail", detail);
    for (const auto& item : rep.items)
        ok &= expect(item.skipped || item.passed, "structural item " + item.name, detail);
    return ok;
}

bool criterion3(std::string& detail) {
    return case2_reproduction(rw({0, 0}), detail) &&
           case2_reproduction(rw({2, 2, 0}), detail);
}

// --- criterion 4: Theorem case (1) reproduction ------------------------------
bool criterion4(std::string& detail) {
    Weight mu({Rational(-1), Rational(-1, 2)});
    BlockProfile profile = detect_profile(mu);
    SimplicityVerdict verdict = simplicity_criterion(mu, profile);
    bool ok = expect(!verdict.simple && verdict.case1_holds && !verdict.case2_holds,
                     "criterion misses case 1", detail);

    auto hw = std::make_shared<const HwModule>(mu, search_depth_requirement(2, 1),
                                               profile, *profile.l);
    GvmModule gvm((std::make_shared<PlainLAction>(hw)));
    SearchResult res = gvm.singular_search(1);
    ok &= expect(res.lines.size() == 1, "expected exactly one line at degree 1", detail);
    if (!ok)
        return false;
    ok &= expect(res.lines[0].leading == MultiIndex({1, 0}), "leading exponent", detail);

    GvmVector u = build_singular_case1(gvm, profile);
    ok &= expect(gvm.equal(res.lines[0].vector, u),
                 "search line differs from the Lemma 4.10 vector", detail);
    ok &= expect(gvm.is_highest_weight(u), "highest-weight check", detail);

    // v(2) = -2 E21 v in the quotient realization
    HwVector v2 = gvm.hw().to_quotient(u.terms.at(MultiIndex({0, 1})));
    auto ser = gvm.hw().serialize(v2);
    ok &= expect(ser.size() == 1 && ser[0].first == "E(2,1)" && ser[0].second == "-2",
                 "v(2) embedding", detail);
    return ok;
}

// --- criterion 5: simple direction, bounded search ---------------------------
bool criterion5(std::string& detail) {
    std::vector<Weight> samples{Weight({Rational(-1, 2), Rational(-1, 3)})};
    test::RationalGen gen(202);
    while (samples.size() < 8) {  // m = 2 random two-block weights
        Weight mu({gen.next(), gen.next()});
        try {
            if (simplicity_criterion(mu, detect_profile(mu)).simple)
                samples.push_back(mu);
        } catch (const DomainError&) {
        }
    }
    while (samples.size() < 11) {  // m = 3: constant tail keeps mu two-block
        Rational head = gen.next();
        Rational tail = gen.next();
        Weight mu({head, tail, tail});
        try {
            if (simplicity_criterion(mu, detect_profile(mu)).simple)
                samples.push_back(mu);
        } catch (const DomainError&) {
        }
    }
    for (const auto& mu : samples) {
        GvmModule gvm = plain_module(mu, search_depth_requirement(mu.size(), 4));
        SearchResult res = gvm.singular_search(4);
        if (res.truncated || !res.lines.empty()) {
            detail = "unexpected singular vector at mu = " + mu.str();
            return false;
        }
    }
    return true;
}

// --- criterion 6: band-model equivalence at mu = (3,1,1), l = 5 --------------
bool criterion6(std::string& detail) {
    Weight mu = rw({3, 1, 1});
    BlockProfile profile = detect_profile(mu);
    bool ok = true;

    // Lemma 3.4 dimension sequence per multiset size: 1, 2, 3, 0
    BandModule band(mu, profile, 5);
    SimpleModule simple(mu, 8);
    std::vector<std::size_t> dims;
    for (long k = 0; k <= 3; ++k) {
        std::size_t total = 0;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t min_entry, long left) -> void {
            if (left == 0) {
                total += simple.dim(band.drop_of(BandMultiset{cur}));
                return;
            }
            for (std::size_t i = min_entry; i <= 3; ++i) {
                cur.push_back(i);
                self(self, i, left - 1);
                cur.pop_back();
            }
        };
        rec(rec, 2, k);
        dims.push_back(total);
    }
    ok &= expect(dims == std::vector<std::size_t>{1, 2, 3, 0},
                 "Lemma 3.4 dimension sequence", detail);

    SuiteResult l34 = suite_lemma34(mu, profile, 5, 3);
    ok &= expect(l34.passed, "lemma3.4: " + l34.detail, detail);
    SuiteResult l36 = suite_lemma36(mu, profile, 5, 2);
    ok &= expect(l36.passed, "lemma3.6: " + l36.detail, detail);
    SuiteResult l35 = suite_lemma35(mu, profile, 5, 2);
    ok &= expect(l35.passed, "lemma3.5: " + l35.detail, detail);
    return ok;
}

// --- criterion 7: finite-dimension oracle ------------------------------------
bool criterion7(std::string& detail) {
    SimpleModule vec(rw({1, 0}), 4);
    bool ok = expect(total_quotient_dimension(vec) == 2 && weyl_dimension(rw({1, 0})) == 2,
                     "gl(2) L(1,0) dimension", detail);
    SimpleModule adjish(rw({2, 1, 0}), 6);
    ok &= expect(total_quotient_dimension(adjish) == 8 &&
                     weyl_dimension(rw({2, 1, 0})) == 8,
                 "gl(3) L(2,1,0) dimension", detail);
    return ok;
}

// --- criterion 8: section-5 equivalence --------------------------------------
bool criterion8(std::string& detail) {
    Weight mu_w = rw({1, 0});
    Lambda lambda({Rational(1), Rational(2)});
    IsoReport iso = iso_verify(mu_w, lambda, 4, 8);
    bool ok = expect(iso.all_passed() && iso.generators.size() == 8,
                     "iso_verify", detail);
    SuiteResult sig = suite_sigma_hom(2, lambda);
    ok &= expect(sig.passed, "sigma-hom: " + sig.detail, detail);
    SuiteResult emb = suite_embed_hom(2);
    ok &= expect(emb.passed, "embed-hom: " + emb.detail, detail);
    SuiteResult l52 = suite_lemma52(mu_w, lambda, 3);
    ok &= expect(l52.passed, "lemma5.2: " + l52.detail, detail);
    return ok;
}

// --- criterion 9: final-Corollary cross-check --------------------------------
bool criterion9(std::string& detail) {
    test::RationalGen gen(303);
    auto random_lambda = [&](std::size_t m) {
        std::vector<Rational> e;
        while (e.size() < m) {
            Rational x = gen.next();
            if (!x.is_zero())
                e.push_back(x);
        }
        return Lambda(std::move(e));
    };
    int tested = 0;
    while (tested < 10) {
        std::size_t m = (tested % 2 == 0) ? 2 : 3;
        std::vector<Rational> entries;
        Rational head = gen.next(), tail = gen.next();
        entries.push_back(head);
        while (entries.size() < m)
            entries.push_back(tail);
        Weight mu(entries);
        BlockProfile profile;
        try {
            profile = detect_profile(mu);
        } catch (const DomainError&) {
            continue;
        }
        SimplicityVerdict twisted =
            simplicity_criterion(twisted_weight(mu), detect_profile(twisted_weight(mu),
                                                                    profile.ibar));
        std::optional<SimplicityVerdict> first;
        for (int lt = 0; lt < 3; ++lt) {
            SimplicityVerdict v = tensor_simplicity(random_lambda(m), mu, profile);
            if (v.simple != twisted.simple || v.case1_holds != twisted.case1_holds ||
                v.case2_holds != twisted.case2_holds) {
                detail = "corollary disagrees with the twisted criterion at " + mu.str();
                return false;
            }
            if (first && (v.simple != first->simple)) {
                detail = "lambda dependence at " + mu.str();
                return false;
            }
            first = v;
        }
        ++tested;
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Check> checks{
        {1, "bracket-consistency master suite", criterion1},
        {2, "gvm closed forms match the commutator oracle", criterion2},
        {3, "theorem reproduction, case (2)", criterion3},
        {4, "theorem reproduction, case (1)", criterion4},
        {5, "simple direction: bounded search stays empty", criterion5},
        {6, "band-model equivalence at mu=(3,1,1)", criterion6},
        {7, "finite-dimension oracle", criterion7},
        {8, "section-5 equivalence", criterion8},
        {9, "final-corollary cross-check", criterion9},
    };

    int failures = 0;
    for (auto& check : checks) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = check.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << check.id << " (" << check.name
             << ") [" << ms << " ms]";
        if (!ok)
            line << ": " << detail;
        std::cout << line.str() << "\n";
        if (!ok)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
