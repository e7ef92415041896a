#pragma once

#include "gvmlab/gvm.hpp"
#include "gvmlab/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gvmlab {

struct SuiteResult {
    std::string name;
    bool passed = true;
    bool skipped = false;
    long checks = 0;
    std::string detail;  // first counterexample, or why the suite was skipped
};

struct VerifyOptions {
    Weight mu;                         // L(mu) for the hw/gvm suites
    std::optional<std::size_t> ibar;   // forced two-block split (1-based)
    long depth = 3;                    // basis depth for the bracket suites
    std::optional<Lambda> lambda;      // witt/tensor suites; defaults to (1,...,1)
    std::optional<Weight> mu_w;        // W = L(mu_w) for the tensor suites
    std::string filter;                // substring filter on suite names
    bool inject_fault = false;         // test fixture: corrupt one bracket check
};

/// Names: bracket-hw, bracket-band, lemma3.1, lemma3.3, lemma3.4, lemma3.5,
/// lemma3.6, bracket-gvm, lemma4.1, bracket-tensor, lemma5.2, sigma-hom,
/// embed-hom, iso. Two-block-only suites report skipped on other inputs.
std::vector<SuiteResult> run_suites(const VerifyOptions& options);

// Individual suites, reused by the acceptance harness.
SuiteResult suite_bracket_hw(const Weight& mu, long depth, bool inject_fault = false);
SuiteResult suite_bracket_band(const Weight& mu, const BlockProfile& profile, long l,
                               long depth);
SuiteResult suite_lemma31(const Weight& mu, const BlockProfile& profile, long depth);
SuiteResult suite_lemma33(const Weight& mu, const BlockProfile& profile, long depth);
SuiteResult suite_lemma34(const Weight& mu, const BlockProfile& profile, long l, long kmax);
SuiteResult suite_lemma35(const Weight& mu, const BlockProfile& profile, long l, long kmax);
SuiteResult suite_lemma36(const Weight& mu, const BlockProfile& profile, long l, long kmax);
SuiteResult suite_bracket_gvm(const Weight& mu, long depth);
SuiteResult suite_lemma41(const Weight& mu, long depth);
SuiteResult suite_bracket_tensor(const Weight& mu_w, const Lambda& lambda, long depth);
SuiteResult suite_lemma52(const Weight& mu_w, const Lambda& lambda, long depth);
SuiteResult suite_sigma_hom(std::size_t m, const Lambda& lambda);
SuiteResult suite_embed_hom(std::size_t m);
SuiteResult suite_iso(const Weight& mu_w, const Lambda& lambda, long depth);

}  // namespace gvmlab
