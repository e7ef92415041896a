#include "gvmlab/verify.hpp"

#include <algorithm>

namespace gvmlab {

namespace {

std::vector<GlGenerator> gl_generators(std::size_t m) {
    std::vector<GlGenerator> out;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            out.push_back(GlGenerator{i, j});
    return out;
}

std::string describe(const HwModule& hw, const HwVector& v) {
    auto pairs = hw.serialize(v);
    if (pairs.empty())
        return "0";
    std::string s;
    for (const auto& [label, c] : pairs) {
        if (!s.empty())
            s += " + ";
        s += "(" + c + ")" + label;
    }
    return s;
}

}  // namespace

SuiteResult suite_bracket_hw(const Weight& mu, long depth, bool inject_fault) {
    SuiteResult res;
    res.name = "bracket-hw";
    // Two lowerings can each deepen a drop by the tallest root height m-1.
    HwModule hw(mu, depth + 2 * static_cast<long>(mu.size() - 1));
    auto gens = gl_generators(mu.size());
    bool fault_pending = inject_fault;
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& drop : drops_up_to_height(mu.size(), depth))
                for (const auto& mono : hw.simple().space(drop).basis) {
                    HwVector v = HwVector::from_quotient({{mono, Rational(1)}});
                    HwVector lhs = hw.act(x, hw.act(y, v));
                    hw.add_into(lhs, hw.act(y, hw.act(x, v)), -1);
                    HwVector rhs;
                    for (const auto& [c, h] : gl_bracket(x, y))
                        hw.add_into(rhs, hw.act(h, v), c);
                    if (fault_pending) {
                        // Test fixture: corrupt one structure constant once.
                        hw.add_into(rhs, v, 1);
                        fault_pending = false;
                    }
                    ++res.checks;
                    HwVector diff = lhs;
                    hw.add_into(diff, rhs, -1);
                    if (!hw.is_zero(diff)) {
                        res.passed = false;
                        res.detail = "[" + x.str() + "," + y.str() + "] on " +
                                     mono.str(hw.simple().verma().roots()) +
                                     ": xy-yx = " + describe(hw, lhs) +
                                     " but [x,y] = " + describe(hw, rhs);
                        return res;
                    }
                }
    return res;
}

SuiteResult suite_bracket_band(const Weight& mu, const BlockProfile& profile, long l,
                               long depth) {
    SuiteResult res;
    res.name = "bracket-band";
    if (!profile.has_band() || profile.a.is_zero()) {
        res.skipped = true;
        res.detail = "no band realization for this mu";
        return res;
    }
    BandModule band(mu, profile, l);
    std::vector<GlGenerator> gens;
    for (std::size_t j = 1; j <= profile.m; ++j)
        gens.push_back(GlGenerator{j, j});
    for (std::size_t i = profile.ibar + 1; i <= profile.m; ++i) {
        gens.push_back(GlGenerator{i, profile.ibar});
        gens.push_back(GlGenerator{profile.ibar, i});
        for (std::size_t p = profile.ibar + 1; p <= profile.m; ++p)
            if (p != i)
                gens.push_back(GlGenerator{i, p});
    }
    long kmax = std::min(depth, l - 2);  // two lowerings must stay below l
    for (long k = 0; k <= kmax; ++k)
        for (const auto& ms : band.basis(k))
            for (const auto& x : gens)
                for (const auto& y : gens) {
                    BandVector v;
                    band_add(v, ms, 1);
                    BandVector lhs = band.act(x, band.act(y, v));
                    band_add(lhs, band.act(y, band.act(x, v)), -1);
                    BandVector rhs;
                    for (const auto& [c, h] : gl_bracket(x, y))
                        band_add(rhs, band.act(h, v), c);
                    ++res.checks;
                    BandVector diff = lhs;
                    band_add(diff, rhs, -1);
                    if (!diff.empty()) {
                        res.passed = false;
                        res.detail = "[" + x.str() + "," + y.str() + "] on " + ms.str();
                        return res;
                    }
                }
    return res;
}

SuiteResult suite_lemma31(const Weight& mu, const BlockProfile& profile, long depth) {
    SuiteResult res;
    res.name = "lemma3.1";
    SimpleModule simple(mu, depth);
    std::size_t m = mu.size();
    // Nonzero drops supported on the simple roots interior to one constant block.
    auto check_block = [&](std::size_t lo, std::size_t hi) {  // roots lo..hi, 1-based
        if (lo > hi)
            return true;
        std::size_t span = hi - lo + 1;
        for (const auto& small : drops_up_to_height(span + 1, depth)) {
            if (drop_height(small) == 0)
                continue;
            std::vector<long> drop(m, 0);
            for (std::size_t t = 0; t < span + 1; ++t)
                drop[lo - 1 + t] = small[t];
            ++res.checks;
            if (simple.dim(drop) != 0) {
                res.passed = false;
                res.detail = "nonzero space inside a constant block";
                return false;
            }
        }
        return true;
    };
    // Block 1 spans simple roots 1..ibar-1; block 2 spans ibar+1..m-1.
    if (!check_block(1, profile.ibar - 1))
        return res;
    if (profile.ibar + 1 <= m - 1)
        check_block(profile.ibar + 1, m - 1);
    return res;
}

SuiteResult suite_lemma33(const Weight& mu, const BlockProfile& profile, long depth) {
    SuiteResult res;
    res.name = "lemma3.3";
    if (!profile.has_band() || !profile.a.is_positive_integer()) {
        res.skipped = true;
        res.detail = "needs mu_ibar - mu_{ibar+1} in N";
        return res;
    }
    long a = profile.a.to_long();
    long count = a + 1;
    if (count * static_cast<long>(profile.m - profile.ibar) > depth + 16) {
        res.skipped = true;
        res.detail = "string length beyond configured depth";
        return res;
    }
    SimpleModule simple(mu, count * static_cast<long>(profile.m - profile.ibar) + 1);
    // All multisets j_1..j_{a+1} over the band; the lowering factors commute.
    std::vector<std::size_t> cur;
    bool ok = true;
    auto rec = [&](auto&& self, std::size_t min_entry, long left) -> void {
        if (!ok)
            return;
        if (left == 0) {
            PbwMonomial mono = simple.verma().empty_monomial();
            for (std::size_t i : cur)
                mono = mono.with_exp_delta(simple.verma().roots().index_of(i, profile.ibar),
                                           +1);
            ++res.checks;
            if (!simple.is_zero({{mono, Rational(1)}})) {
                ok = false;
                res.passed = false;
                res.detail = "string of " + std::to_string(count) +
                             " lowerings survives in the quotient";
            }
            return;
        }
        for (std::size_t i = min_entry; i <= profile.m; ++i) {
            cur.push_back(i);
            self(self, i, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, profile.ibar + 1, count);
    return res;
}

SuiteResult suite_lemma34(const Weight& mu, const BlockProfile& profile, long l, long kmax) {
    SuiteResult res;
    res.name = "lemma3.4";
    if (!profile.has_band() || profile.a.is_zero()) {
        res.skipped = true;
        res.detail = "no band for this mu";
        return res;
    }
    BandModule band(mu, profile, l);
    SimpleModule simple(mu, kmax * static_cast<long>(profile.m - profile.ibar) + 1);
    for (long k = 0; k <= kmax; ++k) {
        // Every multiset of size k, valid or truncated, against the oracle dim.
        std::vector<std::size_t> cur;
        bool ok = true;
        auto rec = [&](auto&& self, std::size_t min_entry, long left) -> void {
            if (!ok)
                return;
            if (left == 0) {
                BandMultiset ms{cur};
                bool valid = !profile.a.is_nonneg_integer() || k <= profile.a.to_long();
                ++res.checks;
                std::size_t dim = simple.dim(band.drop_of(ms));
                if (dim != (valid ? 1u : 0u)) {
                    ok = false;
                    res.passed = false;
                    res.detail = ms.str() + ": oracle dim " + std::to_string(dim) +
                                 ", band model expects " + (valid ? "1" : "0");
                }
                return;
            }
            for (std::size_t i = min_entry; i <= profile.m; ++i) {
                cur.push_back(i);
                self(self, i, left - 1);
                cur.pop_back();
            }
        };
        rec(rec, profile.ibar + 1, k);
        if (!res.passed)
            return res;
    }
    return res;
}

SuiteResult suite_lemma35(const Weight& mu, const BlockProfile& profile, long l, long kmax) {
    SuiteResult res;
    res.name = "lemma3.5";
    if (!profile.has_band() || profile.a.is_zero()) {
        res.skipped = true;
        res.detail = "no band for this mu";
        return res;
    }
    BandModule band(mu, profile, l);
    SimpleModule simple(mu, kmax * static_cast<long>(profile.m - profile.ibar) + 1);
    for (long k = 0; k <= std::min(kmax, l); ++k)
        for (const auto& ms : band.basis(k)) {
            VermaVector v = band.embed(ms, simple);
            for (std::size_t i : ms.entries())
                v = simple.act(GlGenerator{profile.ibar, i}, v);
            VermaVector want;
            verma_add(want, simple.verma().empty_monomial(), falling_factorial(l, k));
            ++res.checks;
            if (!(v == want)) {
                res.passed = false;
                res.detail = "normalization fails at " + ms.str();
                return res;
            }
        }
    return res;
}

SuiteResult suite_lemma36(const Weight& mu, const BlockProfile& profile, long l, long kmax) {
    SuiteResult res;
    res.name = "lemma3.6";
    if (!profile.has_band() || profile.a.is_zero()) {
        res.skipped = true;
        res.detail = "no band for this mu";
        return res;
    }
    HwModule hw(mu, kmax * static_cast<long>(profile.m - profile.ibar) +
                        static_cast<long>(profile.m) + 2,
                profile, l);
    const BandModule& band = hw.band();
    std::vector<GlGenerator> gens;
    for (std::size_t j = 1; j <= profile.m; ++j)
        gens.push_back(GlGenerator{j, j});
    for (std::size_t i = profile.ibar + 1; i <= profile.m; ++i) {
        gens.push_back(GlGenerator{i, profile.ibar});
        gens.push_back(GlGenerator{profile.ibar, i});
        for (std::size_t p = profile.ibar + 1; p <= profile.m; ++p)
            if (p != i)
                gens.push_back(GlGenerator{i, p});
    }
    for (long k = 0; k <= std::min(kmax, l); ++k)
        for (const auto& ms : band.basis(k))
            for (const auto& g : gens) {
                bool lowering_into_band = g.j == profile.ibar && g.i > profile.ibar;
                if (lowering_into_band && k >= l)
                    continue;  // Lemma 3.6 (3) is stated only for k < l
                BandVector bv;
                band_add(bv, ms, 1);
                HwVector via_band =
                    hw.to_quotient(HwVector::from_band(band.act(g, bv)));
                HwVector direct =
                    hw.act(g, hw.to_quotient(HwVector::from_band(bv)));
                ++res.checks;
                HwVector diff = via_band;
                hw.add_into(diff, direct, -1);
                if (!hw.is_zero(diff)) {
                    res.passed = false;
                    res.detail = g.str() + " on " + ms.str() +
                                 ": band model and quotient oracle disagree";
                    return res;
                }
            }
    return res;
}

SuiteResult suite_bracket_gvm(const Weight& mu, long depth) {
    SuiteResult res;
    res.name = "bracket-gvm";
    std::size_t m = mu.size();
    auto hw = std::make_shared<const HwModule>(mu, depth + 2 * static_cast<long>(m));
    GvmModule gvm(std::make_shared<PlainLAction>(hw));
    auto basis_w = w_basis_up_to(*hw, depth);
    const auto gens = sl_basis(m);
    for (long d = 0; d <= depth; ++d)
        for (const auto& alpha : compositions_of_degree(m, d))
            for (const auto& wv : basis_w) {
                GvmVector v = gvm.single(alpha, wv);
                for (const auto& x : gens)
                    for (const auto& y : gens) {
                        GvmVector lhs = gvm.act(x, gvm.act(y, v));
                        gvm.add_into(lhs, gvm.act(y, gvm.act(x, v)), -1);
                        GvmVector rhs;
                        for (const auto& [c, h] : sl_bracket(m, x, y))
                            gvm.add_into(rhs, gvm.act(h, v), c);
                        ++res.checks;
                        if (!gvm.equal(lhs, rhs)) {
                            res.passed = false;
                            res.detail = "[" + x.str() + "," + y.str() + "] on Y" +
                                         alpha.str();
                            return res;
                        }
                    }
            }
    return res;
}

SuiteResult suite_lemma41(const Weight& mu, long depth) {
    SuiteResult res;
    res.name = "lemma4.1";
    std::size_t m = mu.size();
    auto hw = std::make_shared<const HwModule>(mu, depth + 2 * static_cast<long>(m));
    GvmModule gvm(std::make_shared<PlainLAction>(hw));
    auto basis_w = w_basis_up_to(*hw, depth);
    for (long d = 0; d <= depth; ++d)
        for (const auto& alpha : compositions_of_degree(m, d))
            for (const auto& wv : basis_w) {
                GvmVector v = gvm.single(alpha, wv);
                for (const auto& g : sl_basis(m)) {
                    ++res.checks;
                    if (!gvm.equal(gvm.act(g, v), gvm.act_oracle(g, v))) {
                        res.passed = false;
                        res.detail = g.str() + " on Y" + alpha.str() +
                                     ": closed form disagrees with the commutator oracle";
                        return res;
                    }
                }
            }
    return res;
}

SuiteResult suite_bracket_tensor(const Weight& mu_w, const Lambda& lambda, long depth) {
    SuiteResult res;
    res.name = "bracket-tensor";
    std::size_t m = mu_w.size();
    auto hw = std::make_shared<const HwModule>(mu_w, depth + 2 * static_cast<long>(m));
    TensorModule tensor(hw, lambda);
    auto basis_w = w_basis_up_to(*hw, depth);
    const auto gens = sl_basis(m);
    for (long d = 0; d <= depth; ++d)
        for (const auto& eta : compositions_of_degree(m, d))
            for (const auto& wv : basis_w) {
                TensorVector v = tensor.single(eta, wv);
                for (const auto& x : gens)
                    for (const auto& y : gens) {
                        TensorVector lhs = tensor.act_sigma_closed(x, tensor.act_sigma_closed(y, v));
                        tensor.add_into(lhs, tensor.act_sigma_closed(y, tensor.act_sigma_closed(x, v)),
                                        -1);
                        TensorVector rhs;
                        for (const auto& [c, h] : sl_bracket(m, x, y))
                            tensor.add_into(rhs, tensor.act_sigma_closed(h, v), c);
                        ++res.checks;
                        if (!tensor.equal(lhs, rhs)) {
                            res.passed = false;
                            res.detail = "[" + x.str() + "," + y.str() + "] on X" +
                                         eta.str();
                            return res;
                        }
                    }
            }
    return res;
}

SuiteResult suite_lemma52(const Weight& mu_w, const Lambda& lambda, long depth) {
    SuiteResult res;
    res.name = "lemma5.2";
    std::size_t m = mu_w.size();
    auto hw = std::make_shared<const HwModule>(mu_w, depth + 2 * static_cast<long>(m));
    TensorModule tensor(hw, lambda);
    auto basis_w = w_basis_up_to(*hw, depth);

    // The three s' generator families as W_m elements.
    struct Family {
        std::string name;
        WittElement element;
        std::function<TensorVector(const TensorVector&)> closed;
    };
    std::vector<Family> families;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            if (i == j)
                continue;
            WittElement e;
            std::vector<long> ei(m, 0);
            ei[i - 1] = 1;
            e.add(ei, j, lambda[i - 1].inverse() * lambda[j - 1]);
            e.add(std::vector<long>(m, 0), j, -lambda[j - 1]);
            families.push_back({"family1(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                e,
                                [&tensor, i, j](const TensorVector& v) {
                                    return tensor.sprime_offdiag(i, j, v);
                                }});
        }
        WittElement e2;
        e2.add(std::vector<long>(m, 0), i, lambda[i - 1]);
        std::vector<long> ei(m, 0);
        ei[i - 1] = 1;
        e2.add(ei, i, -1);
        families.push_back({"family2(" + std::to_string(i) + ")", e2,
                            [&tensor, i](const TensorVector& v) {
                                return tensor.sprime_diag(i, v);
                            }});
        families.push_back({"family3(L_" + std::to_string(i) + ")", witt_L(lambda, i),
                            [&tensor, i](const TensorVector& v) {
                                return tensor.sprime_L(i, v);
                            }});
    }

    for (long d = 0; d <= depth; ++d)
        for (const auto& eta : compositions_of_degree(m, d))
            for (const auto& wv : basis_w) {
                TensorVector v = tensor.single(eta, wv);
                for (const auto& fam : families) {
                    ++res.checks;
                    if (!tensor.equal(fam.closed(v), tensor.witt_act(fam.element, v))) {
                        res.passed = false;
                        res.detail = fam.name + " on X" + eta.str() +
                                     ": closed form disagrees with the pi expansion";
                        return res;
                    }
                }
            }
    return res;
}

SuiteResult suite_sigma_hom(std::size_t m, const Lambda& lambda) {
    SuiteResult res;
    res.name = "sigma-hom";
    auto bad = lie_hom_counterexample(
        m, [&](const SlGenerator& g) { return sigma_lambda(m, lambda, g); });
    res.checks = static_cast<long>(sl_basis(m).size() * sl_basis(m).size());
    if (bad) {
        res.passed = false;
        res.detail = *bad;
    }
    return res;
}

SuiteResult suite_embed_hom(std::size_t m) {
    SuiteResult res;
    res.name = "embed-hom";
    auto bad = lie_hom_counterexample(
        m, [&](const SlGenerator& g) { return embed_standard(m, g); });
    res.checks = static_cast<long>(sl_basis(m).size() * sl_basis(m).size());
    if (bad) {
        res.passed = false;
        res.detail = *bad;
    }
    return res;
}

SuiteResult suite_iso(const Weight& mu_w, const Lambda& lambda, long depth) {
    SuiteResult res;
    res.name = "iso";
    long w_depth = 2 * static_cast<long>(mu_w.size()) + depth;
    IsoReport report = iso_verify(mu_w, lambda, depth, w_depth);
    for (const auto& pg : report.generators) {
        res.checks += pg.checked;
        if (!pg.passed) {
            res.passed = false;
            res.detail = pg.generator.str() + " fails to intertwine at " +
                         pg.counterexample;
            return res;
        }
    }
    return res;
}

std::vector<SuiteResult> run_suites(const VerifyOptions& options) {
    std::vector<SuiteResult> out;
    const Weight& mu = options.mu;
    std::size_t m = mu.size();
    Lambda lambda = options.lambda.value_or(Lambda::ones(m));
    Weight mu_w = options.mu_w.value_or(mu);

    std::optional<BlockProfile> profile;
    try {
        profile = detect_profile(mu, options.ibar);
    } catch (const DomainError&) {
        profile = std::nullopt;
    }
    long band_l = 0;
    if (profile && profile->has_band())
        band_l = profile->l ? *profile->l
                            : (profile->a.is_positive_integer()
                                   ? profile->a.to_long() + options.depth
                                   : options.depth + 2);

    auto two_block_skip = [&](const std::string& name) {
        SuiteResult r;
        r.name = name;
        r.skipped = true;
        r.detail = "mu is not two-block";
        return r;
    };

    auto want = [&](const std::string& name) {
        return options.filter.empty() || name.find(options.filter) != std::string::npos;
    };

    if (want("bracket-hw"))
        out.push_back(suite_bracket_hw(mu, options.depth, options.inject_fault));
    if (want("bracket-band"))
        out.push_back(profile ? suite_bracket_band(mu, *profile, band_l, options.depth)
                              : two_block_skip("bracket-band"));
    if (want("lemma3.1"))
        out.push_back(profile ? suite_lemma31(mu, *profile, options.depth)
                              : two_block_skip("lemma3.1"));
    if (want("lemma3.3"))
        out.push_back(profile ? suite_lemma33(mu, *profile, options.depth)
                              : two_block_skip("lemma3.3"));
    if (want("lemma3.4"))
        out.push_back(profile && profile->has_band() && !profile->a.is_zero()
                          ? suite_lemma34(mu, *profile, band_l, options.depth)
                          : two_block_skip("lemma3.4"));
    if (want("lemma3.5"))
        out.push_back(profile && profile->has_band() && !profile->a.is_zero()
                          ? suite_lemma35(mu, *profile, band_l, options.depth)
                          : two_block_skip("lemma3.5"));
    if (want("lemma3.6"))
        out.push_back(profile && profile->has_band() && !profile->a.is_zero()
                          ? suite_lemma36(mu, *profile, band_l, options.depth)
                          : two_block_skip("lemma3.6"));
    if (want("bracket-gvm"))
        out.push_back(suite_bracket_gvm(mu, options.depth));
    if (want("lemma4.1"))
        out.push_back(suite_lemma41(mu, options.depth));
    if (want("bracket-tensor"))
        out.push_back(suite_bracket_tensor(mu_w, lambda, options.depth));
    if (want("lemma5.2"))
        out.push_back(suite_lemma52(mu_w, lambda, options.depth));
    if (want("sigma-hom"))
        out.push_back(suite_sigma_hom(m, lambda));
    if (want("embed-hom"))
        out.push_back(suite_embed_hom(m));
    if (want("iso"))
        out.push_back(suite_iso(mu_w, lambda, options.depth));
    return out;
}

}  // namespace gvmlab
