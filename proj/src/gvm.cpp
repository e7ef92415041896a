#include "gvmlab/gvm.hpp"

#include <algorithm>

namespace gvmlab {

GvmModule::GvmModule(std::shared_ptr<const LAction> l_action) : l_(std::move(l_action)) {}

GvmVector GvmModule::generator() const {
    return single(MultiIndex(m()), hw().highest_vector());
}

GvmVector GvmModule::single(const MultiIndex& alpha, HwVector u) const {
    GvmVector out;
    if (alpha.size() != m())
        throw DimensionError("GvmModule: exponent length mismatch");
    if (!u.terms_empty())
        out.terms.emplace(alpha, std::move(u));
    return out;
}

void GvmModule::add_into(GvmVector& into, const GvmVector& other, const Rational& scale) const {
    if (scale.is_zero())
        return;
    for (const auto& [alpha, u] : other.terms) {
        auto it = into.terms.find(alpha);
        if (it == into.terms.end()) {
            HwVector v;
            v.realization = u.realization;
            hw().add_into(v, u, scale);
            if (!v.terms_empty())
                into.terms.emplace(alpha, std::move(v));
        } else {
            hw().add_into(it->second, u, scale);
            if (it->second.terms_empty())
                into.terms.erase(it);
        }
    }
}

GvmVector GvmModule::scaled(const GvmVector& x, const Rational& c) const {
    GvmVector out;
    add_into(out, x, c);
    return out;
}

bool GvmModule::is_zero(const GvmVector& x) const {
    for (const auto& [alpha, u] : x.terms)
        if (!hw().is_zero(u))
            return false;
    return true;
}

bool GvmModule::equal(const GvmVector& x, const GvmVector& y) const {
    GvmVector diff = x;
    add_into(diff, y, -1);
    return is_zero(diff);
}

Weight GvmModule::weight_of(const MultiIndex& alpha, const std::vector<long>& beta) const {
    if (alpha.size() != m() || beta.size() != m())
        throw DimensionError("gvm weight: length mismatch");
    long beta_sum = 0;
    for (long b : beta)
        beta_sum += b;
    if (beta_sum != 0)
        throw DomainError("gvm weight: V is supported on |beta| = 0");
    Weight muv = l_->highest_weight();
    std::vector<Rational> entries;
    long deg = alpha.degree();
    for (std::size_t i = 0; i < m(); ++i)
        entries.push_back(muv[i] + Rational(beta[i]) - Rational(alpha[i]) - Rational(deg));
    return Weight(std::move(entries));
}

Weight GvmModule::weight_of(const GvmVector& x) const {
    std::optional<Weight> weight;
    for (const auto& [alpha, u] : x.terms) {
        auto drop = hw().weight_drop(u);
        if (!drop)
            continue;
        std::vector<long> beta(m());
        for (std::size_t i = 0; i < m(); ++i)
            beta[i] = -(*drop)[i];
        Weight w = weight_of(alpha, beta);
        if (!weight)
            weight = w;
        else if (*weight != w)
            throw DomainError("GvmVector is not weight-homogeneous");
    }
    if (!weight)
        throw DomainError("weight of the zero vector is undefined");
    return *weight;
}

GvmVector GvmModule::act(const SlGenerator& g, const GvmVector& x) const {
    const std::size_t mm = m();
    GvmVector out;
    for (const auto& [alpha, u] : x.terms) {
        long deg = alpha.degree();
        if (g.kind == SlGenerator::Kind::OffDiagonal) {
            if (g.i <= mm && g.j <= mm) {
                // E_{i,j}(Y_a v) = -a_i Y_{a-e_i+e_j} v + Y_a E_{i,j} v
                if (alpha[g.i - 1] > 0)
                    add_into(out,
                             single(alpha.minus(g.i - 1).plus(g.j - 1), u),
                             Rational(-alpha[g.i - 1]));
                add_into(out, single(alpha, l_->act_offdiag(g.i, g.j, u)));
            } else if (g.i == mm + 1 && g.j <= mm) {
                // E_{m+1,i}(Y_a v) = Y_{a+e_i} v
                add_into(out, single(alpha.plus(g.j - 1), u));
            } else if (g.j == mm + 1 && g.i <= mm) {
                // E_{i,m+1}(Y_a v) = a_i(1-|a|) Y_{a-e_i} v
                //   + sum_{j != i} a_j Y_{a-e_j} E_{i,j} v + a_i Y_{a-e_i} H_i v
                std::size_t i = g.i;
                if (alpha[i - 1] > 0) {
                    Rational c = Rational(alpha[i - 1]) * Rational(1 - deg);
                    add_into(out, single(alpha.minus(i - 1), u), c);
                    add_into(out, single(alpha.minus(i - 1), l_->act_h(i, u)),
                             Rational(alpha[i - 1]));
                }
                for (std::size_t j = 1; j <= mm; ++j) {
                    if (j == i || alpha[j - 1] == 0)
                        continue;
                    add_into(out, single(alpha.minus(j - 1), l_->act_offdiag(i, j, u)),
                             Rational(alpha[j - 1]));
                }
            } else {
                throw DomainError("GvmModule: generator " + g.str() + " out of range");
            }
        } else {
            // Cartan differences act diagonally on Y_alpha plus the V-part.
            HwVector contrib;
            contrib.realization = u.realization;
            if (g.i <= mm && g.j <= mm) {
                hw().add_into(contrib, u, Rational(alpha[g.j - 1] - alpha[g.i - 1]));
                hw().add_into(contrib, l_->act_h(g.i, u));
                hw().add_into(contrib, l_->act_h(g.j, u), -1);
            } else if (g.j == mm + 1) {
                hw().add_into(contrib, u, Rational(-(alpha[g.i - 1] + deg)));
                hw().add_into(contrib, l_->act_h(g.i, u));
            } else if (g.i == mm + 1) {
                hw().add_into(contrib, u, Rational(alpha[g.j - 1] + deg));
                hw().add_into(contrib, l_->act_h(g.j, u), -1);
            } else {
                throw DomainError("GvmModule: generator " + g.str() + " out of range");
            }
            add_into(out, single(alpha, contrib));
        }
    }
    return out;
}

GvmVector GvmModule::act_oracle(const SlGenerator& g, const GvmVector& x) const {
    GvmVector out;
    for (const auto& [alpha, u] : x.terms)
        add_into(out, act_oracle_term(g, alpha, u));
    return out;
}

GvmVector GvmModule::act_oracle_term(const SlGenerator& g, const MultiIndex& alpha,
                                     const HwVector& u) const {
    const std::size_t mm = m();
    if (alpha.is_zero()) {
        // Base action on V: l acts through the identification, u annihilates,
        // u^- starts a monomial.
        if (g.kind == SlGenerator::Kind::OffDiagonal) {
            if (g.i <= mm && g.j <= mm)
                return single(alpha, l_->act_offdiag(g.i, g.j, u));
            if (g.i == mm + 1)
                return single(alpha.plus(g.j - 1), u);
            return {};  // E_{i,m+1} in u kills V
        }
        HwVector v;
        v.realization = u.realization;
        if (g.i <= mm && g.j <= mm) {
            hw().add_into(v, l_->act_h(g.i, u));
            hw().add_into(v, l_->act_h(g.j, u), -1);
        } else if (g.j == mm + 1) {
            hw().add_into(v, l_->act_h(g.i, u));
        } else {
            hw().add_into(v, l_->act_h(g.j, u), -1);
        }
        return single(alpha, v);
    }
    // Peel one factor E_{m+1,s} off the front of Y_alpha (u^- is abelian, so the
    // factor order never matters) and commute g past it.
    std::size_t s = 0;
    while (alpha[s] == 0)
        ++s;
    MultiIndex rest = alpha.minus(s);
    SlGenerator front = SlGenerator::off_diagonal(mm + 1, s + 1);

    GvmVector inner = act_oracle_term(g, rest, u);
    GvmVector out;
    for (const auto& [beta, v] : inner.terms)
        add_into(out, single(beta.plus(s), v));
    for (const auto& [c, h] : sl_bracket(mm, g, front))
        add_into(out, act_oracle_term(h, rest, u), c);
    return out;
}

std::pair<MultiIndex, HwVector> GvmModule::leading_term(const GvmVector& x) const {
    std::optional<MultiIndex> best;
    for (const auto& [alpha, u] : x.terms) {
        if (hw().is_zero(u))
            continue;
        if (!best || grlex_less(*best, alpha))
            best = alpha;
    }
    if (!best)
        throw DomainError("leading_term: zero vector");
    return {*best, x.terms.at(*best)};
}

bool GvmModule::is_highest_weight(const GvmVector& x) const {
    if (is_zero(x))
        throw DomainError("is_highest_weight: zero vector");
    weight_of(x);  // throws DomainError when not weight-homogeneous
    for (const auto& g : sl_simple_raising(m()))
        if (!is_zero(act(g, x)))
            return false;
    return true;
}

long search_depth_requirement(std::size_t m, long max_degree) {
    return static_cast<long>(m - 1) * (max_degree + 1) + 1;
}

namespace {
struct ClassCol {
    MultiIndex alpha;
    std::vector<long> drop;
    std::size_t basis_index;
};

struct ClassSpace {
    std::vector<ClassCol> cols;
    std::map<std::pair<MultiIndex, std::size_t>, std::size_t> index;
};

ClassSpace build_class_space(const HwModule& hw, std::size_t m, long degree,
                             const std::vector<long>& kappa) {
    ClassSpace sp;
    if (degree < 0)
        return sp;
    for (const auto& alpha : compositions_of_degree(m, degree)) {
        std::vector<long> drop(m);
        for (std::size_t i = 0; i < m; ++i)
            drop[i] = kappa[i] - alpha[i];
        if (!is_valid_drop(drop))
            continue;
        std::size_t dim = hw.simple().dim(drop);
        for (std::size_t b = 0; b < dim; ++b) {
            sp.index[{alpha, b}] = sp.cols.size();
            sp.cols.push_back({alpha, drop, b});
        }
    }
    return sp;
}
}  // namespace

SearchResult GvmModule::singular_search(long max_degree) const {
    if (max_degree < 1)
        throw DomainError("singular_search: max_degree must be >= 1");
    const std::size_t mm = m();
    SearchResult res;
    res.max_degree = max_degree;
    res.hw_depth_cap = hw().max_depth();
    const auto raisings = sl_simple_raising(mm);

    try {
        for (long d = 1; d <= max_degree; ++d) {
            for (const auto& kappa : compositions_of_degree(mm, d)) {
                ClassSpace src = build_class_space(hw(), mm, d, kappa.exps());
                if (src.cols.empty())
                    continue;

                std::vector<ClassSpace> targets;
                std::vector<long> target_degree;
                for (const auto& g : raisings) {
                    std::vector<long> tk = kappa.exps();
                    long td = d;
                    if (g.j <= mm) {
                        tk[g.i - 1] -= 1;
                        tk[g.j - 1] += 1;
                    } else {
                        tk[mm - 1] -= 1;
                        td = d - 1;
                    }
                    targets.push_back(build_class_space(hw(), mm, td, tk));
                    target_degree.push_back(td);
                }

                std::size_t rows = 0;
                for (const auto& t : targets)
                    rows += t.cols.size();
                RationalMatrix stacked(rows, src.cols.size());

                for (std::size_t ci = 0; ci < src.cols.size(); ++ci) {
                    const ClassCol& col = src.cols[ci];
                    const PbwMonomial& mono =
                        hw().simple().space(col.drop).basis[col.basis_index];
                    GvmVector x = single(
                        col.alpha, HwVector::from_quotient({{mono, Rational(1)}}));
                    std::size_t row_offset = 0;
                    for (std::size_t k = 0; k < raisings.size(); ++k) {
                        GvmVector y = act(raisings[k], x);
                        for (const auto& [beta, v] : y.terms) {
                            auto dropv = hw().weight_drop(v);
                            if (!dropv)
                                continue;
                            auto coords = hw().simple().coordinates(*dropv, v.quotient);
                            for (std::size_t bi = 0; bi < coords.size(); ++bi) {
                                if (coords[bi].is_zero())
                                    continue;
                                auto it = targets[k].index.find({beta, bi});
                                if (it == targets[k].index.end())
                                    throw InternalError(
                                        "singular_search: image escaped the target class");
                                stacked.at(row_offset + it->second, ci) = coords[bi];
                            }
                        }
                        row_offset += targets[k].cols.size();
                    }
                }

                for (const auto& vec : rational_nullspace(stacked)) {
                    GvmVector w;
                    for (std::size_t ci = 0; ci < src.cols.size(); ++ci) {
                        if (vec[ci].is_zero())
                            continue;
                        const ClassCol& col = src.cols[ci];
                        const PbwMonomial& mono =
                            hw().simple().space(col.drop).basis[col.basis_index];
                        add_into(w,
                                 single(col.alpha,
                                        HwVector::from_quotient({{mono, Rational(1)}})),
                                 vec[ci]);
                    }
                    auto [lead_alpha, lead] = leading_term(w);
                    Rational c = hw().vmu_coefficient(lead);
                    if (c.is_zero())
                        throw InternalError(
                            "singular_search: leading coefficient off the v_mu line");
                    res.lines.push_back({lead_alpha, d, scaled(w, c.inverse())});
                }
            }
            res.completed_degree = d;
        }
    } catch (const TruncationError&) {
        res.truncated = true;
    }
    return res;
}

SimplicityVerdict simplicity_criterion(const Weight& mu, const BlockProfile& profile) {
    if (mu.size() != profile.m)
        throw DimensionError("simplicity_criterion: profile length mismatch");
    // Validate the two-block shape against the profile.
    for (std::size_t s = 1; s < profile.ibar; ++s)
        if (mu[s] != mu[0])
            throw DomainError("simplicity_criterion: mu not two-block");
    for (std::size_t s = profile.ibar; s + 1 < profile.m; ++s)
        if (mu[s + 1] != mu[profile.ibar])
            throw DomainError("simplicity_criterion: mu not two-block");

    SimplicityVerdict v;
    v.l = profile.l;
    if (profile.has_band() && profile.l) {
        const Rational& a = profile.a;
        bool a_excluded = a.is_nonneg_integer() && a.to_long() <= *profile.l - 1;
        v.case1_holds = !a_excluded;
    }
    v.case2_holds = (mu[mu.size() - 1] + Rational(1)).is_positive_integer();
    v.simple = !(v.case1_holds || v.case2_holds);
    if (v.case1_holds) {
        MultiIndex p(profile.m);
        for (long t = 0; t < *profile.l; ++t)
            p = p.plus(profile.ibar - 1);
        v.predicted.push_back(p);
    }
    if (v.case2_holds) {
        MultiIndex p(profile.m);
        long n = (mu[mu.size() - 1] + Rational(1)).to_long();
        for (long t = 0; t < n; ++t)
            p = p.plus(profile.m - 1);
        v.predicted.push_back(p);
    }
    return v;
}

GvmVector build_singular_case2(const GvmModule& module) {
    Weight mu = module.l_action().highest_weight();
    std::size_t m = module.m();
    Rational last = mu[m - 1] + Rational(1);
    if (!last.is_positive_integer())
        throw DomainError("case 2 needs mu_m + 1 in N, got mu_m = " + mu[m - 1].str());
    MultiIndex alpha(m);
    for (long t = 0; t < last.to_long(); ++t)
        alpha = alpha.plus(m - 1);
    return module.single(alpha, module.hw().highest_vector());
}

GvmVector build_singular_case1(const GvmModule& module, const BlockProfile& profile) {
    std::size_t m = module.m();
    if (!profile.has_band())
        throw DomainError("case 1 needs ibar != m");
    if (!profile.l)
        throw DomainError("case 1 needs mu_ibar + m + 1 - ibar in N");
    long l = *profile.l;
    const Rational& a = profile.a;
    if (a.is_nonneg_integer() && a.to_long() <= l - 1)
        throw DomainError("case 1 needs mu_ibar - mu_{ibar+1} outside {0,...,l-1}");
    const BandModule& band = module.hw().band();
    if (band.l() != l)
        throw DomainError("case 1: hw-engine band normalization must be l = " +
                          std::to_string(l));

    GvmVector u;
    for (long k = 0; k <= l; ++k) {
        for (const auto& ms : band.basis(k)) {
            MultiIndex alpha(m);
            for (long t = 0; t < l - k; ++t)
                alpha = alpha.plus(profile.ibar - 1);
            for (std::size_t i : ms.entries())
                alpha = alpha.plus(i - 1);
            BandVector bv;
            band_add(bv, ms, 1);
            module.add_into(u, module.single(alpha, HwVector::from_band(bv)));
        }
    }
    return u;
}

StructuralReport GvmModule::structural_checks(const GvmVector& w) const {
    StructuralReport rep;
    const std::size_t mm = m();
    const Weight mu = l_->highest_weight();
    const MultiIndex abar = leading_term(w).first;

    auto component = [&](const std::vector<long>& gamma) -> HwVector {
        for (long g : gamma)
            if (g < 0)
                return HwVector{};
        std::vector<long> copy = gamma;
        auto it = w.terms.find(MultiIndex(copy));
        return it == w.terms.end() ? HwVector{} : it->second;
    };

    // (i) each component w(abar+beta) lies in V_{mu+beta}
    {
        StructuralReport::Item item{"lemma4.3-support", true, false, ""};
        for (const auto& [gamma, u] : w.terms) {
            if (hw().is_zero(u))
                continue;
            auto drop = hw().weight_drop(u);
            long beta_sum = 0;
            bool ok = true;
            for (std::size_t i = 0; i < mm; ++i) {
                long beta_i = gamma[i] - abar[i];
                beta_sum += beta_i;
                if ((*drop)[i] != -beta_i)
                    ok = false;
            }
            if (beta_sum != 0)
                ok = false;
            if (!ok) {
                item.passed = false;
                item.detail = "component at " + gamma.str() + " is off V_{mu+beta}";
                break;
            }
        }
        rep.items.push_back(item);
    }

    // (ii) E_{i,j} w(abar+beta) = (abar_i + beta_i + 1) w(abar+beta+e_i-e_j), i < j
    {
        StructuralReport::Item item{"lemma4.4-recursion", true, false, ""};
        for (std::size_t i = 1; i <= mm && item.passed; ++i)
            for (std::size_t j = i + 1; j <= mm && item.passed; ++j) {
                std::vector<std::vector<long>> candidates;
                for (const auto& [gamma, u] : w.terms) {
                    candidates.push_back(gamma.exps());
                    std::vector<long> shifted = gamma.exps();
                    shifted[i - 1] -= 1;
                    shifted[j - 1] += 1;
                    candidates.push_back(shifted);
                }
                for (const auto& gamma : candidates) {
                    bool negative = false;
                    for (long x : gamma)
                        if (x < 0)
                            negative = true;
                    if (negative)
                        continue;
                    HwVector lhs = l_->act_offdiag(i, j, component(gamma));
                    std::vector<long> up = gamma;
                    up[i - 1] += 1;
                    up[j - 1] -= 1;
                    Rational coeff = Rational(gamma[i - 1] + 1);
                    HwVector rhs = up[j - 1] < 0 ? HwVector{}
                                                 : hw().scaled(component(up), coeff);
                    HwVector diff = lhs;
                    hw().add_into(diff, rhs, -1);
                    if (!hw().is_zero(diff)) {
                        item.passed = false;
                        item.detail = "fails at i=" + std::to_string(i) +
                                      ", j=" + std::to_string(j);
                        break;
                    }
                }
            }
        rep.items.push_back(item);
    }

    // (iii) (sum_{s<=i}(abar_s+1) - mu_i - m - 1) abar_i = 0
    {
        StructuralReport::Item item{"lemma4.6-scalar", true, false, ""};
        for (std::size_t i = 1; i <= mm; ++i) {
            Rational factor = 0;
            for (std::size_t s = 1; s <= i; ++s)
                factor += Rational(abar[s - 1] + 1);
            factor -= mu[i - 1] + Rational(static_cast<long>(mm) + 1);
            if (!(factor * Rational(abar[i - 1])).is_zero()) {
                item.passed = false;
                item.detail = "violated at i=" + std::to_string(i);
                break;
            }
        }
        rep.items.push_back(item);
    }

    // (iv) abar_j != 0 (j < m) forces mu_j - mu_{j+1} outside {0,...,abar_j-1}
    {
        StructuralReport::Item item{"cor4.5-range", true, false, ""};
        for (std::size_t j = 1; j + 1 <= mm && j < mm; ++j) {
            if (abar[j - 1] == 0)
                continue;
            Rational diff = mu[j - 1] - mu[j];
            if (diff.is_nonneg_integer() && diff.to_long() <= abar[j - 1] - 1) {
                item.passed = false;
                item.detail = "violated at j=" + std::to_string(j);
                break;
            }
        }
        rep.items.push_back(item);
    }

    // (v) finite-dimensional V forces abar = (mu_i + m + 1 - i) e_i
    {
        StructuralReport::Item item{"cor4.7-shape", true, false, ""};
        bool dominant = true;
        for (std::size_t s = 0; s + 1 < mm; ++s)
            if (!(mu[s] - mu[s + 1]).is_nonneg_integer())
                dominant = false;
        if (!dominant) {
            item.skipped = true;
            item.detail = "V infinite-dimensional";
        } else {
            bool match = false;
            for (std::size_t i = 1; i <= mm; ++i) {
                Rational want = mu[i - 1] + Rational(static_cast<long>(mm) + 1 -
                                                     static_cast<long>(i));
                if (!want.is_positive_integer())
                    continue;
                MultiIndex shape(mm);
                for (long t = 0; t < want.to_long(); ++t)
                    shape = shape.plus(i - 1);
                if (shape == abar)
                    match = true;
            }
            item.passed = match;
            if (!match)
                item.detail = "abar = " + abar.str() + " is not (mu_i+m+1-i) e_i";
        }
        rep.items.push_back(item);
    }

    return rep;
}

std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>>
GvmModule::serialize(const GvmVector& x) const {
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> out;
    for (const auto& [alpha, u] : x.terms)
        out.emplace_back("Y" + alpha.str(), hw().serialize(u));
    return out;
}

}  // namespace gvmlab
