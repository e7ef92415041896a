#pragma once

#include "gvmlab/hw.hpp"
#include "gvmlab/multi_index.hpp"
#include "gvmlab/sl.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gvmlab {

/// The action of l (identified with gl(m) inside sl(m+1)) on the inducing module:
/// off-diagonal E_{i,j} and the Cartan differences H_i = E_{i,i} - E_{m+1,m+1}.
/// The plain realization serves L(mu); the tensor side supplies a twisted one.
class LAction {
public:
    virtual ~LAction() = default;
    virtual const HwModule& hw() const = 0;
    virtual HwVector act_offdiag(std::size_t i, std::size_t j, const HwVector& x) const = 0;
    virtual HwVector act_h(std::size_t i, const HwVector& x) const = 0;
    /// Eigenvalues of H_1..H_m on the highest weight vector.
    virtual Weight highest_weight() const = 0;
};

/// L(mu) itself: E_{i,j} acts as E_{i,j}, H_i as E_{i,i}.
class PlainLAction final : public LAction {
public:
    explicit PlainLAction(std::shared_ptr<const HwModule> hw) : hw_(std::move(hw)) {}
    const HwModule& hw() const override { return *hw_; }
    HwVector act_offdiag(std::size_t i, std::size_t j, const HwVector& x) const override {
        return hw_->act(GlGenerator{i, j}, x);
    }
    HwVector act_h(std::size_t i, const HwVector& x) const override {
        return hw_->act(GlGenerator{i, i}, x);
    }
    Weight highest_weight() const override { return hw_->mu(); }

private:
    std::shared_ptr<const HwModule> hw_;
};

/// Element of the generalized Verma module M_p(V): finitely supported map
/// alpha -> u(alpha), standing for sum_alpha Y_alpha u(alpha).
struct GvmVector {
    std::map<MultiIndex, HwVector> terms;
    bool terms_empty() const { return terms.empty(); }
};

struct SingularLine {
    MultiIndex leading;
    long degree = 0;
    GvmVector vector;
};

struct SearchResult {
    std::vector<SingularLine> lines;
    long max_degree = 0;      // requested bound
    long completed_degree = 0;  // degrees fully searched (== max_degree unless truncated)
    long hw_depth_cap = 0;    // depth cap of the serving hw-engine (result metadata)
    bool truncated = false;
};

struct SimplicityVerdict {
    bool simple = true;
    bool case1_holds = false;
    bool case2_holds = false;
    std::optional<long> l;
    std::vector<MultiIndex> predicted;  // leading exponents of the predicted lines
};

/// Main Theorem conditions for two-block mu; pure arithmetic on the profile.
SimplicityVerdict simplicity_criterion(const Weight& mu, const BlockProfile& profile);

struct StructuralReport {
    struct Item {
        std::string name;
        bool passed = false;
        bool skipped = false;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_passed() const {
        for (const auto& it : items)
            if (!it.skipped && !it.passed)
                return false;
        return true;
    }
};

/// M_p(V) for an arbitrary l-action V; all operations are pure.
class GvmModule {
public:
    explicit GvmModule(std::shared_ptr<const LAction> l_action);

    std::size_t m() const { return l_->hw().m(); }
    const LAction& l_action() const { return *l_; }
    const HwModule& hw() const { return l_->hw(); }

    GvmVector zero() const { return {}; }
    GvmVector generator() const;  // Y_0 v_mu (quotient realization)
    GvmVector single(const MultiIndex& alpha, HwVector u) const;

    void add_into(GvmVector& into, const GvmVector& other, const Rational& scale = 1) const;
    GvmVector scaled(const GvmVector& x, const Rational& c) const;
    bool is_zero(const GvmVector& x) const;
    bool equal(const GvmVector& x, const GvmVector& y) const;

    /// Eigenvalues of (E_{i,i}-E_{m+1,m+1}) on Y_alpha (x) V_{mu+beta}; |beta| must
    /// vanish since V is supported on |beta| = 0.
    Weight weight_of(const MultiIndex& alpha, const std::vector<long>& beta) const;
    /// Common weight of a weight-homogeneous vector; DomainError when mixed.
    Weight weight_of(const GvmVector& x) const;

    /// Closed-form action (the explicit formulas of the GVM construction).
    GvmVector act(const SlGenerator& g, const GvmVector& x) const;
    /// Independent recursive-commutator evaluation with no closed forms.
    GvmVector act_oracle(const SlGenerator& g, const GvmVector& x) const;

    std::pair<MultiIndex, HwVector> leading_term(const GvmVector& x) const;
    bool is_highest_weight(const GvmVector& x) const;

    /// Exact kernel search for singular vectors of degree 1..max_degree; the
    /// serving hw-engine must cover drops of height degree*(m-1)+m.
    SearchResult singular_search(long max_degree) const;

    StructuralReport structural_checks(const GvmVector& w) const;

    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>>
    serialize(const GvmVector& x) const;

private:
    GvmVector act_oracle_term(const SlGenerator& g, const MultiIndex& alpha,
                              const HwVector& u) const;

    std::shared_ptr<const LAction> l_;
};

/// The Y_{(mu_m+1)e_m} v_mu singular vector; requires mu_m + 1 in N.
GvmVector build_singular_case2(const GvmModule& module);

/// The band-model singular vector u = sum_k sum_ms Y_{(l-k)e_ibar + sum e_{i_s}} v(ms);
/// requires ibar != m, l = mu_ibar + m + 1 - ibar in N, and a outside {0..l-1}. The
/// module's hw-engine must carry the band realization at that l.
GvmVector build_singular_case1(const GvmModule& module, const BlockProfile& profile);

/// Depth the hw-engine must support so singular_search(max_degree) cannot truncate.
long search_depth_requirement(std::size_t m, long max_degree);

}  // namespace gvmlab
