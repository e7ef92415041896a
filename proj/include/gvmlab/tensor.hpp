#pragma once

#include "gvmlab/gvm.hpp"
#include "gvmlab/omega.hpp"
#include "gvmlab/witt.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gvmlab {

/// Element of the tensor module F(Omega(lambda), W): finitely supported map
/// eta -> W-component, standing for sum_eta X_eta (x) w(eta).
struct TensorVector {
    std::map<MultiIndex, HwVector> terms;
    bool terms_empty() const { return terms.empty(); }
};

/// F(Omega(lambda), W) with the pi-action of W_m and the closed s'-forms.
class TensorModule {
public:
    TensorModule(std::shared_ptr<const HwModule> w_module, Lambda lambda);

    std::size_t m() const { return w_->m(); }
    const HwModule& w() const { return *w_; }
    const Lambda& lambda() const { return lambda_; }

    TensorVector single(const MultiIndex& eta, HwVector w) const;
    void add_into(TensorVector& into, const TensorVector& other,
                  const Rational& scale = 1) const;
    TensorVector scaled(const TensorVector& x, const Rational& c) const;
    bool is_zero(const TensorVector& x) const;
    bool equal(const TensorVector& x, const TensorVector& y) const;

    /// pi(t^alpha d_i) = t^alpha d_i (x) 1 + sum_s d_s(t^alpha) (x) E_{s,i}.
    TensorVector weyl_act(const std::vector<long>& alpha, std::size_t i,
                          const TensorVector& x) const;
    /// A whole W_m element through pi, term by term.
    TensorVector witt_act(const WittElement& w, const TensorVector& x) const;

    /// Closed forms for the s' generator families:
    ///   (1) lambda_i^{-1}lambda_j t_i d_j - lambda_j d_j
    ///   (2) lambda_i d_i - t_i d_i
    ///   (3) L_i
    TensorVector sprime_offdiag(std::size_t i, std::size_t j, const TensorVector& x) const;
    TensorVector sprime_diag(std::size_t i, const TensorVector& x) const;
    TensorVector sprime_L(std::size_t i, const TensorVector& x) const;

    /// sigma_lambda-pulled-back action of sl(m+1), via the closed forms.
    TensorVector act_sigma_closed(const SlGenerator& g, const TensorVector& x) const;
    /// Same action computed by expanding sigma_lambda(g) into t^alpha d_i symbols.
    TensorVector act_sigma_expanded(const SlGenerator& g, const TensorVector& x) const;

    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>>
    serialize(const TensorVector& x) const;

private:
    std::shared_ptr<const HwModule> w_;
    Lambda lambda_;
};

/// The l-module twist: E_{i,j} acts as lambda_i^{-1}lambda_j E_{i,j} and H_i as
/// sum_s E_{s,s} + E_{i,i} - m - 1 on the underlying W. The highest weight becomes
/// mu + (|mu| - m - 1)(1,...,1).
class TwistedLAction final : public LAction {
public:
    TwistedLAction(std::shared_ptr<const HwModule> w_module, Lambda lambda)
        : w_(std::move(w_module)), lambda_(std::move(lambda)) {
        if (lambda_.size() != w_->m())
            throw DimensionError("TwistedLAction: lambda length mismatch");
    }
    const HwModule& hw() const override { return *w_; }
    HwVector act_offdiag(std::size_t i, std::size_t j, const HwVector& x) const override {
        return w_->scaled(w_->act(GlGenerator{i, j}, x),
                          lambda_[i - 1].inverse() * lambda_[j - 1]);
    }
    HwVector act_h(std::size_t i, const HwVector& x) const override {
        HwVector out = w_->act_trace(x);
        w_->add_into(out, w_->act(GlGenerator{i, i}, x));
        w_->add_into(out, x, Rational(-(static_cast<long>(w_->m()) + 1)));
        return out;
    }
    Weight highest_weight() const override {
        const Weight& mu = w_->mu();
        return mu.shifted_all(mu.component_sum() -
                              Rational(static_cast<long>(w_->m()) + 1));
    }

private:
    std::shared_ptr<const HwModule> w_;
    Lambda lambda_;
};

/// Y_alpha (x) v  ->  (-1)^{|alpha|} X_alpha (x) v, the unique extension of
/// v -> 1 (x) v intertwining the E_{m+1,i}.
TensorVector iso_map(const TensorModule& tensor, const GvmVector& x);

struct IsoReport {
    struct PerGenerator {
        SlGenerator generator;
        bool passed = true;
        long checked = 0;
        std::string counterexample;
    };
    std::vector<PerGenerator> generators;
    long degree_bound = 0;
    long basis_size = 0;
    bool all_passed() const {
        for (const auto& g : generators)
            if (!g.passed)
                return false;
        return true;
    }
};

/// Checks iso_map(g.x) = sigma_lambda(g).iso_map(x) for every sl(m+1) generator on
/// every basis element Y_alpha (x) w with |alpha| <= max_degree - 1.
IsoReport iso_verify(const Weight& mu_w, const Lambda& lambda, long max_degree,
                     long w_depth);

/// Simplicity of F(Omega(lambda), L(mu)) as an sl(m+1)-module for two-block mu;
/// cross-checked against the GVM criterion at the twisted weight (mandatory).
SimplicityVerdict tensor_simplicity(const Lambda& lambda, const Weight& mu,
                                    const BlockProfile& profile);

/// The twisted highest weight mu + (|mu| - m - 1)(1,...,1).
Weight twisted_weight(const Weight& mu);

/// Pivot basis of every nonzero weight space of W = L(mu) with drops of height at
/// most depth (exhaustive for dominant integral mu when depth is large enough).
std::vector<HwVector> w_basis_up_to(const HwModule& w, long depth);

}  // namespace gvmlab
