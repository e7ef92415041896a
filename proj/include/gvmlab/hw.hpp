#pragma once

#include "gvmlab/band.hpp"
#include "gvmlab/verma.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gvmlab {

enum class Realization { Quotient, Band };

/// Element of L(mu) in one of two interchangeable realizations: the Verma-quotient
/// oracle basis or the closed-form band basis.
struct HwVector {
    Realization realization = Realization::Quotient;
    VermaVector quotient;
    BandVector band;

    bool terms_empty() const {
        return realization == Realization::Quotient ? quotient.empty() : band.empty();
    }

    static HwVector from_quotient(VermaVector v) {
        return HwVector{Realization::Quotient, std::move(v), {}};
    }
    static HwVector from_band(BandVector v) {
        return HwVector{Realization::Band, {}, std::move(v)};
    }
};

/// L(mu) with both realizations glued together. Acting on a band vector with a
/// generator outside the band set transparently falls back to the quotient
/// realization through the Lemma 3.5 embedding.
class HwModule {
public:
    /// Band realization is available only when profile has a band and l is given.
    HwModule(Weight mu, long max_depth, std::optional<BlockProfile> profile = {},
             std::optional<long> band_l = {});

    const Weight& mu() const { return mu_; }
    std::size_t m() const { return simple_.m(); }
    long max_depth() const { return simple_.max_depth(); }
    const SimpleModule& simple() const { return simple_; }
    bool has_band() const { return band_.has_value(); }
    const BandModule& band() const;

    HwVector highest_vector(Realization r = Realization::Quotient) const;

    /// Action of E_{i,j} in gl(m) (Cartan when i == j).
    HwVector act(const GlGenerator& g, const HwVector& x) const;
    /// Action of the Cartan sum E_{1,1} + ... + E_{m,m}.
    HwVector act_trace(const HwVector& x) const;

    /// Band -> quotient (identity on quotient vectors).
    HwVector to_quotient(const HwVector& x) const;

    void add_into(HwVector& into, const HwVector& other, const Rational& scale = 1) const;
    HwVector scaled(const HwVector& x, const Rational& c) const;
    bool is_zero(const HwVector& x) const;
    bool equal(const HwVector& x, const HwVector& y) const;

    /// Weight drop shared by the support; nullopt for a zero vector. Throws
    /// DomainError when the support mixes weights.
    std::optional<std::vector<long>> weight_drop(const HwVector& x) const;

    /// Coefficient of v_mu when x lies in the highest weight line; the vector must
    /// be weight-homogeneous of drop zero (or zero).
    Rational vmu_coefficient(const HwVector& x) const;

    /// (label, rational) pairs with deterministic label order.
    std::vector<std::pair<std::string, std::string>> serialize(const HwVector& x) const;

private:
    Weight mu_;
    SimpleModule simple_;
    std::optional<BandModule> band_;
};

}  // namespace gvmlab
