#include "gvmlab/hw.hpp"

namespace gvmlab {

HwModule::HwModule(Weight mu, long max_depth, std::optional<BlockProfile> profile,
                   std::optional<long> band_l)
    : mu_(mu), simple_(mu, max_depth) {
    if (profile && band_l && profile->has_band())
        band_.emplace(mu_, *profile, *band_l);
}

const BandModule& HwModule::band() const {
    if (!band_)
        throw DomainError("HwModule: band realization not configured");
    return *band_;
}

HwVector HwModule::highest_vector(Realization r) const {
    if (r == Realization::Quotient)
        return HwVector::from_quotient(simple_.highest_vector());
    band();
    BandVector v;
    band_add(v, BandMultiset(), 1);
    return HwVector::from_band(v);
}

HwVector HwModule::act(const GlGenerator& g, const HwVector& x) const {
    if (x.realization == Realization::Quotient)
        return HwVector::from_quotient(simple_.act(g, x.quotient));
    try {
        return HwVector::from_band(band().act(g, x.band));
    } catch (const UnsupportedGeneratorError&) {
        return HwVector::from_quotient(simple_.act(g, to_quotient(x).quotient));
    }
}

HwVector HwModule::act_trace(const HwVector& x) const {
    HwVector out;
    out.realization = x.realization;
    for (std::size_t i = 1; i <= m(); ++i)
        add_into(out, act(GlGenerator{i, i}, x));
    return out;
}

HwVector HwModule::to_quotient(const HwVector& x) const {
    if (x.realization == Realization::Quotient)
        return x;
    VermaVector out;
    for (const auto& [ms, c] : x.band)
        verma_add(out, band().embed(ms, simple_), c);
    return HwVector::from_quotient(out);
}

void HwModule::add_into(HwVector& into, const HwVector& other, const Rational& scale) const {
    if (scale.is_zero() || other.terms_empty())
        return;
    if (into.terms_empty())
        into.realization = other.realization;
    if (into.realization == other.realization) {
        if (into.realization == Realization::Quotient)
            verma_add(into.quotient, other.quotient, scale);
        else
            band_add(into.band, other.band, scale);
        return;
    }
    // Mixed realizations resolve in the quotient.
    HwVector lhs = to_quotient(into);
    verma_add(lhs.quotient, to_quotient(other).quotient, scale);
    into = lhs;
}

HwVector HwModule::scaled(const HwVector& x, const Rational& c) const {
    HwVector out;
    out.realization = x.realization;
    add_into(out, x, c);
    return out;
}

bool HwModule::is_zero(const HwVector& x) const {
    if (x.realization == Realization::Band) {
        for (const auto& [ms, c] : x.band)
            if (!c.is_zero() && band().multiset_nonzero(ms))
                return false;
        return true;
    }
    return simple_.is_zero(x.quotient);
}

bool HwModule::equal(const HwVector& x, const HwVector& y) const {
    if (x.realization == Realization::Band && y.realization == Realization::Band)
        return x.band == y.band;
    return to_quotient(x).quotient == to_quotient(y).quotient;
}

std::optional<std::vector<long>> HwModule::weight_drop(const HwVector& x) const {
    std::optional<std::vector<long>> drop;
    auto merge = [&](const std::vector<long>& d) {
        if (!drop)
            drop = d;
        else if (*drop != d)
            throw DomainError("HwModule: vector is not weight-homogeneous");
    };
    if (x.realization == Realization::Quotient) {
        for (const auto& [mono, c] : x.quotient)
            merge(mono.weight_drop(simple_.verma().roots()));
    } else {
        for (const auto& [ms, c] : x.band)
            merge(band().drop_of(ms));
    }
    return drop;
}

Rational HwModule::vmu_coefficient(const HwVector& x) const {
    auto drop = weight_drop(x);
    if (!drop)
        return 0;
    for (long d : *drop)
        if (d != 0)
            throw DomainError("HwModule: vector not in the highest weight line");
    if (x.realization == Realization::Quotient)
        return simple_.verma().vmu_coefficient(x.quotient);
    auto it = x.band.find(BandMultiset());
    return it == x.band.end() ? Rational(0) : it->second;
}

std::vector<std::pair<std::string, std::string>> HwModule::serialize(const HwVector& x) const {
    std::vector<std::pair<std::string, std::string>> out;
    if (x.realization == Realization::Quotient) {
        for (const auto& [mono, c] : x.quotient)
            out.emplace_back(mono.str(simple_.verma().roots()), c.str());
    } else {
        for (const auto& [ms, c] : x.band)
            out.emplace_back(ms.str(), c.str());
    }
    return out;
}

}  // namespace gvmlab
