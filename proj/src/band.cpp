#include "gvmlab/band.hpp"

#include <algorithm>

namespace gvmlab {

BandMultiset::BandMultiset(std::vector<std::size_t> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end());
}

long BandMultiset::count(std::size_t i) const {
    return static_cast<long>(std::count(e_.begin(), e_.end(), i));
}

BandMultiset BandMultiset::inserted(std::size_t i) const {
    BandMultiset out = *this;
    out.e_.insert(std::upper_bound(out.e_.begin(), out.e_.end(), i), i);
    return out;
}

BandMultiset BandMultiset::removed(std::size_t p) const {
    BandMultiset out = *this;
    auto it = std::find(out.e_.begin(), out.e_.end(), p);
    if (it == out.e_.end())
        throw InternalError("BandMultiset: removing absent entry");
    out.e_.erase(it);
    return out;
}

std::string BandMultiset::str() const {
    std::string s = "v(";
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (k)
            s += ",";
        s += std::to_string(e_[k]);
    }
    return s + ")";
}

void band_add(BandVector& into, const BandMultiset& ms, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = into.try_emplace(ms, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            into.erase(it);
    }
}

void band_add(BandVector& into, const BandVector& other, const Rational& scale) {
    if (scale.is_zero())
        return;
    for (const auto& [ms, c] : other)
        band_add(into, ms, c * scale);
}

BandModule::BandModule(Weight mu, BlockProfile profile, long l)
    : mu_(std::move(mu)), profile_(profile), l_(l) {
    if (!profile_.has_band())
        throw DomainError("BandModule: ibar = m leaves no band");
    if (profile_.a.is_zero())
        throw DomainError("BandModule: mu_ibar = mu_{ibar+1}, band model undefined");
    if (l < 1)
        throw DomainError("BandModule: l must be a positive integer");
}

std::vector<BandMultiset> BandModule::basis(long k) const {
    std::vector<BandMultiset> out;
    if (profile_.a.is_nonneg_integer() && k > profile_.a.to_long())
        return out;
    // Multisets of size k over {ibar+1..m}, ascending.
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t min_entry, long left) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t i = min_entry; i <= m(); ++i) {
            cur.push_back(i);
            self(self, i, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, profile_.ibar + 1, k);
    std::sort(out.begin(), out.end());
    return out;
}

bool BandModule::multiset_nonzero(const BandMultiset& ms) const {
    if (profile_.a.is_nonneg_integer() &&
        static_cast<long>(ms.size()) > profile_.a.to_long())
        return false;
    return static_cast<long>(ms.size()) <= l_;
}

Weight BandModule::weight_of(const BandMultiset& ms) const {
    Weight w = mu_;
    for (std::size_t i : ms.entries())
        w = w.shifted(i - 1, 1);
    return w.shifted(profile_.ibar - 1, Rational(-static_cast<long>(ms.size())));
}

std::vector<long> BandModule::drop_of(const BandMultiset& ms) const {
    std::vector<long> drop(m(), 0);
    drop[profile_.ibar - 1] = static_cast<long>(ms.size());
    for (std::size_t i : ms.entries())
        drop[i - 1] -= 1;
    return drop;
}

BandVector BandModule::act(const GlGenerator& g, const BandVector& x) const {
    BandVector out;
    for (const auto& [ms, c] : x)
        band_add(out, act_single(g, ms), c);
    return out;
}

BandVector BandModule::act_single(const GlGenerator& g, const BandMultiset& ms) const {
    const std::size_t ibar = profile_.ibar;
    auto in_band = [&](std::size_t i) { return i > ibar && i <= m(); };
    long k = static_cast<long>(ms.size());
    const Rational& a = profile_.a;
    BandVector out;

    if (g.is_cartan()) {
        if (g.i < 1 || g.i > m())
            throw DomainError("BandModule: Cartan index out of range");
        band_add(out, ms, weight_of(ms)[g.i - 1]);
        return out;
    }
    if (in_band(g.i) && in_band(g.j)) {
        // E_{i,p}: trade one p for an i; zero when p is absent.
        if (ms.count(g.j) == 0)
            return out;
        band_add(out, ms.replaced(g.j, g.i), Rational(1 + ms.count(g.i)));
        return out;
    }
    if (in_band(g.i) && g.j == ibar) {
        // E_{i,ibar}: append one i. The closed form is stated only for k < l.
        if (k >= l_)
            throw DomainError("BandModule: E(i,ibar) needs multiset size < l");
        Rational coeff = (a - Rational(k)) * Rational(1 + ms.count(g.i)) /
                         Rational(l_ - k);
        band_add(out, ms.inserted(g.i), coeff);
        return out;
    }
    if (g.i == ibar && in_band(g.j)) {
        // E_{ibar,p}: drop one p; zero when absent.
        if (ms.count(g.j) == 0)
            return out;
        band_add(out, ms.removed(g.j), Rational(l_ - k + 1));
        return out;
    }
    throw UnsupportedGeneratorError("BandModule: " + g.str() +
                                    " outside the band generator set");
}

VermaVector BandModule::embed(const BandMultiset& ms, const SimpleModule& simple) const {
    if (simple.mu() != mu_)
        throw DomainError("BandModule: embedding into a module with a different weight");
    if (!multiset_nonzero(ms))
        return {};
    const VermaModule& verma = simple.verma();
    PbwMonomial mono = verma.empty_monomial();
    for (std::size_t i : ms.entries())
        mono = mono.with_exp_delta(verma.roots().index_of(i, profile_.ibar), +1);

    // gamma v_mu = (prod_s E_{ibar,i_s}) . (E_{i_1,ibar}...E_{i_k,ibar} v_mu) in the
    // Verma module; the Lemma 3.5 scalar is then A_l^k / gamma.
    VermaVector w{{mono, Rational(1)}};
    for (std::size_t i : ms.entries())
        w = verma.act(GlGenerator{profile_.ibar, i}, w);
    Rational gamma = verma.vmu_coefficient(w);
    if (gamma.is_zero())
        throw InternalError("BandModule: raising product vanished on a live multiset " +
                            ms.str());
    if (simple.dim(drop_of(ms)) != 1)
        throw InternalError("BandModule: band weight space is not a line at " + ms.str());
    Rational c = falling_factorial(l_, static_cast<long>(ms.size())) / gamma;
    VermaVector out;
    verma_add(out, simple.reduce({{mono, Rational(1)}}), c);
    return out;
}

}  // namespace gvmlab
