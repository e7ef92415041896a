#pragma once

#include "gvmlab/verma.hpp"
#include "gvmlab/weight.hpp"

#include <map>
#include <string>
#include <vector>

namespace gvmlab {

/// Sorted multiset i_1 <= ... <= i_k with entries in {ibar+1, ..., m} (1-based),
/// labelling the band basis vector v(i_1,...,i_k).
class BandMultiset {
public:
    BandMultiset() = default;
    explicit BandMultiset(std::vector<std::size_t> entries);

    std::size_t size() const { return e_.size(); }
    const std::vector<std::size_t>& entries() const { return e_; }
    long count(std::size_t i) const;

    BandMultiset inserted(std::size_t i) const;
    /// Removes one copy of p; throws if absent.
    BandMultiset removed(std::size_t p) const;
    BandMultiset replaced(std::size_t p, std::size_t i) const { return removed(p).inserted(i); }

    friend bool operator==(const BandMultiset& a, const BandMultiset& b) { return a.e_ == b.e_; }
    friend bool operator<(const BandMultiset& a, const BandMultiset& b) {
        if (a.e_.size() != b.e_.size())
            return a.e_.size() < b.e_.size();
        return a.e_ < b.e_;
    }

    std::string str() const;

private:
    std::vector<std::size_t> e_;
};

using BandVector = std::map<BandMultiset, Rational>;

void band_add(BandVector& into, const BandMultiset& ms, const Rational& c);
void band_add(BandVector& into, const BandVector& other, const Rational& scale = 1);

/// Closed-form model of the band weight spaces of L(mu) for a two-block highest
/// weight, normalized so that (prod_s E_{ibar,i_s}) v(i_1..i_k) = A_l^k v_mu.
/// The normalization constant l is caller-supplied.
class BandModule {
public:
    BandModule(Weight mu, BlockProfile profile, long l);

    const Weight& mu() const { return mu_; }
    const BlockProfile& profile() const { return profile_; }
    long l() const { return l_; }
    std::size_t m() const { return profile_.m; }

    /// All multisets of size k over {ibar+1..m}; empty when a in Z_+ and k > a.
    std::vector<BandMultiset> basis(long k) const;

    /// True when v(ms) is nonzero under the A_l^k normalization: the weight space
    /// survives (k <= a whenever a in Z_+) and A_l^k itself is nonzero (k <= l).
    bool multiset_nonzero(const BandMultiset& ms) const;

    /// Weight of v(ms): mu + sum_s e_{i_s} - k e_ibar.
    Weight weight_of(const BandMultiset& ms) const;
    /// Drop (mu - weight) of v(ms) as a length-m integer vector.
    std::vector<long> drop_of(const BandMultiset& ms) const;

    /// Action by the closed forms. Supports Cartan E_{j,j} and E_{i,p}, E_{i,ibar},
    /// E_{ibar,p} with i,p in the band; anything else raises
    /// UnsupportedGeneratorError so callers can fall back to the quotient oracle.
    BandVector act(const GlGenerator& g, const BandVector& x) const;

    /// Expression of v(ms) inside the quotient realization of L(mu); the scalar is
    /// fixed by the A_l^k normalization. Zero vector for truncated multisets.
    VermaVector embed(const BandMultiset& ms, const SimpleModule& simple) const;

private:
    BandVector act_single(const GlGenerator& g, const BandMultiset& ms) const;

    Weight mu_;
    BlockProfile profile_;
    long l_;
};

}  // namespace gvmlab
