#pragma once

#include "gvmlab/gl.hpp"
#include "gvmlab/matrix.hpp"
#include "gvmlab/pbw.hpp"
#include "gvmlab/weight.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace gvmlab {

/// Sparse element of the Verma module M(mu): coefficients on PBW monomials
/// applied to v_mu. Zero coefficients are pruned on insertion.
using VermaVector = std::map<PbwMonomial, Rational>;

void verma_add(VermaVector& into, const PbwMonomial& mono, const Rational& c);
void verma_add(VermaVector& into, const VermaVector& other, const Rational& scale = 1);
bool verma_equal(const VermaVector& a, const VermaVector& b);

/// The gl(m) Verma module M(mu), truncated at a mandatory depth cutoff. All
/// operations are pure; exceeding the cutoff raises TruncationError, never a
/// silent truncation.
class VermaModule {
public:
    VermaModule(Weight mu, long max_depth);

    const Weight& mu() const { return mu_; }
    std::size_t m() const { return mu_.size(); }
    long max_depth() const { return max_depth_; }
    const PbwRoots& roots() const { return roots_; }

    PbwMonomial empty_monomial() const { return PbwMonomial(roots_.count()); }

    /// g applied to a PBW monomial * v_mu, re-expressed in PBW monomials by
    /// recursive straightening through the gl(m) relations.
    VermaVector act(const GlGenerator& g, const PbwMonomial& mono) const;
    VermaVector act(const GlGenerator& g, const VermaVector& x) const;

    /// Gram matrix of the contravariant form on the weight space of the given
    /// drop: G_rs = <Y_r v_mu, Y_s v_mu>, transpose E_{i,j} -> E_{j,i}.
    RationalMatrix shapovalov_gram(const std::vector<long>& drop) const;

    /// Coefficient of v_mu (the empty monomial) in x.
    Rational vmu_coefficient(const VermaVector& x) const;

private:
    VermaVector act_uncached(const GlGenerator& g, const PbwMonomial& mono) const;

    Weight mu_;
    long max_depth_;
    PbwRoots roots_;

    // Straightening memo; invisible to callers and mutex-guarded.
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<GlGenerator, PbwMonomial>, VermaVector> memo_;
};

bool operator<(const GlGenerator& a, const GlGenerator& b);

/// Weight-space data of the simple quotient L(mu): the Verma weight space modulo
/// the radical of the contravariant form, with deterministic representatives
/// (pivot columns of the Gram elimination).
struct QuotientSpace {
    std::vector<long> drop;
    std::vector<PbwMonomial> verma_monomials;  // ascending
    Rref gram_rref;
    std::vector<PbwMonomial> basis;            // pivot monomials, ascending
    std::vector<std::vector<Rational>> radical_basis;
};

/// The simple highest weight module L(mu) realized as Verma representatives
/// reduced modulo the per-weight-space radical. Serves as the generic oracle.
class SimpleModule {
public:
    SimpleModule(Weight mu, long max_depth);

    const Weight& mu() const { return mu_; }
    std::size_t m() const { return verma_.m(); }
    long max_depth() const { return verma_.max_depth(); }
    const VermaModule& verma() const { return verma_; }

    const QuotientSpace& space(const std::vector<long>& drop) const;
    std::size_t dim(const std::vector<long>& drop) const { return space(drop).basis.size(); }

    /// Canonical representative: support only on pivot monomials of each space.
    VermaVector reduce(const VermaVector& x) const;
    bool is_zero(const VermaVector& x) const { return reduce(x).empty(); }

    /// g . x followed by reduction; x must already be reduced or reducible.
    VermaVector act(const GlGenerator& g, const VermaVector& x) const;

    /// Coordinates of a reduced vector w.r.t. space(drop).basis.
    std::vector<Rational> coordinates(const std::vector<long>& drop,
                                      const VermaVector& reduced) const;

    VermaVector highest_vector() const { return {{verma_.empty_monomial(), Rational(1)}}; }

private:
    Weight mu_;
    VermaModule verma_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<long>, std::shared_ptr<const QuotientSpace>> cache_;
};

/// Product formula dimension of L(mu) for dominant integral mu.
mpz_class weyl_dimension(const Weight& mu);

/// Total dimension of L(mu) summed over all weight spaces; only terminates for
/// dominant integral mu (drops are scanned up to the lowest weight).
mpz_class total_quotient_dimension(const SimpleModule& module);

}  // namespace gvmlab
