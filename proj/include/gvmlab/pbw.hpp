#pragma once

#include "gvmlab/gl.hpp"
#include "gvmlab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gvmlab {

/// Table of the negative root vectors E_{i,j} (1 <= j < i <= m) of gl(m) in the
/// frozen PBW factor order: j ascending, then i ascending. Every monomial in the
/// artifact is written left-to-right in this order.
class PbwRoots {
public:
    explicit PbwRoots(std::size_t m);

    std::size_t m() const { return m_; }
    std::size_t count() const { return roots_.size(); }
    const GlGenerator& root(std::size_t idx) const { return roots_.at(idx); }
    /// Index of E_{i,j} (i > j) in the factor order.
    std::size_t index_of(std::size_t i, std::size_t j) const;

private:
    std::size_t m_;
    std::vector<GlGenerator> roots_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_pair_;
};

/// Ordered product of negative root vectors applied to the highest weight vector.
/// exps[k] is the exponent of the k-th factor in the PbwRoots order.
class PbwMonomial {
public:
    PbwMonomial() = default;
    explicit PbwMonomial(std::size_t root_count) : e_(root_count, 0) {}
    explicit PbwMonomial(std::vector<long> exps) : e_(std::move(exps)) {}

    std::size_t root_count() const { return e_.size(); }
    long exp(std::size_t idx) const { return e_.at(idx); }
    bool is_empty() const {
        for (long x : e_)
            if (x)
                return false;
        return true;
    }
    /// Number of lowering factors counted with multiplicity.
    long depth() const {
        long d = 0;
        for (long x : e_)
            d += x;
        return d;
    }
    /// Smallest factor index with nonzero exponent; root_count() when empty.
    std::size_t first_factor() const {
        for (std::size_t k = 0; k < e_.size(); ++k)
            if (e_[k])
                return k;
        return e_.size();
    }
    PbwMonomial with_exp_delta(std::size_t idx, long delta) const {
        PbwMonomial x = *this;
        x.e_.at(idx) += delta;
        if (x.e_[idx] < 0)
            throw InternalError("PbwMonomial: negative exponent");
        return x;
    }

    /// Weight drop: the vector mu - weight(monomial * v_mu), a Z_+-combination of
    /// positive roots, as a length-m integer vector summing to zero.
    std::vector<long> weight_drop(const PbwRoots& roots) const;

    friend bool operator==(const PbwMonomial& a, const PbwMonomial& b) { return a.e_ == b.e_; }
    friend bool operator<(const PbwMonomial& a, const PbwMonomial& b) { return a.e_ < b.e_; }

    std::string str(const PbwRoots& roots) const;

private:
    std::vector<long> e_;
};

/// All PBW monomials with the given weight drop (complete: no depth bound needed,
/// the drop determines a finite set), sorted ascending by exponent vector.
std::vector<PbwMonomial> monomials_with_drop(const PbwRoots& roots,
                                             const std::vector<long>& drop);

/// All PBW monomials with depth <= depth, grouped by weight drop; pairs are sorted
/// by (drop, monomial) for reproducibility.
std::vector<std::pair<std::vector<long>, std::vector<PbwMonomial>>> monomials_by_depth(
    const PbwRoots& roots, long depth);

/// Drops delta (as length-m vectors summing to 0) of height <= max_height that are
/// Z_+-combinations of positive roots, sorted; height = number of simple-root steps.
std::vector<std::vector<long>> drops_up_to_height(std::size_t m, long max_height);

/// Height of a drop: the total simple-root count, sum over i of the partial sums.
long drop_height(const std::vector<long>& drop);

/// True iff drop is a Z_+-combination of positive roots (all partial sums >= 0 and
/// total 0).
bool is_valid_drop(const std::vector<long>& drop);

}  // namespace gvmlab
