#include "gvmlab/verma.hpp"

#include <algorithm>

namespace gvmlab {

bool operator<(const GlGenerator& a, const GlGenerator& b) {
    return std::pair{a.i, a.j} < std::pair{b.i, b.j};
}

void verma_add(VermaVector& into, const PbwMonomial& mono, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = into.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            into.erase(it);
    }
}

void verma_add(VermaVector& into, const VermaVector& other, const Rational& scale) {
    if (scale.is_zero())
        return;
    for (const auto& [mono, c] : other)
        verma_add(into, mono, c * scale);
}

bool verma_equal(const VermaVector& a, const VermaVector& b) {
    return a == b;
}

VermaModule::VermaModule(Weight mu, long max_depth)
    : mu_(std::move(mu)), max_depth_(max_depth), roots_(mu_.size()) {
    if (max_depth < 0)
        throw DomainError("VermaModule: negative depth cutoff");
}

VermaVector VermaModule::act(const GlGenerator& g, const PbwMonomial& mono) const {
    if (g.i < 1 || g.i > m() || g.j < 1 || g.j > m())
        throw DomainError("VermaModule: generator " + g.str() + " out of range");
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find({g, mono});
        if (it != memo_.end())
            return it->second;
    }
    VermaVector result = act_uncached(g, mono);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        memo_.emplace(std::pair{g, mono}, result);
    }
    return result;
}

VermaVector VermaModule::act_uncached(const GlGenerator& g, const PbwMonomial& mono) const {
    VermaVector out;
    if (g.is_cartan()) {
        // Monomials are weight vectors: eigenvalue mu_i - drop_i.
        std::vector<long> drop = mono.weight_drop(roots_);
        Rational eig = mu_[g.i - 1] - Rational(drop[g.i - 1]);
        verma_add(out, mono, eig);
        return out;
    }
    if (mono.is_empty()) {
        if (g.is_raising())
            return out;
        if (mono.depth() + 1 > max_depth_)
            throw TruncationError("VermaModule: depth cutoff " + std::to_string(max_depth_) +
                                  " exceeded");
        verma_add(out, mono.with_exp_delta(roots_.index_of(g.i, g.j), +1), 1);
        return out;
    }
    std::size_t first = mono.first_factor();
    if (g.is_lowering()) {
        std::size_t gidx = roots_.index_of(g.i, g.j);
        if (gidx <= first) {
            if (mono.depth() + 1 > max_depth_)
                throw TruncationError("VermaModule: depth cutoff " +
                                      std::to_string(max_depth_) + " exceeded");
            verma_add(out, mono.with_exp_delta(gidx, +1), 1);
            return out;
        }
    }
    // g (E F X) v = F (g X v) + [g,F] (X v), with F the leading factor.
    const GlGenerator& f = roots_.root(first);
    PbwMonomial rest = mono.with_exp_delta(first, -1);
    out = act(f, act(g, rest));
    for (const auto& [c, h] : gl_bracket(g, f))
        verma_add(out, act(h, rest), c);
    return out;
}

VermaVector VermaModule::act(const GlGenerator& g, const VermaVector& x) const {
    VermaVector out;
    for (const auto& [mono, c] : x)
        verma_add(out, act(g, mono), c);
    return out;
}

RationalMatrix VermaModule::shapovalov_gram(const std::vector<long>& drop) const {
    std::vector<PbwMonomial> monos = monomials_with_drop(roots_, drop);
    RationalMatrix gram(monos.size(), monos.size());
    for (std::size_t s = 0; s < monos.size(); ++s) {
        VermaVector col{{monos[s], Rational(1)}};
        for (std::size_t r = 0; r < monos.size(); ++r) {
            // Apply the transposed monomial tau(Y_r), factor by factor in PBW
            // order (tau reverses products, so the first factor acts first).
            VermaVector w = col;
            for (std::size_t k = 0; k < roots_.count() && !w.empty(); ++k)
                for (long rep = 0; rep < monos[r].exp(k); ++rep)
                    w = act(GlGenerator{roots_.root(k).j, roots_.root(k).i}, w);
            gram.at(r, s) = vmu_coefficient(w);
        }
    }
    return gram;
}

Rational VermaModule::vmu_coefficient(const VermaVector& x) const {
    auto it = x.find(empty_monomial());
    return it == x.end() ? Rational(0) : it->second;
}

SimpleModule::SimpleModule(Weight mu, long max_depth) : mu_(mu), verma_(mu, max_depth) {}

const QuotientSpace& SimpleModule::space(const std::vector<long>& drop) const {
    if (drop.size() != m())
        throw DimensionError("SimpleModule: drop length mismatch");
    if (!is_valid_drop(drop))
        throw DomainError("SimpleModule: not a Z_+ root combination");
    if (drop_height(drop) > max_depth())
        throw TruncationError("SimpleModule: drop height " + std::to_string(drop_height(drop)) +
                              " beyond depth cutoff " + std::to_string(max_depth()));
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(drop);
        if (it != cache_.end())
            return *it->second;
    }
    std::vector<PbwMonomial> monos = monomials_with_drop(verma_.roots(), drop);
    Rref rref = row_reduce(verma_.shapovalov_gram(drop));
    std::vector<PbwMonomial> basis;
    for (std::size_t p : rref.pivot_cols)
        basis.push_back(monos[p]);
    std::vector<std::vector<Rational>> radical;
    for (std::size_t fi = 0; fi < rref.free_cols.size(); ++fi) {
        std::vector<Rational> v(monos.size());
        v[rref.free_cols[fi]] = 1;
        for (std::size_t p = 0; p < rref.pivot_cols.size(); ++p)
            v[rref.pivot_cols[p]] = -rref.reduced.at(p, rref.free_cols[fi]);
        radical.push_back(std::move(v));
    }
    auto sp = std::make_shared<const QuotientSpace>(QuotientSpace{
        drop, std::move(monos), std::move(rref), std::move(basis), std::move(radical)});
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(drop, sp);
    return *it->second;
}

VermaVector SimpleModule::reduce(const VermaVector& x) const {
    // Group by weight drop; reduction is per weight space.
    std::map<std::vector<long>, VermaVector> by_drop;
    for (const auto& [mono, c] : x)
        by_drop[mono.weight_drop(verma_.roots())].emplace(mono, c);
    VermaVector out;
    for (auto& [drop, part] : by_drop) {
        const QuotientSpace& sp = space(drop);
        std::vector<Rational> coords(sp.verma_monomials.size());
        for (const auto& [mono, c] : part) {
            auto it = std::lower_bound(sp.verma_monomials.begin(), sp.verma_monomials.end(), mono);
            if (it == sp.verma_monomials.end() || !(*it == mono))
                throw InternalError("SimpleModule: monomial missing from its weight space");
            coords[static_cast<std::size_t>(it - sp.verma_monomials.begin())] = c;
        }
        for (std::size_t fi = 0; fi < sp.gram_rref.free_cols.size(); ++fi) {
            std::size_t f = sp.gram_rref.free_cols[fi];
            if (coords[f].is_zero())
                continue;
            Rational cf = coords[f];
            const auto& null_vec = sp.radical_basis[fi];
            for (std::size_t k = 0; k < coords.size(); ++k)
                if (!null_vec[k].is_zero())
                    coords[k] -= cf * null_vec[k];
        }
        for (std::size_t k = 0; k < coords.size(); ++k)
            verma_add(out, sp.verma_monomials[k], coords[k]);
    }
    return out;
}

VermaVector SimpleModule::act(const GlGenerator& g, const VermaVector& x) const {
    return reduce(verma_.act(g, x));
}

std::vector<Rational> SimpleModule::coordinates(const std::vector<long>& drop,
                                                const VermaVector& reduced) const {
    const QuotientSpace& sp = space(drop);
    std::vector<Rational> coords(sp.basis.size());
    for (const auto& [mono, c] : reduced) {
        if (mono.weight_drop(verma_.roots()) != drop)
            throw DomainError("SimpleModule: vector not in the requested weight space");
        auto it = std::lower_bound(sp.basis.begin(), sp.basis.end(), mono);
        if (it == sp.basis.end() || !(*it == mono))
            throw InternalError("SimpleModule: reduced vector off the pivot basis");
        coords[static_cast<std::size_t>(it - sp.basis.begin())] = c;
    }
    return coords;
}

mpz_class weyl_dimension(const Weight& mu) {
    std::size_t m = mu.size();
    for (std::size_t s = 0; s + 1 < m; ++s)
        if (!(mu[s] - mu[s + 1]).is_nonneg_integer())
            throw DomainError("weyl_dimension: mu not dominant integral");
    Rational acc = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            long ji = static_cast<long>(j) - static_cast<long>(i);
            acc *= (mu[i] - mu[j] + Rational(ji)) / Rational(ji);
        }
    if (!acc.is_positive_integer())
        throw InternalError("weyl_dimension: non-integral product");
    return acc.numerator();
}

mpz_class total_quotient_dimension(const SimpleModule& module) {
    const Weight& mu = module.mu();
    std::size_t m = mu.size();
    for (std::size_t s = 0; s + 1 < m; ++s)
        if (!(mu[s] - mu[s + 1]).is_nonneg_integer())
            throw DomainError("total_quotient_dimension: mu not dominant integral");
    // Lowest weight is the reverse of mu; no weight space lies below it.
    std::vector<long> extreme(m);
    for (std::size_t i = 0; i < m; ++i)
        extreme[i] = (mu[i] - mu[m - 1 - i]).to_long();
    long height = drop_height(extreme);
    if (height > module.max_depth())
        throw TruncationError("total_quotient_dimension: needs depth " + std::to_string(height));
    mpz_class total = 0;
    for (const auto& drop : drops_up_to_height(m, height))
        total += static_cast<unsigned long>(module.dim(drop));
    return total;
}

}  // namespace gvmlab
