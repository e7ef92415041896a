#include "gvmlab/pbw.hpp"

#include <algorithm>
#include <functional>

namespace gvmlab {

PbwRoots::PbwRoots(std::size_t m) : m_(m) {
    if (m < 1)
        throw DomainError("PbwRoots: m must be >= 1");
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = j + 1; i <= m; ++i) {
            by_pair_[{i, j}] = roots_.size();
            roots_.push_back(GlGenerator{i, j});
        }
}

std::size_t PbwRoots::index_of(std::size_t i, std::size_t j) const {
    auto it = by_pair_.find({i, j});
    if (it == by_pair_.end())
        throw DomainError("PbwRoots: E(" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not a negative root vector");
    return it->second;
}

std::vector<long> PbwMonomial::weight_drop(const PbwRoots& roots) const {
    std::vector<long> drop(roots.m(), 0);
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (!e_[k])
            continue;
        const GlGenerator& g = roots.root(k);
        drop[g.j - 1] += e_[k];
        drop[g.i - 1] -= e_[k];
    }
    return drop;
}

std::string PbwMonomial::str(const PbwRoots& roots) const {
    std::string s;
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (!e_[k])
            continue;
        if (!s.empty())
            s += "*";
        s += roots.root(k).str();
        if (e_[k] > 1)
            s += "^" + std::to_string(e_[k]);
    }
    return s.empty() ? "1" : s;
}

long drop_height(const std::vector<long>& drop) {
    long h = 0, partial = 0;
    for (std::size_t s = 0; s + 1 < drop.size(); ++s) {
        partial += drop[s];
        h += partial;
    }
    return h;
}

bool is_valid_drop(const std::vector<long>& drop) {
    long partial = 0;
    for (std::size_t s = 0; s + 1 < drop.size(); ++s) {
        partial += drop[s];
        if (partial < 0)
            return false;
    }
    partial += drop.empty() ? 0 : drop.back();
    return partial == 0;
}

namespace {
void enum_with_drop(const PbwRoots& roots, std::size_t idx, std::vector<long>& remaining,
                    std::vector<long>& exps, std::vector<PbwMonomial>& out) {
    if (idx == roots.count()) {
        if (std::all_of(remaining.begin(), remaining.end(), [](long x) { return x == 0; }))
            out.emplace_back(exps);
        return;
    }
    const GlGenerator& g = roots.root(idx);
    long ht = drop_height(remaining);
    long span = static_cast<long>(g.i - g.j);
    long maxk = ht / span;
    for (long k = 0; k <= maxk; ++k) {
        exps[idx] = k;
        remaining[g.j - 1] -= k;
        remaining[g.i - 1] += k;
        long h2 = drop_height(remaining);
        if (h2 >= 0)
            enum_with_drop(roots, idx + 1, remaining, exps, out);
        remaining[g.j - 1] += k;
        remaining[g.i - 1] -= k;
    }
    exps[idx] = 0;
}

void enum_by_depth(const PbwRoots& roots, std::size_t idx, long budget, std::vector<long>& exps,
                   std::vector<PbwMonomial>& out) {
    if (idx == roots.count()) {
        out.emplace_back(exps);
        return;
    }
    for (long k = 0; k <= budget; ++k) {
        exps[idx] = k;
        enum_by_depth(roots, idx + 1, budget - k, exps, out);
    }
    exps[idx] = 0;
}
}  // namespace

std::vector<PbwMonomial> monomials_with_drop(const PbwRoots& roots,
                                             const std::vector<long>& drop) {
    if (drop.size() != roots.m())
        throw DimensionError("monomials_with_drop: drop length mismatch");
    std::vector<PbwMonomial> out;
    if (!is_valid_drop(drop))
        return out;
    std::vector<long> remaining = drop;
    std::vector<long> exps(roots.count(), 0);
    enum_with_drop(roots, 0, remaining, exps, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::vector<long>, std::vector<PbwMonomial>>> monomials_by_depth(
    const PbwRoots& roots, long depth) {
    std::vector<PbwMonomial> all;
    std::vector<long> exps(roots.count(), 0);
    enum_by_depth(roots, 0, depth, exps, all);
    std::map<std::vector<long>, std::vector<PbwMonomial>> grouped;
    for (auto& mono : all)
        grouped[mono.weight_drop(roots)].push_back(mono);
    std::vector<std::pair<std::vector<long>, std::vector<PbwMonomial>>> out;
    for (auto& [drop, monos] : grouped) {
        std::sort(monos.begin(), monos.end());
        out.emplace_back(drop, monos);
    }
    return out;
}

std::vector<std::vector<long>> drops_up_to_height(std::size_t m, long max_height) {
    std::vector<std::vector<long>> out;
    // Simple-root coefficients c_s >= 0 with sum <= max_height.
    std::vector<long> cur;
    auto emit = [&]() {
        std::vector<long> drop(m, 0);
        for (std::size_t s = 0; s + 1 < m; ++s) {
            drop[s] += cur[s];
            drop[s + 1] -= cur[s];
        }
        out.push_back(drop);
    };
    std::function<void(std::size_t, long)> rec = [&](std::size_t s, long budget) {
        if (s + 1 >= m) {
            emit();
            return;
        }
        for (long c = 0; c <= budget; ++c) {
            cur.push_back(c);
            rec(s + 1, budget - c);
            cur.pop_back();
        }
    };
    if (m >= 1)
        rec(0, max_height);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gvmlab
