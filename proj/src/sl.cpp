#include "gvmlab/sl.hpp"

#include <map>

namespace gvmlab {

std::vector<SlGenerator> sl_basis(std::size_t m) {
    std::vector<SlGenerator> out;
    for (std::size_t k = 1; k <= m + 1; ++k)
        for (std::size_t l = 1; l <= m + 1; ++l)
            if (k != l)
                out.push_back(SlGenerator::off_diagonal(k, l));
    for (std::size_t i = 1; i <= m; ++i)
        out.push_back(SlGenerator::cartan(i, m + 1));
    return out;
}

std::vector<SlGenerator> sl_simple_raising(std::size_t m) {
    std::vector<SlGenerator> out;
    for (std::size_t i = 1; i <= m; ++i)
        out.push_back(SlGenerator::off_diagonal(i, i + 1));
    return out;
}

std::vector<std::pair<Rational, SlGenerator>> sl_bracket(std::size_t m, const SlGenerator& x,
                                                         const SlGenerator& y) {
    using Unit = std::pair<std::size_t, std::size_t>;
    auto expand = [](const SlGenerator& g) {
        std::vector<std::pair<Rational, Unit>> out;
        if (g.kind == SlGenerator::Kind::OffDiagonal) {
            out.push_back({1, {g.i, g.j}});
        } else {
            out.push_back({1, {g.i, g.i}});
            out.push_back({-1, {g.j, g.j}});
        }
        return out;
    };
    std::map<Unit, Rational> acc;
    auto add = [&](const Unit& u, const Rational& c) {
        auto [it, inserted] = acc.try_emplace(u, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                acc.erase(it);
        }
    };
    for (const auto& [cx, ux] : expand(x))
        for (const auto& [cy, uy] : expand(y)) {
            Rational c = cx * cy;
            // [E_ab, E_cd] = d_bc E_ad - d_da E_cb
            if (ux.second == uy.first)
                add({ux.first, uy.second}, c);
            if (uy.second == ux.first)
                add({uy.first, ux.second}, -c);
        }
    std::vector<std::pair<Rational, SlGenerator>> out;
    for (const auto& [u, c] : acc) {
        if (u.first != u.second)
            out.push_back({c, SlGenerator::off_diagonal(u.first, u.second)});
        else if (u.first <= m)
            out.push_back({c, SlGenerator::cartan(u.first, m + 1)});
        // E_{m+1,m+1} terms are implied by tracelessness via the H_a above.
    }
    return out;
}

}  // namespace gvmlab
