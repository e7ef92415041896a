#include "gvmlab/witt.hpp"

namespace gvmlab {

void WittElement::add(std::vector<long> alpha, std::size_t i, const Rational& c) {
    if (c.is_zero())
        return;
    Key key{std::move(alpha), i};
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void WittElement::add(const WittElement& other, const Rational& scale) {
    if (scale.is_zero())
        return;
    for (const auto& [key, c] : other.terms_)
        add(key.first, key.second, c * scale);
}

std::string WittElement::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.str() + ")t^(";
        for (std::size_t k = 0; k < key.first.size(); ++k) {
            if (k)
                s += ",";
            s += std::to_string(key.first[k]);
        }
        s += ")d" + std::to_string(key.second);
    }
    return s;
}

WittElement witt_bracket(const WittElement& x, const WittElement& y) {
    WittElement out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            const auto& [a, i] = kx;
            const auto& [b, j] = ky;
            Rational c = cx * cy;
            if (b[i - 1] != 0) {
                std::vector<long> exp = a;
                for (std::size_t s = 0; s < exp.size(); ++s)
                    exp[s] += b[s];
                exp[i - 1] -= 1;
                out.add(std::move(exp), j, c * Rational(b[i - 1]));
            }
            if (a[j - 1] != 0) {
                std::vector<long> exp = a;
                for (std::size_t s = 0; s < exp.size(); ++s)
                    exp[s] += b[s];
                exp[j - 1] -= 1;
                out.add(std::move(exp), i, -c * Rational(a[j - 1]));
            }
        }
    return out;
}

WittElement witt_euler(std::size_t m) {
    WittElement d;
    for (std::size_t s = 1; s <= m; ++s) {
        std::vector<long> e(m, 0);
        e[s - 1] = 1;
        d.add(std::move(e), s, 1);
    }
    return d;
}

WittElement witt_L(const Lambda& lambda, std::size_t i) {
    std::size_t m = lambda.size();
    WittElement out;
    // lambda_i^{-1} t_i d
    for (std::size_t s = 1; s <= m; ++s) {
        std::vector<long> e(m, 0);
        e[i - 1] += 1;
        e[s - 1] += 1;
        out.add(std::move(e), s, lambda[i - 1].inverse());
    }
    // -d
    out.add(witt_euler(m), -1);
    for (std::size_t s = 1; s <= m; ++s) {
        // -lambda_s lambda_i^{-1} t_i d_s
        std::vector<long> e(m, 0);
        e[i - 1] = 1;
        out.add(std::move(e), s, -(lambda[s - 1] * lambda[i - 1].inverse()));
        // +lambda_s d_s
        out.add(std::vector<long>(m, 0), s, lambda[s - 1]);
    }
    return out;
}

WittElement embed_standard(std::size_t m, const SlGenerator& g) {
    auto ti_dj = [&](std::size_t i, std::size_t j) {
        std::vector<long> e(m, 0);
        e[i - 1] = 1;
        return WittElement::symbol(std::move(e), j);
    };
    if (g.kind == SlGenerator::Kind::OffDiagonal) {
        if (g.i <= m && g.j <= m)
            return ti_dj(g.i, g.j);
        if (g.i == m + 1 && g.j <= m)
            return WittElement::symbol(std::vector<long>(m, 0), g.j, -1);
        if (g.j == m + 1 && g.i <= m) {
            // t_i d
            WittElement out;
            for (std::size_t s = 1; s <= m; ++s) {
                std::vector<long> e(m, 0);
                e[g.i - 1] += 1;
                e[s - 1] += 1;
                out.add(std::move(e), s, 1);
            }
            return out;
        }
        throw DomainError("embed_standard: generator out of range");
    }
    auto h_image = [&](std::size_t i) {
        WittElement out = witt_euler(m);
        out.add(ti_dj(i, i));
        return out;
    };
    if (g.j == m + 1)
        return h_image(g.i);
    if (g.i == m + 1) {
        WittElement out;
        out.add(h_image(g.j), -1);
        return out;
    }
    WittElement out = h_image(g.i);
    out.add(h_image(g.j), -1);
    return out;
}

WittElement sigma_lambda(std::size_t m, const Lambda& lambda, const SlGenerator& g) {
    if (lambda.size() != m)
        throw DimensionError("sigma_lambda: lambda length mismatch");
    auto dj = [&](std::size_t j, const Rational& c) {
        return WittElement::symbol(std::vector<long>(m, 0), j, c);
    };
    auto ti_dj = [&](std::size_t i, std::size_t j, const Rational& c) {
        std::vector<long> e(m, 0);
        e[i - 1] = 1;
        return WittElement::symbol(std::move(e), j, c);
    };
    auto h_image = [&](std::size_t i) {
        // sum_s (t_s d_s - lambda_s d_s) + (t_i d_i - lambda_i d_i)
        WittElement out;
        for (std::size_t s = 1; s <= m; ++s) {
            out.add(ti_dj(s, s, 1));
            out.add(dj(s, -lambda[s - 1]));
        }
        out.add(ti_dj(i, i, 1));
        out.add(dj(i, -lambda[i - 1]));
        return out;
    };
    if (g.kind == SlGenerator::Kind::OffDiagonal) {
        if (g.i <= m && g.j <= m) {
            WittElement out = ti_dj(g.i, g.j, lambda[g.i - 1].inverse() * lambda[g.j - 1]);
            out.add(dj(g.j, -lambda[g.j - 1]));
            return out;
        }
        if (g.i == m + 1 && g.j <= m)
            return dj(g.j, -lambda[g.j - 1]);
        if (g.j == m + 1 && g.i <= m)
            return witt_L(lambda, g.i);
        throw DomainError("sigma_lambda: generator out of range");
    }
    if (g.j == m + 1)
        return h_image(g.i);
    if (g.i == m + 1) {
        WittElement out;
        out.add(h_image(g.j), -1);
        return out;
    }
    WittElement out = h_image(g.i);
    out.add(h_image(g.j), -1);
    return out;
}

std::optional<std::string> lie_hom_counterexample(
    std::size_t m, const std::function<WittElement(const SlGenerator&)>& phi) {
    const auto basis = sl_basis(m);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            WittElement lhs = witt_bracket(phi(x), phi(y));
            WittElement rhs;
            for (const auto& [c, g] : sl_bracket(m, x, y))
                rhs.add(phi(g), c);
            WittElement diff = lhs;
            diff.add(rhs, -1);
            if (!diff.is_zero())
                return "[phi(" + x.str() + "), phi(" + y.str() + ")] - phi([" + x.str() +
                       "," + y.str() + "]) = " + diff.str();
        }
    return std::nullopt;
}

}  // namespace gvmlab
