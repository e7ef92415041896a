#include "gvmlab/omega.hpp"

#include <cstdlib>

namespace gvmlab {

void omega_add(OmegaPoly& into, const MultiIndex& eta, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = into.try_emplace(eta, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            into.erase(it);
    }
}

void omega_add(OmegaPoly& into, const OmegaPoly& other, const Rational& scale) {
    if (scale.is_zero())
        return;
    for (const auto& [eta, c] : other)
        omega_add(into, eta, c * scale);
}

namespace {
MultiIndex with_entry(const MultiIndex& eta, std::size_t i, long value) {
    std::vector<long> e = eta.exps();
    e.at(i) = value;
    return MultiIndex(std::move(e));
}
}  // namespace

OmegaPoly omega_act(const OmegaGen& g, const OmegaPoly& f, const Lambda& lambda) {
    std::size_t i = g.i;
    if (i < 1 || i > lambda.size())
        throw DomainError("omega_act: direction out of range");
    OmegaPoly out;
    for (const auto& [eta, c] : f) {
        long ei = eta[i - 1];
        switch (g.kind) {
            case OmegaGen::Kind::TPlus:
                omega_add(out, eta, c * lambda[i - 1]);
                if (ei > 0)
                    omega_add(out, eta.minus(i - 1), -c * lambda[i - 1] * Rational(ei));
                break;
            case OmegaGen::Kind::TMinus: {
                Rational inv = lambda[i - 1].inverse();
                // (eta_i)!/j! falling products, j = eta_i down to 0
                Rational factor = 1;
                for (long j = ei; j >= 0; --j) {
                    omega_add(out, with_entry(eta, i - 1, j), c * inv * factor);
                    factor *= Rational(j);
                }
                break;
            }
            case OmegaGen::Kind::TDel:
                omega_add(out, eta.plus(i - 1), c);
                omega_add(out, eta, -c * Rational(ei + 1));
                break;
            case OmegaGen::Kind::Del:
                omega_add(out, eta.plus(i - 1), c * lambda[i - 1].inverse());
                break;
        }
    }
    return out;
}

OmegaPoly omega_monomial_act(const std::vector<long>& gamma, const OmegaPoly& f,
                             const Lambda& lambda) {
    if (gamma.size() != lambda.size())
        throw DimensionError("omega_monomial_act: length mismatch");
    OmegaPoly cur = f;
    for (std::size_t i = 1; i <= gamma.size(); ++i) {
        long g = gamma[i - 1];
        OmegaGen gen{g > 0 ? OmegaGen::Kind::TPlus : OmegaGen::Kind::TMinus, i};
        for (long t = 0; t < std::abs(g); ++t)
            cur = omega_act(gen, cur, lambda);
    }
    return cur;
}

OmegaPoly omega_weyl_act(const std::vector<long>& alpha, std::size_t i, const OmegaPoly& f,
                         const Lambda& lambda) {
    OmegaPoly cur = omega_act(OmegaGen{OmegaGen::Kind::Del, i}, f, lambda);
    return omega_monomial_act(alpha, cur, lambda);
}

namespace {
/// One-variable expansion of X_k = (x+1)...(x+k) as monomial coefficients.
std::vector<Rational> xk_monomials(long k) {
    std::vector<Rational> coeffs{1};
    for (long r = 1; r <= k; ++r) {
        std::vector<Rational> next(coeffs.size() + 1);
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] += coeffs[d];
            next[d] += coeffs[d] * Rational(r);
        }
        coeffs = std::move(next);
    }
    return coeffs;
}
}  // namespace

std::map<MultiIndex, Rational> omega_to_monomials(const OmegaPoly& f) {
    std::map<MultiIndex, Rational> out;
    for (const auto& [eta, c] : f) {
        std::map<MultiIndex, Rational> acc{{MultiIndex(eta.size()), c}};
        for (std::size_t i = 0; i < eta.size(); ++i) {
            if (eta[i] == 0)
                continue;
            std::vector<Rational> coeffs = xk_monomials(eta[i]);
            std::map<MultiIndex, Rational> next;
            for (const auto& [mono, cc] : acc)
                for (std::size_t d = 0; d < coeffs.size(); ++d) {
                    if (coeffs[d].is_zero())
                        continue;
                    MultiIndex shifted = with_entry(mono, i, mono[i] + static_cast<long>(d));
                    auto [it, inserted] = next.try_emplace(shifted, cc * coeffs[d]);
                    if (!inserted)
                        it->second += cc * coeffs[d];
                }
            acc = std::move(next);
        }
        for (const auto& [mono, cc] : acc) {
            auto [it, inserted] = out.try_emplace(mono, cc);
            if (!inserted) {
                it->second += cc;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    }
    return out;
}

OmegaPoly omega_from_monomials(const std::map<MultiIndex, Rational>& p) {
    std::map<MultiIndex, Rational> rest = p;
    OmegaPoly out;
    while (!rest.empty()) {
        // X_eta = x^eta + componentwise-smaller terms, so peeling the grlex-max
        // monomial is a triangular substitution.
        auto best = rest.begin();
        for (auto it = rest.begin(); it != rest.end(); ++it)
            if (grlex_less(best->first, it->first))
                best = it;
        MultiIndex eta = best->first;
        Rational c = best->second;
        omega_add(out, eta, c);
        std::map<MultiIndex, Rational> expansion = omega_to_monomials({{eta, Rational(1)}});
        for (const auto& [mono, cc] : expansion) {
            auto [it, inserted] = rest.try_emplace(mono, -c * cc);
            if (!inserted) {
                it->second -= c * cc;
                if (it->second.is_zero())
                    rest.erase(it);
            }
        }
        if (rest.count(eta))
            throw InternalError("omega_from_monomials: triangular step failed");
    }
    return out;
}

}  // namespace gvmlab
