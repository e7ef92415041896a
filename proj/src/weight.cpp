#include "gvmlab/weight.hpp"

namespace gvmlab {

BlockProfile detect_profile(const Weight& mu, std::optional<std::size_t> forced_ibar) {
    std::size_t m = mu.size();
    std::size_t ibar;
    if (forced_ibar) {
        ibar = *forced_ibar;
        if (ibar < 1 || ibar > m)
            throw DomainError("profile: ibar out of range 1.." + std::to_string(m));
    } else {
        ibar = 1;
        while (ibar < m && mu[ibar] == mu[0])
            ++ibar;
    }
    for (std::size_t s = 1; s < ibar; ++s)
        if (mu[s] != mu[0])
            throw DomainError("profile: mu not constant on the first block");
    for (std::size_t s = ibar; s + 1 < m; ++s)
        if (mu[s + 1] != mu[ibar])
            throw DomainError("profile: mu not two-block at " + mu.str());
    // ibar == m is the canonical form when all entries are equal.
    if (ibar < m && mu[ibar - 1] == mu[ibar])
        throw DomainError("profile: all entries equal, ibar must be m");

    BlockProfile p;
    p.m = m;
    p.ibar = ibar;
    if (ibar < m)
        p.a = mu[ibar - 1] - mu[ibar];
    Rational lval = mu[ibar - 1] + Rational(static_cast<long>(m) + 1 - static_cast<long>(ibar));
    if (lval.is_positive_integer())
        p.l = lval.to_long();
    return p;
}

bool is_two_block(const Weight& mu) {
    try {
        detect_profile(mu);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

}  // namespace gvmlab
