#pragma once

#include "gvmlab/multi_index.hpp"
#include "gvmlab/witt.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gvmlab {

/// Element of Omega(lambda) in the shifted-factorial basis X_eta, where
/// X_eta = prod_i (x_i+1)...(x_i+eta_i). All actions are basis-to-basis.
using OmegaPoly = std::map<MultiIndex, Rational>;

void omega_add(OmegaPoly& into, const MultiIndex& eta, const Rational& c);
void omega_add(OmegaPoly& into, const OmegaPoly& other, const Rational& scale = 1);

/// Generators of the Weyl algebra K_m whose Omega action is exposed directly.
struct OmegaGen {
    enum class Kind { TPlus, TMinus, TDel, Del };  // t_i, t_i^{-1}, t_i d_i, d_i
    Kind kind;
    std::size_t i;  // 1-based
};

/// Defining action on Omega(lambda), re-expanded in the X basis:
///   t_i^{+1}: X_eta -> lambda_i (X_eta - eta_i X_{eta-e_i})
///   t_i^{-1}: X_eta -> lambda_i^{-1} sum_{j<=eta_i} (eta_i!/j!) X_{eta_i -> j}
///   t_i d_i : X_eta -> X_{eta+e_i} - (eta_i+1) X_eta       (multiplication by x_i)
///   d_i     : X_eta -> lambda_i^{-1} X_{eta+e_i}
OmegaPoly omega_act(const OmegaGen& g, const OmegaPoly& f, const Lambda& lambda);

/// Laurent monomial t^gamma (gamma in Z^m) acting by composed shifts.
OmegaPoly omega_monomial_act(const std::vector<long>& gamma, const OmegaPoly& f,
                             const Lambda& lambda);

/// t^alpha d_i as a composite (d_i first, then the shifts).
OmegaPoly omega_weyl_act(const std::vector<long>& alpha, std::size_t i, const OmegaPoly& f,
                         const Lambda& lambda);

/// Conversions between the X basis and the plain monomial basis x^eta; used by the
/// omega_act tests.
std::map<MultiIndex, Rational> omega_to_monomials(const OmegaPoly& f);
OmegaPoly omega_from_monomials(const std::map<MultiIndex, Rational>& p);

}  // namespace gvmlab
