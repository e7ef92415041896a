#pragma once

#include "gvmlab/rational.hpp"
#include "gvmlab/sl.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gvmlab {

/// Nonzero rational lambda_1..lambda_m parametrizing Omega(lambda) and sigma_lambda.
class Lambda {
public:
    explicit Lambda(std::vector<Rational> entries) : e_(std::move(entries)) {
        if (e_.empty())
            throw DimensionError("Lambda: length must be >= 1");
        for (const auto& x : e_)
            if (x.is_zero())
                throw DomainError("Lambda: entries must be nonzero");
    }
    static Lambda ones(std::size_t m) {
        return Lambda(std::vector<Rational>(m, Rational(1)));
    }
    std::size_t size() const { return e_.size(); }
    const Rational& operator[](std::size_t i) const { return e_.at(i); }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i)
                s += ",";
            s += e_[i].str();
        }
        return s + ")";
    }
    friend bool operator==(const Lambda& a, const Lambda& b) { return a.e_ == b.e_; }

private:
    std::vector<Rational> e_;
};

/// Finitely supported rational combination of symbols t^alpha d_i, alpha in Z^m.
/// Brackets are computed symbolically; no topology, no completions.
class WittElement {
public:
    using Key = std::pair<std::vector<long>, std::size_t>;  // (alpha, direction i; 1-based)

    WittElement() = default;

    static WittElement symbol(std::vector<long> alpha, std::size_t i,
                              const Rational& c = 1) {
        WittElement w;
        w.add(std::move(alpha), i, c);
        return w;
    }

    void add(std::vector<long> alpha, std::size_t i, const Rational& c);
    void add(const WittElement& other, const Rational& scale = 1);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const WittElement& a, const WittElement& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    std::map<Key, Rational> terms_;
};

/// [t^a d_i, t^b d_j] = b_i t^{a+b-e_i} d_j - a_j t^{a+b-e_j} d_i, bilinearly.
WittElement witt_bracket(const WittElement& x, const WittElement& y);

/// The degree derivation d = sum_s t_s d_s.
WittElement witt_euler(std::size_t m);

/// L_i = lambda_i^{-1} t_i d - d - sum_s (lambda_s lambda_i^{-1} t_i d_s - lambda_s d_s).
WittElement witt_L(const Lambda& lambda, std::size_t i);

/// The standard embedding of sl(m+1) into W_m: E_{i,j} -> t_i d_j,
/// E_{m+1,i} -> -d_i, E_{i,m+1} -> t_i d, H_i -> d + t_i d_i.
WittElement embed_standard(std::size_t m, const SlGenerator& g);

/// The isomorphism sigma_lambda from sl(m+1) onto s' inside W_m.
WittElement sigma_lambda(std::size_t m, const Lambda& lambda, const SlGenerator& g);

/// First failing pair of the Lie homomorphism identity [phi(x),phi(y)] = phi([x,y])
/// over the whole sl(m+1) basis, or nullopt when the identity holds.
std::optional<std::string> lie_hom_counterexample(
    std::size_t m, const std::function<WittElement(const SlGenerator&)>& phi);

}  // namespace gvmlab
