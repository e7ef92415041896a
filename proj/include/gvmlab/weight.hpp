#pragma once

#include "gvmlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gvmlab {

/// Length-m exact-rational weight vector; entry i is the eigenvalue of E_{i,i}.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Rational> entries) : e_(std::move(entries)) {
        if (e_.empty())
            throw DimensionError("Weight: length must be >= 1");
    }

    std::size_t size() const { return e_.size(); }
    const Rational& operator[](std::size_t i) const { return e_.at(i); }

    Rational component_sum() const {
        Rational s = 0;
        for (const auto& x : e_)
            s += x;
        return s;
    }

    /// this + c*e_i (0-based i).
    Weight shifted(std::size_t i, const Rational& c) const {
        Weight w = *this;
        w.e_.at(i) += c;
        return w;
    }
    /// this + c*(1,...,1).
    Weight shifted_all(const Rational& c) const {
        Weight w = *this;
        for (auto& x : w.e_)
            x += c;
        return w;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.e_ != b.e_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i)
                s += ",";
            s += e_[i].str();
        }
        return s + ")";
    }

private:
    std::vector<Rational> e_;
};

/// Two-block shape data of a highest weight: mu_1=...=mu_ibar, mu_{ibar+1}=...=mu_m.
/// ibar is 1-based; ibar == m exactly when all entries are equal.
struct BlockProfile {
    std::size_t m = 0;
    std::size_t ibar = 0;                // 1-based
    Rational a;                          // mu_ibar - mu_{ibar+1}; undefined slot when ibar == m
    std::optional<long> l;               // mu_ibar + m + 1 - ibar, when a positive integer

    bool has_band() const { return ibar < m; }
};

/// Detects the two-block shape of mu, with ibar forced when supplied (1-based).
/// Throws DomainError when mu is not two-block (or not of the forced shape).
BlockProfile detect_profile(const Weight& mu, std::optional<std::size_t> forced_ibar = {});

/// True iff mu is two-block (without throwing).
bool is_two_block(const Weight& mu);

}  // namespace gvmlab
