#pragma once

#include "gvmlab/rational.hpp"

#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace gvmlab {

/// Element of Z_+^m indexing PBW monomials Y_alpha and basis polynomials X_eta.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t m) : e_(m, 0) {}
    explicit MultiIndex(std::vector<long> exps) : e_(std::move(exps)) {
        for (long x : e_)
            if (x < 0)
                throw DomainError("MultiIndex: negative exponent");
    }
    // Braced lists always mean exponent entries, never a length.
    MultiIndex(std::initializer_list<long> exps) : MultiIndex(std::vector<long>(exps)) {}

    static MultiIndex unit(std::size_t m, std::size_t i) {
        MultiIndex a(m);
        a.e_.at(i) += 1;
        return a;
    }

    std::size_t size() const { return e_.size(); }
    long operator[](std::size_t i) const { return e_.at(i); }
    long degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }
    const std::vector<long>& exps() const { return e_; }

    bool is_zero() const { return degree() == 0; }

    /// this + e_i (0-based i).
    MultiIndex plus(std::size_t i) const {
        MultiIndex a = *this;
        a.e_.at(i) += 1;
        return a;
    }
    /// this - e_i; throws if the entry is already zero.
    MultiIndex minus(std::size_t i) const {
        MultiIndex a = *this;
        if (a.e_.at(i) == 0)
            throw DomainError("MultiIndex: exponent would go negative");
        a.e_.at(i) -= 1;
        return a;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }
    /// Plain lexicographic order, used only as a tie-free map key.
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.e_ < b.e_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    std::vector<long> e_;
};

/// Graded order of the GVM section: alpha < beta iff |alpha|<|beta|, or degrees tie
/// and alpha is lexicographically smaller at the first differing coordinate.
inline bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw DimensionError("grlex_less: length mismatch");
    long da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

/// All alpha in Z_+^m with |alpha| = d, in grlex-ascending order.
std::vector<MultiIndex> compositions_of_degree(std::size_t m, long d);

}  // namespace gvmlab
