#pragma once

#include "gvmlab/rational.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gvmlab {

/// Basis element of sl(m+1): off-diagonal E_{k,l} (k != l, 1-based in 1..m+1) or a
/// traceless Cartan difference E_{i,i} - E_{j,j} (usually j = m+1).
struct SlGenerator {
    enum class Kind { OffDiagonal, CartanDiff };
    Kind kind = Kind::OffDiagonal;
    std::size_t i = 0, j = 0;

    static SlGenerator off_diagonal(std::size_t k, std::size_t l) {
        if (k == l)
            throw DomainError("SlGenerator: off-diagonal needs k != l");
        return SlGenerator{Kind::OffDiagonal, k, l};
    }
    static SlGenerator cartan(std::size_t i, std::size_t j) {
        if (i == j)
            throw DomainError("SlGenerator: Cartan difference needs i != j");
        return SlGenerator{Kind::CartanDiff, i, j};
    }

    std::string str() const {
        if (kind == Kind::OffDiagonal)
            return "E(" + std::to_string(i) + "," + std::to_string(j) + ")";
        return "H(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }

    friend bool operator==(const SlGenerator& a, const SlGenerator& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const SlGenerator& a, const SlGenerator& b) {
        return std::tuple{static_cast<int>(a.kind), a.i, a.j} <
               std::tuple{static_cast<int>(b.kind), b.i, b.j};
    }
};

/// The standard basis of sl(m+1): all E_{k,l}, k != l, then H_i = E_{i,i}-E_{m+1,m+1}.
std::vector<SlGenerator> sl_basis(std::size_t m);

/// Simple raising operators E_{1,2},...,E_{m-1,m},E_{m,m+1}; they generate the
/// whole raising algebra, so annihilation by them certifies a highest weight vector.
std::vector<SlGenerator> sl_simple_raising(std::size_t m);

/// Bracket expanded over the basis {E_{k,l}} + {H_i}; m fixes which index is m+1.
std::vector<std::pair<Rational, SlGenerator>> sl_bracket(std::size_t m, const SlGenerator& x,
                                                         const SlGenerator& y);

}  // namespace gvmlab
