#pragma once

#include "gvmlab/rational.hpp"

#include <vector>

namespace gvmlab {

/// Dense exact-rational matrix with deterministic elimination. Weight spaces at
/// desk scale are tiny, so no sparsity tricks.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return a_.at(r).at(c); }
    const Rational& at(std::size_t r, std::size_t c) const { return a_.at(r).at(c); }

    /// Stack other below this (column counts must match).
    void append_rows(const RationalMatrix& other);

    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Rational>> a_;
};

/// Row-reduced echelon data. Pivot rule: scanning columns left to right, take the
/// first row (top to bottom) with a nonzero entry; deterministic by construction.
struct Rref {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_cols;  // ascending
    std::vector<std::size_t> free_cols;   // ascending
    std::size_t rank() const { return pivot_cols.size(); }
};

Rref row_reduce(RationalMatrix m);

/// Exact basis of {x : Mx = 0}; one vector per free column, each with a 1 in its
/// free coordinate. Deterministic given the pivot rule. dim = cols - rank.
std::vector<std::vector<Rational>> rational_nullspace(const RationalMatrix& m);

std::size_t rational_rank(const RationalMatrix& m);

}  // namespace gvmlab
