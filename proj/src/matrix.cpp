#include "gvmlab/matrix.hpp"

namespace gvmlab {

void RationalMatrix::append_rows(const RationalMatrix& other) {
    if (other.cols_ != cols_)
        throw DimensionError("append_rows: column mismatch");
    a_.insert(a_.end(), other.a_.begin(), other.a_.end());
    rows_ += other.rows_;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_)
        throw DimensionError("apply: size mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!a_[r][c].is_zero())
                y[r] += a_[r][c] * x[c];
    return y;
}

Rref row_reduce(RationalMatrix m) {
    Rref out{m, {}, {}};
    RationalMatrix& a = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pr = row;
        while (pr < a.rows() && a.at(pr, col).is_zero())
            ++pr;
        if (pr == a.rows()) {
            out.free_cols.push_back(col);
            continue;
        }
        if (pr != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(pr, c), a.at(row, c));
        Rational inv = a.at(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c)
            a.at(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero())
                continue;
            Rational f = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= f * a.at(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t col = out.pivot_cols.empty() ? 0 : out.pivot_cols.back() + 1;
         col < a.cols(); ++col)
        if (out.free_cols.empty() || out.free_cols.back() < col)
            out.free_cols.push_back(col);
    return out;
}

std::vector<std::vector<Rational>> rational_nullspace(const RationalMatrix& m) {
    Rref rr = row_reduce(m);
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f : rr.free_cols) {
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p)
            v[rr.pivot_cols[p]] = -rr.reduced.at(p, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rational_rank(const RationalMatrix& m) {
    return row_reduce(m).rank();
}

}  // namespace gvmlab
