#pragma once

#include "gfq.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace rankmw {

/// Dense matrix over one layer of a field tower, entries stored as codes.
class Matrix {
  public:
    Matrix(FieldView f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static Matrix identity(FieldView f, std::size_t n) {
        Matrix I(f, n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
        return I;
    }

    FieldView field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    std::uint32_t& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    std::span<const std::uint32_t> row(std::size_t r) const {
        return {e_.data() + r * cols_, cols_};
    }
    std::span<std::uint32_t> row(std::size_t r) { return {e_.data() + r * cols_, cols_}; }

    bool operator==(const Matrix& o) const {
        return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

  private:
    FieldView f_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> e_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan with first-nonzero pivoting (deterministic; the field is exact).
inline RrefResult rref(const Matrix& M) {
    RrefResult out{M, 0, {}};
    Matrix& R = out.reduced;
    const FieldView f = M.field();
    for (std::size_t col = 0; col < M.cols() && out.rank < M.rows(); ++col) {
        std::size_t piv = out.rank;
        while (piv < M.rows() && R(piv, col) == 0) ++piv;
        if (piv == M.rows()) continue;
        if (piv != out.rank)
            for (std::size_t c = 0; c < M.cols(); ++c) std::swap(R(piv, c), R(out.rank, c));
        const std::uint32_t pinv = f.inv(R(out.rank, col));
        for (std::size_t c = col; c < M.cols(); ++c) R(out.rank, c) = f.mul(pinv, R(out.rank, c));
        for (std::size_t r = 0; r < M.rows(); ++r) {
            if (r == out.rank || R(r, col) == 0) continue;
            const std::uint32_t factor = R(r, col);
            for (std::size_t c = col; c < M.cols(); ++c)
                R(r, c) = f.sub(R(r, c), f.mul(factor, R(out.rank, c)));
        }
        out.pivot_cols.push_back(col);
        ++out.rank;
    }
    return out;
}

inline std::size_t rank(const Matrix& M) { return rref(M).rank; }

/// Basis of the right kernel {v : M v^T = 0}, one vector per row; the row
/// count is cols - rank(M). Free columns are processed in increasing order.
inline Matrix null_space(const Matrix& M) {
    const FieldView f = M.field();
    RrefResult r = rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    Matrix out(f, M.cols() - r.rank, M.cols());
    std::size_t row = 0;
    for (std::size_t free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        out(row, free) = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            out(row, r.pivot_cols[i]) = f.neg(r.reduced(i, free));
        ++row;
    }
    return out;
}

inline Matrix transpose(const Matrix& M) {
    Matrix T(M.field(), M.cols(), M.rows());
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) T(c, r) = M(r, c);
    return T;
}

inline Matrix matmul(const Matrix& A, const Matrix& B) {
    if (!(A.field() == B.field()) || A.cols() != B.rows())
        throw std::invalid_argument("matmul: incompatible operands");
    const FieldView f = A.field();
    Matrix C(f, A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const std::uint32_t a = A(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C(i, j) = f.add(C(i, j), f.mul(a, B(k, j)));
        }
    return C;
}

inline bool same_row_space(const Matrix& A, const Matrix& B) {
    if (!(A.field() == B.field()) || A.cols() != B.cols()) return false;
    RrefResult ra = rref(A), rb = rref(B);
    if (ra.rank != rb.rank) return false;
    for (std::size_t r = 0; r < ra.rank; ++r)
        for (std::size_t c = 0; c < A.cols(); ++c)
            if (ra.reduced(r, c) != rb.reduced(r, c)) return false;
    return true;
}

inline std::uint32_t dot(FieldView f, std::span<const std::uint32_t> a,
                         std::span<const std::uint32_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r = f.add(r, f.mul(a[i], b[i]));
    return r;
}

/// m x n expansion matrix over GF(q): column j holds the GF(q)-coordinates
/// of v_j.
inline Matrix expand_vector(const FieldTower& t, std::span<const std::uint32_t> v) {
    Matrix X(base_view(t), t.m(), v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        std::uint32_t a = v[j];
        for (unsigned i = 0; i < t.m(); ++i) {
            X(i, j) = a % t.q();
            a /= t.q();
        }
    }
    return X;
}

inline int hamming_weight(std::span<const std::uint32_t> v) {
    int w = 0;
    for (auto x : v) w += (x != 0);
    return w;
}

/// Rank norm by incremental insertion of the coordinates into a GF(q)-basis
/// of GF(q^m). Each basis slot is keyed by its leading base-q digit and
/// normalized so that digit is 1. This is the fast path used by the
/// enumeration kernels, so it stays allocation-free (m <= 24 under the
/// tower size guard).
inline int rank_norm(const FieldTower& t, std::span<const std::uint32_t> v) {
    const std::uint32_t q = t.q();
    std::uint32_t basis[24] = {};
    std::uint32_t qpow[24];
    qpow[0] = 1;
    for (unsigned i = 1; i < t.m(); ++i) qpow[i] = qpow[i - 1] * q;
    int r = 0;
    for (std::uint32_t x : v) {
        while (x != 0) {
            unsigned d = t.m() - 1;
            while (x / qpow[d] % q == 0) --d;
            const std::uint32_t lead = x / qpow[d] % q;
            if (basis[d] != 0) {
                x = t.sub(x, t.ext_mul(t.embed(lead), basis[d]));
            } else {
                basis[d] = t.ext_mul(t.embed(t.base_inv(lead)), x);
                ++r;
                break;
            }
        }
    }
    return r;
}

/// Rank norm as the rank of the expansion matrix (the definitional route,
/// kept as an independent oracle for rank_norm).
inline int rank_norm_expansion(const FieldTower& t, std::span<const std::uint32_t> v) {
    return static_cast<int>(rank(expand_vector(t, v)));
}

}  // namespace rankmw
