#pragma once

#include "codes.hpp"

#include <utility>

namespace rankmw {

struct CodeParams {
    unsigned q, m, n, k;

    CodeParams(unsigned q_, unsigned m_, unsigned n_, unsigned k_) : q(q_), m(m_), n(n_), k(k_) {
        if (q < 2 || m < 1) throw std::invalid_argument("CodeParams: need q >= 2, m >= 1");
        if (k > n) throw std::invalid_argument("CodeParams: need 0 <= k <= n");
        unsigned v = q;
        unsigned p = 2;
        while (v % p != 0) ++p;
        while (v % p == 0) v /= p;
        if (v != 1) throw std::invalid_argument("CodeParams: q must be a prime power");
    }

    QContext ctx() const { return QContext(q); }
    BigInt code_size() const { return QContext(q).pow(static_cast<unsigned long long>(m) * k); }
};

inline void validate_enumerator(const HomPoly& A, const CodeParams& p) {
    if (A.degree() != p.n) throw std::invalid_argument("enumerator degree differs from n");
    if (A[0] != 1) throw std::invalid_argument("enumerator: coefficient of x^n must be 1");
    if (A.sum() != p.code_size())
        throw std::invalid_argument("enumerator: coefficients must sum to q^{mk}");
}

/// Rank-metric MacWilliams transform (Theorem form): the dual enumerator is
///   B(x,y) = |C|^{-1} sum_i A_i  b_i(x,y;m) * a_{n-i}(x,y;m)
/// with all q-products evaluated at m. Every division is exact; a remainder
/// means the input was not a valid rank enumerator.
inline HomPoly rank_macwilliams(const HomPoly& A, const CodeParams& p, bool validate = true) {
    if (validate) validate_enumerator(A, p);
    if (A.degree() != p.n) throw std::invalid_argument("enumerator degree differs from n");
    const QContext ctx = p.ctx();
    HomPoly acc(p.n);
    for (unsigned i = 0; i <= p.n; ++i) {
        if (A[i] == 0) continue;
        acc += A[i] * eval_param(q_product(b_poly(ctx, i), a_poly(ctx, p.n - i)), p.m);
    }
    return div_exact(acc, p.code_size(), "rank_macwilliams");
}

/// P_j(i; m, n), the rank-metric analog of the Krawtchouk kernel:
///   sum_l [i l][n-i j-l] (-1)^l q^{sigma_l + l(n-i)} alpha(m-l, j-l).
inline BigInt rank_macwilliams_kernel(const QContext& ctx, long long j, long long i, long long m,
                                      long long n) {
    if (i < 0 || i > n || j < 0 || j > n)
        throw std::invalid_argument("rank_macwilliams_kernel: index out of range");
    BigInt acc = 0;
    for (long long l = 0; l <= j; ++l) {
        BigInt term = gaussian(ctx, i, l) * gaussian(ctx, n - i, j - l) *
                      ctx.pow(static_cast<unsigned long long>(sigma(l) + l * (n - i))) *
                      alpha(ctx, m - l, j - l);
        acc += (l % 2) ? -term : term;
    }
    return acc;
}

/// Second, independent route to the dual enumerator via the explicit kernel:
/// B_j = |C|^{-1} sum_i A_i P_j(i; m, n). Kept alongside the Theorem form so
/// each can check the other.
inline HomPoly rank_macwilliams_via_kernel(const HomPoly& A, const CodeParams& p) {
    if (A.degree() != p.n) throw std::invalid_argument("enumerator degree differs from n");
    const QContext ctx = p.ctx();
    const BigInt size = p.code_size();
    HomPoly B(p.n);
    for (unsigned j = 0; j <= p.n; ++j) {
        BigInt acc = 0;
        for (unsigned i = 0; i <= p.n; ++i) {
            if (A[i] == 0) continue;
            acc += A[i] * rank_macwilliams_kernel(ctx, j, i, p.m, p.n);
        }
        B[j] = div_exact(acc, size, "rank_macwilliams_via_kernel");
    }
    return B;
}

/// Hamming-metric MacWilliams transform:
///   B(x,y) = |C|^{-1} A(x + (q^m-1) y, x - y)     (ordinary substitution).
inline HomPoly hamming_macwilliams(const HomPoly& A, const CodeParams& p) {
    if (A.degree() != p.n) throw std::invalid_argument("enumerator degree differs from n");
    const QContext ctx = p.ctx();
    HomPoly xy(1);  // x + (q^m-1) y
    xy[0] = 1;
    xy[1] = ctx.pow(p.m) - 1;
    HomPoly xmy(1);  // x - y
    xmy[0] = 1;
    xmy[1] = -1;
    HomPoly acc(p.n);
    for (unsigned i = 0; i <= p.n; ++i) {
        if (A[i] == 0) continue;
        acc += A[i] * ordinary_mul(ordinary_pow(xmy, i), ordinary_pow(xy, p.n - i));
    }
    return div_exact(acc, p.code_size(), "hamming_macwilliams");
}

/// Both sides of the moment identity for a code and its dual:
///   lhs = sum_{i<=n-nu} [n-i nu] A_i,
///   rhs = q^{m(k-nu)} sum_{j<=nu} [n-j n-nu] B_j.
/// For nu > k the prefactor is a negative power of q, so both sides are
/// computed (and should be compared) as exact rationals.
inline std::pair<BigRat, BigRat> rank_moment_sides(const HomPoly& A, const HomPoly& B,
                                                   const CodeParams& p, unsigned nu) {
    if (nu > p.n) throw std::invalid_argument("rank_moment_sides: nu out of range");
    if (A.degree() != p.n || B.degree() != p.n)
        throw std::invalid_argument("rank_moment_sides: degree mismatch");
    const QContext ctx = p.ctx();
    BigInt lhs = 0;
    for (unsigned i = 0; i + nu <= p.n; ++i) lhs += gaussian(ctx, p.n - i, nu) * A[i];
    BigInt rhs_sum = 0;
    for (unsigned j = 0; j <= nu; ++j) rhs_sum += gaussian(ctx, p.n - j, p.n - nu) * B[j];
    BigRat scale;
    if (p.k >= nu)
        scale = ctx.pow(static_cast<unsigned long long>(p.m) * (p.k - nu));
    else
        scale = BigRat(1, ctx.pow(static_cast<unsigned long long>(p.m) * (nu - p.k)));
    return {BigRat(lhs), scale * BigRat(rhs_sum)};
}

/// Simplified moment for nu below the dual minimum rank distance:
///   rhs collapses to q^{m(k-nu)} [n nu].
inline std::pair<BigRat, BigRat> binomial_moment(const HomPoly& A, const CodeParams& p,
                                                 unsigned nu, unsigned dual_min_dist) {
    if (nu >= dual_min_dist)
        throw std::invalid_argument("binomial_moment: requires nu < d_R of the dual");
    if (A.degree() != p.n) throw std::invalid_argument("binomial_moment: degree mismatch");
    const QContext ctx = p.ctx();
    BigInt lhs = 0;
    for (unsigned i = 0; i + nu <= p.n; ++i) lhs += gaussian(ctx, p.n - i, nu) * A[i];
    BigRat scale;
    if (p.k >= nu)
        scale = ctx.pow(static_cast<unsigned long long>(p.m) * (p.k - nu));
    else
        scale = BigRat(1, ctx.pow(static_cast<unsigned long long>(p.m) * (nu - p.k)));
    return {BigRat(lhs), scale * BigRat(gaussian(ctx, p.n, nu))};
}

/// Forward Gaussian-binomial transform: a_j = sum_{i<=j} [l-i l-j] b_i.
inline std::vector<BigInt> gaussian_forward(const QContext& ctx, std::span<const BigInt> b) {
    const long long l = static_cast<long long>(b.size()) - 1;
    std::vector<BigInt> a(b.size());
    for (long long j = 0; j <= l; ++j)
        for (long long i = 0; i <= j; ++i) a[j] += gaussian(ctx, l - i, l - j) * b[i];
    return a;
}

/// Inverse of gaussian_forward:
///   b_i = sum_{j<=i} (-1)^{i-j} q^{sigma_{i-j}} [l-j l-i] a_j.
inline std::vector<BigInt> gaussian_inverse(const QContext& ctx, std::span<const BigInt> a) {
    const long long l = static_cast<long long>(a.size()) - 1;
    std::vector<BigInt> b(a.size());
    for (long long i = 0; i <= l; ++i) {
        for (long long j = 0; j <= i; ++j) {
            BigInt term = ctx.pow(static_cast<unsigned long long>(sigma(i - j))) *
                          gaussian(ctx, l - j, l - i) * a[j];
            b[i] += ((i - j) % 2) ? -term : term;
        }
    }
    return b;
}

/// Rank distribution of an (n, k, d) MRD code over GF(q^m), n <= m:
///   A_0 = 1,  A_{d+i} = [n d+i] sum_{j<=i} (-1)^{i-j} q^{sigma_{i-j}}
///                        [d+i d+j] (q^{m(j+1)} - 1)        for 0 <= i <= n-d,
/// all other coefficients zero.
inline WeightEnumerator mrd_rank_distribution(const CodeParams& p, unsigned d) {
    if (p.n > p.m) throw std::invalid_argument("mrd_rank_distribution: requires n <= m");
    if (d != p.n - p.k + 1)
        throw std::invalid_argument("mrd_rank_distribution: d must equal n - k + 1");
    const QContext ctx = p.ctx();
    HomPoly A(p.n);
    A[0] = 1;
    for (long long i = 0; i + d <= p.n; ++i) {
        BigInt acc = 0;
        for (long long j = 0; j <= i; ++j) {
            BigInt term = ctx.pow(static_cast<unsigned long long>(sigma(i - j))) *
                          gaussian(ctx, d + i, d + j) *
                          (ctx.pow(static_cast<unsigned long long>(p.m) * (j + 1)) - 1);
            acc += ((i - j) % 2) ? -term : term;
        }
        A[static_cast<unsigned>(d + i)] = gaussian(ctx, p.n, d + i) * acc;
    }
    return {Metric::rank, std::move(A)};
}

}  // namespace rankmw
