#pragma once

#include "common.hpp"

namespace rankmw {

/// q-analog combinatorics at a fixed prime power q. Everything is exact:
/// products of arbitrary-precision integers, division only where it is
/// guaranteed to be exact.
struct QContext {
    unsigned q;

    explicit QContext(unsigned q_) : q(q_) {
        if (q < 2) throw std::invalid_argument("QContext: q must be >= 2");
    }

    /// q^e for e >= 0.
    BigInt pow(unsigned long long e) const { return pow_int(BigInt(q), e); }
};

/// sigma_i = i(i-1)/2.
inline long long sigma(long long i) {
    if (i < 0) throw std::invalid_argument("sigma: negative index");
    return i * (i - 1) / 2;
}

/// alpha(m,u) = prod_{i=0}^{u-1} (q^m - q^i); alpha(m,0) = 1.
/// Negative m yields 0 by convention: shifted arguments inside q-products may
/// reach m < 0, always multiplied there by a vanishing partner coefficient.
inline BigInt alpha(const QContext& ctx, long long m, long long u) {
    if (u < 0) throw std::invalid_argument("alpha: negative u");
    if (m < 0) return 0;
    BigInt qm = ctx.pow(static_cast<unsigned long long>(m));
    BigInt r = 1;
    BigInt qi = 1;
    for (long long i = 0; i < u; ++i) {
        r *= qm - qi;
        qi *= ctx.q;
    }
    return r;
}

/// Gaussian binomial [n u]_q = alpha(n,u) / alpha(u,u); 0 outside 0 <= u <= n.
/// Counts the u-dimensional subspaces of GF(q)^n.
inline BigInt gaussian(const QContext& ctx, long long n, long long u) {
    if (u < 0 || u > n) return 0;
    return div_exact(alpha(ctx, n, u), alpha(ctx, u, u), "gaussian");
}

/// beta(m,u) = prod_{i=0}^{u-1} [m-i 1]_q, defined for 0 <= u <= m.
inline BigInt beta(const QContext& ctx, long long m, long long u) {
    if (u < 0 || u > m) throw std::invalid_argument("beta: requires 0 <= u <= m");
    BigInt r = 1;
    for (long long i = 0; i < u; ++i) r *= gaussian(ctx, m - i, 1);
    return r;
}

/// N_u(q^m, n): number of vectors of rank u in GF(q^m)^n, 0 <= u <= min(m,n).
inline BigInt num_rank_u(const QContext& ctx, long long m, long long n, long long u) {
    if (u < 0 || u > m || u > n) throw std::invalid_argument("num_rank_u: u out of range");
    return gaussian(ctx, n, u) * alpha(ctx, m, u);
}

}  // namespace rankmw
