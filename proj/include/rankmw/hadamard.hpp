#pragma once

#include "macwilliams.hpp"

namespace rankmw {

inline constexpr std::uint64_t kDefaultHadamardGuard = std::uint64_t(1) << 20;

/// Element of Z[zeta] with zeta a primitive q-th root of unity, q prime.
/// Reduced representation on the basis {1, zeta, ..., zeta^{q-2}} using
/// 1 + zeta + ... + zeta^{q-1} = 0. For q = 2 this is just Z with zeta = -1.
class CyclotomicInt {
  public:
    explicit CyclotomicInt(unsigned q) : q_(check_q(q)), c_(q - 1, 0) {}

    static CyclotomicInt integer(unsigned q, BigInt v) {
        CyclotomicInt r(q);
        r.c_[0] = std::move(v);
        return r;
    }

    /// zeta^e (e reduced mod q).
    static CyclotomicInt zeta_pow(unsigned q, std::uint64_t e) {
        CyclotomicInt r(q);
        e %= q;
        if (e < q - 1) {
            r.c_[e] = 1;
        } else {
            for (auto& v : r.c_) v = -1;
        }
        return r;
    }

    unsigned q() const { return q_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    CyclotomicInt& operator+=(const CyclotomicInt& o) {
        check(o);
        for (unsigned i = 0; i < q_ - 1; ++i) c_[i] += o.c_[i];
        return *this;
    }
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }

    CyclotomicInt& operator-=(const CyclotomicInt& o) {
        check(o);
        for (unsigned i = 0; i < q_ - 1; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }

    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
        a.check(b);
        const unsigned q = a.q_;
        std::vector<BigInt> t(q, 0);  // exponents 0..q-1, zeta^q = 1
        for (unsigned i = 0; i < q - 1; ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned j = 0; j < q - 1; ++j) t[(i + j) % q] += a.c_[i] * b.c_[j];
        }
        CyclotomicInt r(q);
        for (unsigned i = 0; i < q - 1; ++i) r.c_[i] = t[i] - t[q - 1];
        return r;
    }

    friend CyclotomicInt operator*(const BigInt& s, CyclotomicInt a) {
        for (auto& v : a.c_) v *= s;
        return a;
    }

    bool operator==(const CyclotomicInt& o) const { return q_ == o.q_ && c_ == o.c_; }

    bool is_rational_integer() const {
        for (unsigned i = 1; i < q_ - 1; ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    BigInt rational_value() const {
        if (!is_rational_integer())
            throw std::domain_error("cyclotomic value is not a rational integer");
        return c_[0];
    }

  private:
    static unsigned check_q(unsigned q) {
        if (!detail::is_prime_u32(q)) throw std::invalid_argument("CyclotomicInt: q must be prime");
        return q;
    }
    void check(const CyclotomicInt& o) const {
        if (q_ != o.q_) throw std::invalid_argument("CyclotomicInt: mixed q");
    }

    unsigned q_;
    std::vector<BigInt> c_;  // c_[j] * zeta^j
};

/// Homogeneous polynomial with cyclotomic coefficients.
struct CycPoly {
    unsigned q;
    std::vector<CyclotomicInt> coeffs;  // index = power of y

    unsigned degree() const { return static_cast<unsigned>(coeffs.size() - 1); }
};

/// Collapse to an integer polynomial; every Hadamard transform of a weight
/// function must land in Z, so a non-integer coefficient is a bug signal.
inline HomPoly collapse_to_integer_poly(const CycPoly& p) {
    std::vector<BigInt> c(p.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs[i].rational_value();
    return HomPoly(std::move(c));
}

/// chi(a) = zeta^{a_0} with a_0 the first coordinate of a in the basis
/// {1, alpha_1, ..., alpha_{m-1}}. Only defined here for prime q (s = 1):
/// for q = p^s the exponent would not canonically be an integer.
inline CyclotomicInt chi(const FieldTower& t, std::uint32_t a) {
    if (t.s() != 1)
        throw std::invalid_argument("chi: requires a prime q tower (s = 1)");
    return CyclotomicInt::zeta_pow(t.q(), a % t.q());
}

/// Weight enumerator of the full space GF(q^m)^n under the chosen metric.
inline HomPoly full_space_enumerator(const QContext& ctx, unsigned m, unsigned n, Metric metric) {
    if (metric == Metric::rank) return eval_param(a_poly(ctx, n), m);
    return hamming_full_space(ctx, m, n);
}

/// Brute-force Hadamard transform of the weight function at v:
///   f_hat(v) = sum_{u in GF(q^m)^n} chi(u . v) y^{w(u)} x^{n-w(u)},
/// accumulated per weight bucket over all q^{mn} vectors.
inline CycPoly hadamard_bruteforce(const FieldTower& t, Metric metric,
                                   std::span<const std::uint32_t> v,
                                   std::uint64_t guard = kDefaultHadamardGuard) {
    if (t.s() != 1)
        throw std::invalid_argument("hadamard_bruteforce: requires a prime q tower (s = 1)");
    const unsigned n = static_cast<unsigned>(v.size());
    const unsigned q = t.q();
    BigInt space = pow_int(BigInt(t.q_to_m()), n);
    if (space > guard)
        throw guard_error("hadamard enumeration of " + space.str() + " vectors exceeds guard " +
                          std::to_string(guard));
    const std::uint64_t total = space.convert_to<std::uint64_t>();
    const std::uint64_t B = t.q_to_m();

    // counts[w][e]: how many u of weight w have chi-exponent e
    std::vector<std::vector<std::uint64_t>> counts(n + 1, std::vector<std::uint64_t>(q, 0));
    std::vector<std::uint32_t> u(n, 0);
    for (std::uint64_t idx = 0;; ++idx) {
        std::uint32_t d = 0;
        for (unsigned i = 0; i < n; ++i) d = t.add(d, t.ext_mul(u[i], v[i]));
        const int w = metric == Metric::hamming ? hamming_weight(u) : rank_norm(t, u);
        ++counts[w][d % q];
        if (idx + 1 >= total) break;
        unsigned c = 0;
        while (u[c] == B - 1) u[c++] = 0;
        ++u[c];
    }

    CycPoly out{q, {}};
    out.coeffs.reserve(n + 1);
    for (unsigned w = 0; w <= n; ++w) {
        CyclotomicInt acc(q);
        for (unsigned e = 0; e < q; ++e)
            if (counts[w][e]) acc += BigInt(counts[w][e]) * CyclotomicInt::zeta_pow(q, e);
        // any weight with w(lambda u) = w(u) sums full zeta-orbits, so each
        // coefficient must already be a rational integer
        if (!acc.is_rational_integer())
            throw std::domain_error("hadamard_bruteforce: non-integer coefficient");
        out.coeffs.push_back(acc);
    }
    return out;
}

/// Closed form for the rank weight function, f_hat_R(v) = b_r * a_{n-r} at m
/// with r = rk(v).
inline bool check_rank_hat(const FieldTower& t, std::span<const std::uint32_t> v,
                           std::uint64_t guard = kDefaultHadamardGuard) {
    const QContext ctx(t.q());
    const unsigned n = static_cast<unsigned>(v.size());
    const unsigned r = static_cast<unsigned>(rank_norm(t, v));
    HomPoly brute = collapse_to_integer_poly(hadamard_bruteforce(t, Metric::rank, v, guard));
    HomPoly closed = eval_param(q_product(b_poly(ctx, r), a_poly(ctx, n - r)), t.m());
    return brute == closed;
}

/// Closed form for the Hamming weight function,
/// f_hat_H(v) = (x-y)^r (x+(q^m-1)y)^{n-r} with r = w_H(v).
inline bool check_hamming_hat(const FieldTower& t, std::span<const std::uint32_t> v,
                              std::uint64_t guard = kDefaultHadamardGuard) {
    const QContext ctx(t.q());
    const unsigned n = static_cast<unsigned>(v.size());
    const unsigned r = static_cast<unsigned>(hamming_weight(v));
    HomPoly brute = collapse_to_integer_poly(hadamard_bruteforce(t, Metric::hamming, v, guard));
    HomPoly xmy(1);
    xmy[0] = 1;
    xmy[1] = -1;
    HomPoly closed = ordinary_mul(ordinary_pow(xmy, r), hamming_full_space(ctx, t.m(), n - r));
    return brute == closed;
}

/// The dual-of-a-vector lemma: the enumerator of <v>^perp equals
/// q^{-m} [ W_F + (q^m - 1) f_hat_w(v) ] for any weight with w(lambda u) = w(u).
inline bool check_dual_vector_lemma(TowerPtr tower, Metric metric,
                                    std::span<const std::uint32_t> v,
                                    std::uint64_t guard = kDefaultHadamardGuard) {
    const FieldTower& t = *tower;
    const QContext ctx(t.q());
    const unsigned n = static_cast<unsigned>(v.size());
    const BigInt qm = ctx.pow(t.m());

    bool zero = true;
    for (auto x : v) zero = zero && x == 0;
    Matrix gen(ext_view(t), zero ? 0 : 1, n);
    if (!zero)
        for (unsigned j = 0; j < n; ++j) gen(0, j) = v[j];
    LinearCode span_v(tower, std::move(gen));
    HomPoly lhs = weight_enumerator(dual_code(span_v), metric, guard).poly;

    HomPoly w_f = full_space_enumerator(ctx, t.m(), n, metric);
    HomPoly hat = collapse_to_integer_poly(hadamard_bruteforce(t, metric, v, guard));
    HomPoly rhs = div_exact(w_f + (qm - 1) * hat, qm, "check_dual_vector_lemma");
    return lhs == rhs;
}

}  // namespace rankmw
