#pragma once

#include "common.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace rankmw {

/// Largest supported tower: p^(s*m) <= 2^24.
inline constexpr std::uint64_t kMaxTowerSize = std::uint64_t(1) << 24;
/// Log/antilog multiplication tables are built for layers up to this size.
inline constexpr std::uint64_t kMulTableLimit = std::uint64_t(1) << 16;

enum class Layer { base, ext };  // base = GF(q), ext = GF(q^m)

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials, coefficients low-degree-first, over a field whose
// arithmetic is supplied by Ops { add, sub, mul }. Construction-time only.
template <class Ops>
std::vector<std::uint32_t> poly_trim(std::vector<std::uint32_t> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

template <class Ops>
std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b, const Ops& f) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    }
    return poly_trim<Ops>(std::move(c));
}

// Remainder of a by a *monic* divisor.
template <class Ops>
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& monic, const Ops& f) {
    const std::size_t d = monic.size() - 1;
    while (a.size() > d) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - d;
        if (lead != 0)
            for (std::size_t i = 0; i < d; ++i)
                a[shift + i] = f.sub(a[shift + i], f.mul(lead, monic[i]));
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
template <class Ops>
bool poly_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t field_size,
                      const Ops& f) {
    const std::size_t d = monic.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    for (std::size_t e = 1; 2 * e <= d; ++e) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < e; ++i) count *= field_size;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> div(e + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < e; ++i) {
                div[i] = static_cast<std::uint32_t>(c % field_size);
                c /= field_size;
            }
            div[e] = 1;
            if (poly_rem<Ops>(monic, div, f).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// The tower GF(p) <= GF(q = p^s) <= GF(q^m), all elements stored as integer
/// codes. A code < q^m reads as m base-q digits (the coordinates over GF(q)
/// in the polynomial basis {1, z, ..., z^{m-1}} of GF(q)[z]/(modulus_qm)),
/// and each base-q digit in turn reads as s base-p digits (coordinates over
/// GF(p)). Addition is therefore carry-free base-p digit addition for both
/// layers at once, and expanding an element into GF(q)-coordinates is just
/// base-q digit extraction.
///
/// Multiplication uses log/antilog tables when the layer is small enough,
/// falling back to polynomial multiplication modulo the layer modulus.
class FieldTower {
  public:
    struct Spec {
        unsigned p = 2;
        unsigned s = 1;
        unsigned m = 1;
        /// degree-s monic irreducible over GF(p), low-degree-first, entries in [0,p)
        std::optional<std::vector<std::uint32_t>> modulus_q;
        /// degree-m monic irreducible over GF(q), low-degree-first, GF(q) codes
        std::optional<std::vector<std::uint32_t>> modulus_qm;
        /// code of a generator of GF(q^m)^*
        std::optional<std::uint32_t> primitive_qm;
    };

    static TowerPtr make(unsigned p, unsigned s, unsigned m) {
        Spec spec;
        spec.p = p;
        spec.s = s;
        spec.m = m;
        return make(spec);
    }

    static TowerPtr make(const Spec& spec);

    unsigned p() const { return p_; }
    unsigned s() const { return s_; }
    unsigned m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t q_to_m() const { return qm_; }
    const std::vector<std::uint32_t>& modulus_q() const { return modulus_q_; }
    const std::vector<std::uint32_t>& modulus_qm() const { return modulus_qm_; }
    std::uint32_t primitive_qm() const { return primitive_qm_; }

    std::uint32_t layer_size(Layer l) const { return l == Layer::base ? q_ : qm_; }

    // ---- addition: valid for codes of either layer ----
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        std::uint32_t r = 0, w = 1;
        while (a || b) {
            r += (a % p_ + b % p_) % p_ * w;
            a /= p_;
            b /= p_;
            w *= p_;
        }
        return r;
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (p_ == 2) return a;
        std::uint32_t r = 0, w = 1;
        while (a) {
            std::uint32_t d = a % p_;
            r += (d ? p_ - d : 0) * w;
            a /= p_;
            w *= p_;
        }
        return r;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    // ---- GF(q) layer ----
    std::uint32_t base_mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (!base_exp_.empty()) return base_exp_[base_log_[a] + base_log_[b]];
        return base_mul_slow(a, b);
    }

    std::uint32_t base_inv(std::uint32_t a) const {
        if (a == 0) throw std::invalid_argument("inversion of zero");
        if (!base_exp_.empty()) return base_exp_[q_ - 1 - base_log_[a]];
        return base_pow(a, q_ - 2);
    }

    std::uint32_t base_pow(std::uint32_t a, long long e) const {
        return pow_in_layer(Layer::base, a, e);
    }

    // ---- GF(q^m) layer ----
    std::uint32_t ext_mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (!ext_exp_.empty()) return ext_exp_[ext_log_[a] + ext_log_[b]];
        return ext_mul_slow(a, b);
    }

    std::uint32_t ext_inv(std::uint32_t a) const {
        if (a == 0) throw std::invalid_argument("inversion of zero");
        if (!ext_exp_.empty()) return ext_exp_[qm_ - 1 - ext_log_[a]];
        return ext_pow(a, static_cast<long long>(qm_) - 2);
    }

    std::uint32_t ext_pow(std::uint32_t a, long long e) const {
        return pow_in_layer(Layer::ext, a, e);
    }

    /// a^(q^j); the identity on the subfield GF(q). j is reduced mod m since
    /// the Frobenius has order m.
    std::uint32_t frobenius(std::uint32_t a, unsigned j) const {
        if (a == 0) return 0;
        j %= m_;
        std::uint64_t e = 1;
        for (unsigned i = 0; i < j; ++i) e *= q_;
        return ext_pow(a, static_cast<long long>(e));
    }

    std::uint32_t mul(Layer l, std::uint32_t a, std::uint32_t b) const {
        return l == Layer::base ? base_mul(a, b) : ext_mul(a, b);
    }
    std::uint32_t inv(Layer l, std::uint32_t a) const {
        return l == Layer::base ? base_inv(a) : ext_inv(a);
    }

    /// GF(q) -> GF(q^m); the code is unchanged (digit 0 carries the subfield).
    std::uint32_t embed(std::uint32_t base_code) const { return base_code; }

    /// The m GF(q)-coordinates of an extension element (polynomial basis).
    std::vector<std::uint32_t> ext_coords(std::uint32_t a) const {
        std::vector<std::uint32_t> c(m_);
        for (unsigned i = 0; i < m_; ++i) {
            c[i] = a % q_;
            a /= q_;
        }
        return c;
    }

    std::uint32_t from_ext_coords(std::span<const std::uint32_t> c) const {
        if (c.size() != m_) throw std::invalid_argument("coordinate list must have length m");
        std::uint32_t a = 0;
        for (unsigned i = m_; i-- > 0;) {
            if (c[i] >= q_) throw std::invalid_argument("coordinate out of range");
            a = a * q_ + c[i];
        }
        return a;
    }

    /// The s*m GF(p)-coordinates of an extension element.
    std::vector<std::uint32_t> prime_coords(std::uint32_t a) const {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(s_) * m_);
        for (auto& d : c) {
            d = a % p_;
            a /= p_;
        }
        return c;
    }

    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

  private:
    FieldTower() = default;

    std::uint32_t pow_in_layer(Layer l, std::uint32_t a, long long e) const {
        const std::uint32_t size = layer_size(l);
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw std::invalid_argument("inversion of zero");
        }
        long long ord = static_cast<long long>(size) - 1;
        long long r = e % ord;
        if (r < 0) r += ord;
        std::uint32_t acc = 1, b = a;
        auto mu = [&](std::uint32_t x, std::uint32_t y) { return mul(l, x, y); };
        while (r) {
            if (r & 1) acc = mu(acc, b);
            b = mu(b, b);
            r >>= 1;
        }
        return acc;
    }

    std::uint32_t base_mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t ext_mul_slow(std::uint32_t a, std::uint32_t b) const;

    unsigned p_ = 2, s_ = 1, m_ = 1;
    std::uint32_t q_ = 2, qm_ = 2;
    std::vector<std::uint32_t> modulus_q_;   // length s+1, GF(p) digits
    std::vector<std::uint32_t> modulus_qm_;  // length m+1, GF(q) codes
    std::uint32_t primitive_qm_ = 1;
    std::vector<std::uint32_t> base_exp_, base_log_;  // exp doubled to skip the mod
    std::vector<std::uint32_t> ext_exp_, ext_log_;
};

/// A view of one layer of a tower, giving linear algebra a uniform field API.
struct FieldView {
    const FieldTower* tower = nullptr;
    Layer layer = Layer::ext;

    std::uint32_t size() const { return tower->layer_size(layer); }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return tower->add(a, b); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return tower->sub(a, b); }
    std::uint32_t neg(std::uint32_t a) const { return tower->neg(a); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return tower->mul(layer, a, b); }
    std::uint32_t inv(std::uint32_t a) const { return tower->inv(layer, a); }

    bool operator==(const FieldView& o) const { return tower == o.tower && layer == o.layer; }
};

inline FieldView base_view(const FieldTower& t) { return {&t, Layer::base}; }
inline FieldView ext_view(const FieldTower& t) { return {&t, Layer::ext}; }

// ---------------------------------------------------------------------------
// construction

namespace detail {

struct PrimeOps {
    std::uint32_t p;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
    }
};

template <class Ops>
std::vector<std::uint32_t> select_modulus(std::uint32_t field_size, unsigned degree,
                                          const Ops& f) {
    // Smallest monic irreducible of the given degree, candidates ordered by
    // their integer code (low coefficient = least significant digit).
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) count *= field_size;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> cand(degree + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < degree; ++i) {
            cand[i] = static_cast<std::uint32_t>(c % field_size);
            c /= field_size;
        }
        cand[degree] = 1;
        if (poly_irreducible(cand, field_size, f)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");  // cannot happen
}

inline std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace detail

inline std::uint32_t FieldTower::base_mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (s_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    detail::PrimeOps f{p_};
    std::vector<std::uint32_t> pa, pb;
    for (std::uint32_t x = a; x; x /= p_) pa.push_back(x % p_);
    for (std::uint32_t x = b; x; x /= p_) pb.push_back(x % p_);
    auto r = detail::poly_rem(detail::poly_mul(pa, pb, f), modulus_q_, f);
    std::uint32_t out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
}

inline std::uint32_t FieldTower::ext_mul_slow(std::uint32_t a, std::uint32_t b) const {
    struct BaseOps {
        const FieldTower* t;
        std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return t->add(x, y); }
        std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return t->sub(x, y); }
        std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return t->base_mul(x, y); }
    } f{this};
    std::vector<std::uint32_t> pa, pb;
    for (std::uint32_t x = a; x; x /= q_) pa.push_back(x % q_);
    for (std::uint32_t x = b; x; x /= q_) pb.push_back(x % q_);
    auto r = detail::poly_rem(detail::poly_mul(pa, pb, f), modulus_qm_, f);
    std::uint32_t out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * q_ + r[i];
    return out;
}

inline TowerPtr FieldTower::make(const Spec& spec) {
    if (!detail::is_prime_u32(spec.p)) throw std::invalid_argument("p must be prime");
    if (spec.s < 1 || spec.m < 1) throw std::invalid_argument("s and m must be positive");

    std::uint64_t size = 1;
    for (unsigned i = 0; i < static_cast<std::uint64_t>(spec.s) * spec.m; ++i) {
        size *= spec.p;
        if (size > kMaxTowerSize) throw std::invalid_argument("field size guard exceeded: p^(s*m) > 2^24");
    }

    auto t = std::shared_ptr<FieldTower>(new FieldTower());
    t->p_ = spec.p;
    t->s_ = spec.s;
    t->m_ = spec.m;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < spec.s; ++i) q *= spec.p;
    t->q_ = static_cast<std::uint32_t>(q);
    t->qm_ = static_cast<std::uint32_t>(size);

    // base modulus
    detail::PrimeOps pf{spec.p};
    if (spec.modulus_q) {
        auto& mq = *spec.modulus_q;
        if (mq.size() != spec.s + 1 || mq.back() != 1)
            throw std::invalid_argument("modulus_q must be monic of degree s");
        for (auto c : mq)
            if (c >= spec.p) throw std::invalid_argument("modulus_q coefficient out of range");
        if (!detail::poly_irreducible(mq, spec.p, pf))
            throw std::invalid_argument("supplied modulus_q is reducible");
        t->modulus_q_ = mq;
    } else {
        t->modulus_q_ = detail::select_modulus(spec.p, spec.s, pf);
    }

    // base tables
    if (t->q_ <= kMulTableLimit && t->q_ > 2) {
        std::uint32_t g = 0;
        std::vector<std::uint32_t> exp;
        for (std::uint32_t cand = 2; cand < t->q_; ++cand) {
            exp.assign(1, 1);
            std::uint32_t x = cand;
            while (x != 1 && exp.size() < t->q_) {
                exp.push_back(x);
                x = t->base_mul_slow(x, cand);
            }
            if (exp.size() == t->q_ - 1) {
                g = cand;
                break;
            }
        }
        if (g == 0) throw std::logic_error("no generator of GF(q)*");  // cannot happen
        t->base_log_.assign(t->q_, 0);
        t->base_exp_.resize(2 * (t->q_ - 1));
        for (std::uint32_t i = 0; i < t->q_ - 1; ++i) {
            t->base_exp_[i] = exp[i];
            t->base_exp_[i + t->q_ - 1] = exp[i];
            t->base_log_[exp[i]] = i;
        }
    }

    // extension modulus (needs base multiplication)
    struct BaseOps {
        const FieldTower* t;
        std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return t->add(x, y); }
        std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return t->sub(x, y); }
        std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return t->base_mul(x, y); }
    } bf{t.get()};
    if (spec.modulus_qm) {
        auto& mqm = *spec.modulus_qm;
        if (mqm.size() != spec.m + 1 || mqm.back() != 1)
            throw std::invalid_argument("modulus_qm must be monic of degree m");
        for (auto c : mqm)
            if (c >= t->q_) throw std::invalid_argument("modulus_qm coefficient out of range");
        if (!detail::poly_irreducible(mqm, t->q_, bf))
            throw std::invalid_argument("supplied modulus_qm is reducible");
        t->modulus_qm_ = mqm;
    } else {
        t->modulus_qm_ = detail::select_modulus(t->q_, spec.m, bf);
    }

    // primitive element of GF(q^m)*, then tables
    const std::uint32_t qm = t->qm_;
    auto order_is_full = [&](std::uint32_t g) {
        if (g == 0) return false;
        if (qm <= kMulTableLimit) {
            std::uint32_t x = g;
            std::uint32_t ord = 1;
            while (x != 1) {
                x = t->ext_mul_slow(x, g);
                if (++ord > qm - 1) return false;
            }
            return ord == qm - 1;
        }
        // large layer: factored order test (exact, no table walk)
        auto powm = [&](std::uint32_t a, std::uint64_t e) {
            std::uint32_t acc = 1, b = a;
            while (e) {
                if (e & 1) acc = t->ext_mul_slow(acc, b);
                b = t->ext_mul_slow(b, b);
                e >>= 1;
            }
            return acc;
        };
        if (powm(g, qm - 1) != 1) return false;
        for (auto f : detail::prime_factors_u64(qm - 1))
            if (powm(g, (qm - 1) / f) == 1) return false;
        return true;
    };

    if (spec.primitive_qm) {
        if (*spec.primitive_qm >= qm)
            throw std::invalid_argument("primitive_qm code out of range");
        if (!order_is_full(*spec.primitive_qm))
            throw std::invalid_argument("supplied primitive_qm does not generate GF(q^m)*");
        t->primitive_qm_ = *spec.primitive_qm;
    } else {
        std::uint32_t g = 0;
        for (std::uint32_t cand = 1; cand < qm; ++cand) {
            if (order_is_full(cand)) {
                g = cand;
                break;
            }
        }
        if (g == 0) throw std::logic_error("no generator of GF(q^m)*");  // cannot happen
        t->primitive_qm_ = g;
    }

    if (qm <= kMulTableLimit) {
        t->ext_log_.assign(qm, 0);
        t->ext_exp_.resize(2 * (qm - 1));
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < qm - 1; ++i) {
            t->ext_exp_[i] = x;
            t->ext_exp_[i + qm - 1] = x;
            t->ext_log_[x] = i;
            x = t->ext_mul_slow(x, t->primitive_qm_);
        }
        if (x != 1) throw std::logic_error("primitive element table walk did not close");
    }

    return t;
}

// ---------------------------------------------------------------------------

/// Value type for elements of GF(q^m); a thin wrapper around an integer code
/// plus its owning tower. Mixed-tower arithmetic throws.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const FieldTower& t, std::uint32_t code) : t_(&t), code_(code) {
        if (code >= t.q_to_m()) throw std::invalid_argument("element code out of range");
    }

    std::uint32_t code() const { return code_; }
    const FieldTower& tower() const { return *t_; }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return {*t_, t_->add(code_, o.code_)};
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return {*t_, t_->sub(code_, o.code_)};
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return {*t_, t_->ext_mul(code_, o.code_)};
    }
    FieldElement operator-() const { return {*t_, t_->neg(code_)}; }
    FieldElement inverse() const { return {*t_, t_->ext_inv(code_)}; }
    FieldElement pow(long long e) const { return {*t_, t_->ext_pow(code_, e)}; }
    FieldElement frobenius(unsigned j) const { return {*t_, t_->frobenius(code_, j)}; }

    bool operator==(const FieldElement& o) const { return t_ == o.t_ && code_ == o.code_; }

  private:
    void check(const FieldElement& o) const {
        if (t_ != o.t_) throw std::invalid_argument("elements belong to different towers");
    }
    const FieldTower* t_ = nullptr;
    std::uint32_t code_ = 0;
};

/// Coordinates of a over GF(q) in the polynomial basis (length m).
inline std::vector<std::uint32_t> expand_element(const FieldElement& a) {
    return a.tower().ext_coords(a.code());
}

}  // namespace rankmw
