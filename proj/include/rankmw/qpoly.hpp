#pragma once

#include "qcombin.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace rankmw {

/// Homogeneous bivariate polynomial of fixed degree r with integer
/// coefficients: coeffs[i] multiplies y^i x^{r-i}. Zero coefficients are
/// stored explicitly, so coeffs always has length r+1.
class HomPoly {
  public:
    explicit HomPoly(unsigned degree) : c_(degree + 1, 0) {}
    explicit HomPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("HomPoly: empty coefficient list");
    }

    static HomPoly constant(const BigInt& v) { return HomPoly(std::vector<BigInt>{v}); }
    /// c * y^i x^{degree-i}
    static HomPoly monomial(unsigned degree, unsigned i, const BigInt& c) {
        HomPoly p(degree);
        p[i] = c;
        return p;
    }

    unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
    const BigInt& operator[](std::size_t i) const { return c_.at(i); }
    BigInt& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt sum() const {
        BigInt s = 0;
        for (auto& v : c_) s += v;
        return s;
    }

    bool operator==(const HomPoly& o) const { return c_ == o.c_; }

    HomPoly& operator+=(const HomPoly& o) {
        if (o.degree() != degree()) throw std::invalid_argument("HomPoly: degree mismatch");
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }

    HomPoly& operator-=(const HomPoly& o) {
        if (o.degree() != degree()) throw std::invalid_argument("HomPoly: degree mismatch");
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }

    friend HomPoly operator*(const BigInt& s, HomPoly p) {
        for (auto& v : p.c_) v *= s;
        return p;
    }

  private:
    std::vector<BigInt> c_;
};

/// Ordinary (commutative) product; used for the Hamming-metric identities.
inline HomPoly ordinary_mul(const HomPoly& a, const HomPoly& b) {
    HomPoly c(a.degree() + b.degree());
    for (unsigned i = 0; i <= a.degree(); ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j <= b.degree(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

inline HomPoly ordinary_pow(const HomPoly& a, unsigned e) {
    HomPoly r = HomPoly::constant(1);
    for (unsigned i = 0; i < e; ++i) r = ordinary_mul(r, a);
    return r;
}

inline HomPoly div_exact(const HomPoly& a, const BigInt& d, const char* what) {
    std::vector<BigInt> c(a.degree() + 1);
    for (unsigned i = 0; i <= a.degree(); ++i) c[i] = div_exact(a[i], d, what);
    return HomPoly(std::move(c));
}

/// (x + (q^m - 1) y)^n, the Hamming weight enumerator of GF(q^m)^n.
inline HomPoly hamming_full_space(const QContext& ctx, unsigned m, unsigned n) {
    HomPoly base(1);
    base[0] = 1;
    base[1] = ctx.pow(m) - 1;
    return ordinary_pow(base, n);
}

// ---------------------------------------------------------------------------

/// A coefficient of a ParamPoly: a total, memoized map from the extension
/// degree m (any integer) to an integer. Memoization is synchronized, so
/// shared ParamPolys may be evaluated from several threads.
class CoeffFn {
  public:
    explicit CoeffFn(std::function<BigInt(long long)> f)
        : st_(std::make_shared<State>(std::move(f))) {}

    static CoeffFn constant(BigInt v) {
        return CoeffFn([v = std::move(v)](long long) { return v; });
    }

    BigInt operator()(long long m) const {
        std::lock_guard<std::mutex> lock(st_->mu);
        auto it = st_->memo.find(m);
        if (it != st_->memo.end()) return it->second;
        BigInt v = st_->f(m);
        st_->memo.emplace(m, v);
        return v;
    }

  private:
    struct State {
        explicit State(std::function<BigInt(long long)> fn) : f(std::move(fn)) {}
        std::function<BigInt(long long)> f;
        std::mutex mu;
        std::map<long long, BigInt> memo;
    };
    std::shared_ptr<State> st_;
};

/// Homogeneous bivariate polynomial whose coefficients are functions of the
/// extension degree m: a(x,y;m) = sum_i a_i(m) y^i x^{r-i}.
class ParamPoly {
  public:
    ParamPoly(QContext ctx, std::vector<CoeffFn> coeffs)
        : ctx_(ctx), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("ParamPoly: empty coefficient list");
    }

    static ParamPoly constant(QContext ctx, BigInt v) {
        return ParamPoly(ctx, {CoeffFn::constant(std::move(v))});
    }

    /// fn(m) * y^i x^{degree-i}
    static ParamPoly monomial(QContext ctx, unsigned degree, unsigned i, CoeffFn fn) {
        std::vector<CoeffFn> c(degree + 1, CoeffFn::constant(0));
        c[i] = std::move(fn);
        return ParamPoly(ctx, std::move(c));
    }

    static ParamPoly from_hompoly(QContext ctx, const HomPoly& h) {
        std::vector<CoeffFn> c;
        c.reserve(h.degree() + 1);
        for (unsigned i = 0; i <= h.degree(); ++i) c.push_back(CoeffFn::constant(h[i]));
        return ParamPoly(ctx, std::move(c));
    }

    const QContext& context() const { return ctx_; }
    unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
    const CoeffFn& coeff(std::size_t i) const { return c_.at(i); }

    ParamPoly& operator+=(const ParamPoly& o) {
        require_same_context(o);
        if (o.degree() != degree()) throw std::invalid_argument("ParamPoly: degree mismatch");
        for (std::size_t i = 0; i < c_.size(); ++i) {
            CoeffFn a = c_[i], b = o.c_[i];
            c_[i] = CoeffFn([a, b](long long m) { return a(m) + b(m); });
        }
        return *this;
    }
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }

    friend ParamPoly operator*(const BigInt& s, ParamPoly p) {
        for (auto& fn : p.c_) {
            CoeffFn a = fn;
            fn = CoeffFn([s, a](long long m) { return s * a(m); });
        }
        return p;
    }

    void require_same_context(const ParamPoly& o) const {
        if (ctx_.q != o.ctx_.q) throw std::invalid_argument("ParamPoly: context mismatch");
    }

  private:
    QContext ctx_;
    std::vector<CoeffFn> c_;
};

inline HomPoly eval_param(const ParamPoly& a, long long m) {
    if (m < 0) throw std::invalid_argument("eval_param: m must be non-negative");
    std::vector<BigInt> c(a.degree() + 1);
    for (unsigned i = 0; i <= a.degree(); ++i) c[i] = a.coeff(i)(m);
    return HomPoly(std::move(c));
}

/// The q-product: c = a * b has degree r+s and coefficients
///   c_u(m) = sum_i q^{i s} a_i(m) b_{u-i}(m-i),     s = deg b.
/// Note the shifted argument on the right operand; the product is not
/// commutative. Shifts that reach m < 0 land on the alpha(m<0) = 0
/// convention in qcombin.
inline ParamPoly q_product(const ParamPoly& a, const ParamPoly& b) {
    a.require_same_context(b);
    const QContext ctx = a.context();
    const unsigned r = a.degree(), s = b.degree();
    std::vector<CoeffFn> ac, bc;
    for (unsigned i = 0; i <= r; ++i) ac.push_back(a.coeff(i));
    for (unsigned j = 0; j <= s; ++j) bc.push_back(b.coeff(j));
    std::vector<CoeffFn> out;
    out.reserve(r + s + 1);
    for (unsigned u = 0; u <= r + s; ++u) {
        out.push_back(CoeffFn([ctx, ac, bc, u, r, s](long long m) {
            BigInt acc = 0;
            const unsigned lo = u > s ? u - s : 0;
            const unsigned hi = std::min(u, r);
            for (unsigned i = lo; i <= hi; ++i)
                acc += ctx.pow(static_cast<unsigned long long>(i) * s) * ac[i](m) *
                       bc[u - i](m - i);
            return acc;
        }));
    }
    return ParamPoly(ctx, std::move(out));
}

/// l-th q-power: a^{[0]} = 1, a^{[l]} = a^{[l-1]} * a.
inline ParamPoly q_power(const ParamPoly& a, unsigned l) {
    ParamPoly r = ParamPoly::constant(a.context(), 1);
    for (unsigned i = 0; i < l; ++i) r = q_product(r, a);
    return r;
}

/// a_l(x,y;m) = [x + (q^m-1)y]^{[l]} in closed form: coefficient u is
/// [l u] alpha(m,u). Evaluated at m it is the rank weight enumerator of
/// GF(q^m)^l.
inline ParamPoly a_poly(const QContext& ctx, unsigned l) {
    std::vector<CoeffFn> c;
    c.reserve(l + 1);
    for (unsigned u = 0; u <= l; ++u) {
        BigInt g = gaussian(ctx, l, u);
        c.push_back(CoeffFn([ctx, g, u](long long m) { return g * alpha(ctx, m, u); }));
    }
    return ParamPoly(ctx, std::move(c));
}

/// b_l(x,y;m) = (x - y)^{[l]} in closed form: coefficient u is
/// [l u] (-1)^u q^{sigma_u}, independent of m.
inline ParamPoly b_poly(const QContext& ctx, unsigned l) {
    std::vector<CoeffFn> c;
    c.reserve(l + 1);
    for (unsigned u = 0; u <= l; ++u) {
        BigInt v = gaussian(ctx, l, u) * ctx.pow(static_cast<unsigned long long>(sigma(u)));
        if (u % 2) v = -v;
        c.push_back(CoeffFn::constant(v));
    }
    return ParamPoly(ctx, std::move(c));
}

/// nu-th partial q-derivative with respect to x: each monomial y^i x^{r-i}
/// maps to beta(r-i, nu) y^i x^{r-i-nu}; monomials with r-i < nu vanish.
inline HomPoly q_derivative(const QContext& ctx, const HomPoly& f, unsigned nu) {
    const unsigned r = f.degree();
    if (nu == 0) return f;
    if (nu > r) throw std::invalid_argument("q_derivative: order exceeds degree");
    HomPoly out(r - nu);
    for (unsigned i = 0; i + nu <= r; ++i) out[i] = f[i] * beta(ctx, r - i, nu);
    return out;
}

inline ParamPoly q_derivative(const ParamPoly& f, unsigned nu) {
    const QContext ctx = f.context();
    const unsigned r = f.degree();
    if (nu == 0) return f;
    if (nu > r) throw std::invalid_argument("q_derivative: order exceeds degree");
    std::vector<CoeffFn> out;
    out.reserve(r - nu + 1);
    for (unsigned i = 0; i + nu <= r; ++i) {
        BigInt b = beta(ctx, r - i, nu);
        CoeffFn a = f.coeff(i);
        out.push_back(CoeffFn([a, b](long long m) { return b * a(m); }));
    }
    return ParamPoly(ctx, std::move(out));
}

/// q-transform: sends a_i y^i x^{r-i} to a_i y^{[i]} * x^{[r-i]}. Since
/// y^{[i]} = q^{sigma_i} y^i and x^{[r-i]} = x^{r-i}, the monomial q-product
/// collapses to the diagonal scaling below; q_transform_via_products keeps
/// the literal construction as a cross-check.
inline HomPoly q_transform(const QContext& ctx, const HomPoly& f) {
    const unsigned r = f.degree();
    HomPoly out(r);
    for (unsigned i = 0; i <= r; ++i) {
        unsigned long long e = static_cast<unsigned long long>(sigma(i)) +
                               static_cast<unsigned long long>(i) * (r - i);
        out[i] = f[i] * ctx.pow(e);
    }
    return out;
}

inline ParamPoly q_transform(const ParamPoly& f) {
    const QContext ctx = f.context();
    const unsigned r = f.degree();
    std::vector<CoeffFn> out;
    out.reserve(r + 1);
    for (unsigned i = 0; i <= r; ++i) {
        BigInt scale = ctx.pow(static_cast<unsigned long long>(sigma(i)) +
                               static_cast<unsigned long long>(i) * (r - i));
        CoeffFn a = f.coeff(i);
        out.push_back(CoeffFn([a, scale](long long m) { return scale * a(m); }));
    }
    return ParamPoly(ctx, std::move(out));
}

inline HomPoly q_transform_via_products(const QContext& ctx, const HomPoly& f) {
    const unsigned r = f.degree();
    const ParamPoly y1 = ParamPoly::monomial(ctx, 1, 1, CoeffFn::constant(1));
    const ParamPoly x1 = ParamPoly::monomial(ctx, 1, 0, CoeffFn::constant(1));
    ParamPoly acc = ParamPoly::monomial(ctx, r, 0, CoeffFn::constant(0));
    for (unsigned i = 0; i <= r; ++i)
        acc += f[i] * q_product(q_power(y1, i), q_power(x1, r - i));
    return eval_param(acc, 0);  // coefficients are m-independent here
}

/// ParamPoly equality by evaluation on a window of m values. All coefficient
/// functions in this artifact are integer polynomials in q^m of bounded
/// degree, so a window of degree+5 points pins them down.
inline bool equal_on_window(const ParamPoly& a, const ParamPoly& b, long long lo, long long hi) {
    if (a.degree() != b.degree()) return false;
    for (long long m = lo; m <= hi; ++m)
        for (unsigned i = 0; i <= a.degree(); ++i)
            if (a.coeff(i)(m) != b.coeff(i)(m)) return false;
    return true;
}

inline bool equal_on_window(const ParamPoly& a, const ParamPoly& b) {
    return equal_on_window(a, b, 0, static_cast<long long>(a.degree()) + 4);
}

}  // namespace rankmw
