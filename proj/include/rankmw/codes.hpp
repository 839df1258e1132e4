#pragma once

#include "linalg.hpp"
#include "qpoly.hpp"

#include <thread>
#include <vector>

namespace rankmw {

enum class Metric { rank, hamming };

inline constexpr std::uint64_t kDefaultEnumGuard = std::uint64_t(1) << 24;

/// Linear (n,k) code over GF(q^m), held as a full-row-rank generator matrix
/// on the extension layer. k = 0 (empty generator) is the zero code.
class LinearCode {
  public:
    LinearCode(TowerPtr tower, Matrix generator)
        : tower_(std::move(tower)), gen_(std::move(generator)) {
        if (!tower_) throw std::invalid_argument("LinearCode: null tower");
        if (!(gen_.field() == ext_view(*tower_)))
            throw std::invalid_argument("LinearCode: generator must live on the extension layer");
        for (std::size_t r = 0; r < gen_.rows(); ++r)
            for (std::size_t c = 0; c < gen_.cols(); ++c)
                if (gen_(r, c) >= tower_->q_to_m())
                    throw std::invalid_argument("LinearCode: entry out of range");
        if (rank(gen_) != gen_.rows())
            throw std::invalid_argument("LinearCode: generator rows are dependent");
    }

    const FieldTower& tower() const { return *tower_; }
    const TowerPtr& tower_ptr() const { return tower_; }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }

    /// |C| = q^{mk}
    BigInt size() const {
        return pow_int(BigInt(tower_->q_to_m()), static_cast<unsigned long long>(k()));
    }

  private:
    TowerPtr tower_;
    Matrix gen_;
};

inline LinearCode dual_code(const LinearCode& C) {
    return LinearCode(C.tower_ptr(), null_space(C.generator()));
}

/// Row-space equality (codes are sets of codewords, not generator matrices).
inline bool same_code(const LinearCode& A, const LinearCode& B) {
    return A.tower_ptr() == B.tower_ptr() && same_row_space(A.generator(), B.generator());
}

namespace detail {

inline std::uint64_t checked_message_count(const LinearCode& C, std::uint64_t guard) {
    BigInt total = C.size();
    if (total > guard)
        throw guard_error("enumeration of " + total.str() + " codewords exceeds guard " +
                          std::to_string(guard));
    return total.convert_to<std::uint64_t>();
}

}  // namespace detail

/// Visit the codewords for message indices in [lo, hi). Messages are the
/// base-q^m digit expansions of the index, digit 0 fastest, so the order is
/// lexicographic in the message coordinates and any sub-range can be handed
/// to a worker independently. The codeword is maintained incrementally as a
/// stack of suffix sums over the message digits: one step costs one
/// scalar-row product plus one row addition.
template <class F>
void for_each_codeword(const LinearCode& C, std::uint64_t lo, std::uint64_t hi, F&& f) {
    const FieldTower& t = C.tower();
    const std::uint64_t B = t.q_to_m();
    const std::size_t k = C.k(), n = C.n();
    if (lo >= hi) return;

    std::vector<std::uint32_t> digits(k, 0);
    {
        std::uint64_t idx = lo;
        for (std::size_t j = 0; j < k; ++j) {
            digits[j] = static_cast<std::uint32_t>(idx % B);
            idx /= B;
        }
    }
    // suffix[j] = sum_{i >= j} digits[i] * row_i; suffix[k] = 0
    std::vector<std::vector<std::uint32_t>> suffix(k + 1, std::vector<std::uint32_t>(n, 0));
    for (std::size_t j = k; j-- > 0;) {
        const auto row = C.generator().row(j);
        const std::uint32_t d = digits[j];
        for (std::size_t c = 0; c < n; ++c)
            suffix[j][c] = t.add(suffix[j + 1][c], t.ext_mul(d, row[c]));
    }

    for (std::uint64_t idx = lo;; ++idx) {
        f(std::span<const std::uint32_t>(suffix[0]));
        if (idx + 1 >= hi) break;
        std::size_t c = 0;
        while (digits[c] == B - 1) digits[c++] = 0;
        ++digits[c];
        const auto row = C.generator().row(c);
        for (std::size_t j = 0; j < n; ++j)
            suffix[c][j] = t.add(suffix[c + 1][j], t.ext_mul(digits[c], row[j]));
        for (std::size_t j = c; j-- > 0;) suffix[j] = suffix[j + 1];
    }
}

template <class F>
void for_each_codeword(const LinearCode& C, F&& f) {
    for_each_codeword(C, 0, detail::checked_message_count(C, kDefaultEnumGuard),
                      std::forward<F>(f));
}

/// Codeword counts bucketed by weight, index = weight. Deterministic for any
/// worker count: ranges are contiguous and bucket merge is plain addition.
inline std::vector<std::uint64_t> weight_counts(const LinearCode& C, Metric metric,
                                                std::uint64_t guard = kDefaultEnumGuard,
                                                unsigned workers = 1) {
    const std::uint64_t total = detail::checked_message_count(C, guard);
    const FieldTower& t = C.tower();
    const std::size_t n = C.n();
    if (workers == 0) workers = 1;
    if (workers > 1 && total < 2 * workers) workers = 1;

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& buckets) {
        buckets.assign(n + 1, 0);
        if (metric == Metric::hamming) {
            for_each_codeword(C, lo, hi,
                              [&](std::span<const std::uint32_t> w) { ++buckets[hamming_weight(w)]; });
        } else {
            for_each_codeword(C, lo, hi,
                              [&](std::span<const std::uint32_t> w) { ++buckets[rank_norm(t, w)]; });
        }
    };

    if (workers == 1) {
        std::vector<std::uint64_t> buckets;
        run_range(0, total, buckets);
        return buckets;
    }
    std::vector<std::vector<std::uint64_t>> parts(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        std::uint64_t len = total / workers + (w < total % workers ? 1 : 0);
        threads.emplace_back(run_range, lo, lo + len, std::ref(parts[w]));
    }
    for (auto& th : threads) th.join();
    std::vector<std::uint64_t> buckets(n + 1, 0);
    for (auto& part : parts)
        for (std::size_t i = 0; i <= n; ++i) buckets[i] += part[i];
    return buckets;
}

struct WeightEnumerator {
    Metric metric;
    HomPoly poly;
};

/// Brute-force weight enumerator: bucket every codeword by its weight.
inline WeightEnumerator weight_enumerator(const LinearCode& C, Metric metric,
                                          std::uint64_t guard = kDefaultEnumGuard,
                                          unsigned workers = 1) {
    auto counts = weight_counts(C, metric, guard, workers);
    std::vector<BigInt> coeffs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = counts[i];
    return {metric, HomPoly(std::move(coeffs))};
}

/// Minimum weight over nonzero codewords.
inline int minimum_distance(const LinearCode& C, Metric metric,
                            std::uint64_t guard = kDefaultEnumGuard, unsigned workers = 1) {
    if (C.k() == 0) throw std::invalid_argument("minimum_distance: undefined for the zero code");
    auto counts = weight_counts(C, metric, guard, workers);
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i]) return static_cast<int>(i);
    throw std::logic_error("no nonzero codeword found");  // cannot happen for k >= 1
}

/// Singleton equality d_R = n - k + 1 (stated for n <= m).
inline bool is_mrd(const LinearCode& C, std::uint64_t guard = kDefaultEnumGuard,
                   unsigned workers = 1) {
    if (C.n() > C.tower().m()) throw std::invalid_argument("is_mrd: requires n <= m");
    if (C.k() == 0) throw std::invalid_argument("is_mrd: requires k >= 1");
    return minimum_distance(C, Metric::rank, guard, workers) ==
           static_cast<int>(C.n() - C.k() + 1);
}

/// s-th order B-elementary extension: the (n+s, k+s) code
/// {(c_0..c_{n+s-1}) : (c_0..c_{n-1}) - (c_n..c_{n+s-1}) B in C0} with B an
/// s x n matrix over GF(q), realized by the block generator [[G0 0],[B I_s]].
inline LinearCode elementary_extension(const LinearCode& C0, const Matrix& B) {
    const FieldTower& t = C0.tower();
    if (!(B.field() == base_view(t)))
        throw std::invalid_argument("elementary_extension: B must be over GF(q)");
    if (B.cols() != C0.n()) throw std::invalid_argument("elementary_extension: B has wrong width");
    const std::size_t s = B.rows(), n = C0.n(), k = C0.k();
    Matrix gen(ext_view(t), k + s, n + s);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) gen(r, c) = C0.generator()(r, c);
    for (std::size_t r = 0; r < s; ++r) {
        for (std::size_t c = 0; c < n; ++c) gen(k + r, c) = t.embed(B(r, c));
        gen(k + r, n + r) = 1;
    }
    return LinearCode(C0.tower_ptr(), std::move(gen));
}

/// Coordinate extension = B-elementary extension with B = 0.
inline LinearCode coordinate_extension(const LinearCode& C0, std::size_t s) {
    return elementary_extension(C0, Matrix(base_view(C0.tower()), s, C0.n()));
}

/// Generator row i is the coordinatewise q^i-power of the point vector g,
/// which must be GF(q)-linearly independent (rank n). The classical MRD
/// family; d_R = n - k + 1.
inline LinearCode gabidulin_code(TowerPtr tower, std::size_t n, std::size_t k,
                                 std::span<const std::uint32_t> g) {
    const FieldTower& t = *tower;
    if (n > t.m()) throw std::invalid_argument("gabidulin_code: requires n <= m");
    if (k < 1 || k > n) throw std::invalid_argument("gabidulin_code: requires 1 <= k <= n");
    if (g.size() != n) throw std::invalid_argument("gabidulin_code: point vector has wrong length");
    if (rank_norm(t, g) != static_cast<int>(n))
        throw std::invalid_argument("gabidulin_code: point vector is GF(q)-dependent");
    Matrix gen(ext_view(t), k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gen(i, j) = t.frobenius(g[j], static_cast<unsigned>(i));
    return LinearCode(std::move(tower), std::move(gen));
}

/// Rank weight enumerator of <v>^perp for any v of rank r in GF(q^m)^n:
///   q^{-m} { a_n(x,y;m) + (q^m - 1) b_r(x,y;m) * a_{n-r}(x,y;m) }.
/// Depends only on r; the division is exact.
inline HomPoly dual_of_vector_rank_enumerator(const QContext& ctx, unsigned r, unsigned n,
                                              unsigned m) {
    if (r > n || r > m)
        throw std::invalid_argument("dual_of_vector_rank_enumerator: rank out of range");
    const BigInt qm = ctx.pow(m);
    HomPoly full = eval_param(a_poly(ctx, n), m);
    HomPoly hat = eval_param(q_product(b_poly(ctx, r), a_poly(ctx, n - r)), m);
    return div_exact(full + (qm - 1) * hat, qm, "dual_of_vector_rank_enumerator");
}

}  // namespace rankmw
