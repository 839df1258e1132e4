#include <rankmw/linalg.hpp>
#include <rankmw/qcombin.hpp>

#include <gtest/gtest.h>

#include <functional>

using namespace rankmw;

namespace {

// oracle: count u-dimensional subspaces of GF(q)^n as the number of ordered
// independent u-tuples divided by the number of ordered bases per subspace
BigInt subspace_count_bruteforce(unsigned q, unsigned n, unsigned u) {
    auto t = FieldTower::make(q, 1, 1);  // prime q suffices for the oracle grid
    // vectors of GF(q)^n as digit vectors
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= q;
    std::vector<std::vector<std::uint32_t>> vecs;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint32_t> v(n);
        std::uint64_t x = idx;
        for (unsigned i = 0; i < n; ++i) {
            v[i] = static_cast<std::uint32_t>(x % q);
            x /= q;
        }
        vecs.push_back(std::move(v));
    }
    auto rank_of = [&](const std::vector<std::size_t>& pick) {
        Matrix M(base_view(*t), pick.size(), n);
        for (std::size_t r = 0; r < pick.size(); ++r)
            for (unsigned c = 0; c < n; ++c) M(r, c) = vecs[pick[r]][c];
        return rank(M);
    };
    // ordered independent u-tuples
    BigInt tuples = 0;
    std::vector<std::size_t> pick(u);
    std::function<void(unsigned)> rec = [&](unsigned depth) {
        if (depth == u) {
            tuples += 1;
            return;
        }
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            pick[depth] = i;
            std::vector<std::size_t> prefix(pick.begin(), pick.begin() + depth + 1);
            if (rank_of(prefix) == depth + 1) rec(depth + 1);
        }
    };
    if (u == 0) return 1;
    rec(0);
    // ordered bases of a fixed u-dim space: alpha(u,u) at this q
    return tuples / alpha(QContext(q), u, u);
}

}  // namespace

TEST(Sigma, SmallValues) {
    EXPECT_EQ(sigma(0), 0);
    EXPECT_EQ(sigma(1), 0);
    EXPECT_EQ(sigma(3), 3);
    EXPECT_THROW(sigma(-1), std::invalid_argument);
}

TEST(Alpha, ExamplesAndConventions) {
    QContext q2(2);
    EXPECT_EQ(alpha(q2, 5, 0), 1);
    EXPECT_EQ(alpha(q2, 4, 2), 210);  // (16-1)(16-2)
    EXPECT_EQ(alpha(q2, 1, 2), 0);    // zero factor
    EXPECT_EQ(alpha(q2, -1, 0), 0);   // negative m convention
    EXPECT_EQ(alpha(q2, -2, 3), 0);
    EXPECT_THROW(alpha(q2, 2, -1), std::invalid_argument);
    EXPECT_THROW(QContext(1), std::invalid_argument);
}

TEST(Gaussian, ValuesAgainstBruteForceSubspaceCounts) {
    QContext q2(2);
    EXPECT_EQ(gaussian(q2, 0, 0), 1);
    EXPECT_EQ(gaussian(q2, 3, 1), subspace_count_bruteforce(2, 3, 1));
    EXPECT_EQ(gaussian(q2, 3, 1), 7);
    EXPECT_EQ(gaussian(q2, 4, 2), subspace_count_bruteforce(2, 4, 2));
    EXPECT_EQ(gaussian(q2, 4, 2), 35);
    QContext q3(3);
    EXPECT_EQ(gaussian(q3, 3, 2), subspace_count_bruteforce(3, 3, 2));
    EXPECT_EQ(gaussian(q2, 2, 5), 0);
    EXPECT_EQ(gaussian(q2, 2, -1), 0);
}

TEST(Gaussian, SymmetryAndPascalRecurrences) {
    for (unsigned qv : {2u, 3u, 4u}) {
        QContext ctx(qv);
        for (long long n = 0; n <= 8; ++n)
            for (long long u = 0; u <= n; ++u) {
                EXPECT_EQ(gaussian(ctx, n, u), gaussian(ctx, n, n - u));
                if (n >= 1) {
                    // [n u] = [n-1 u-1] + q^u [n-1 u]
                    EXPECT_EQ(gaussian(ctx, n, u),
                              gaussian(ctx, n - 1, u - 1) + ctx.pow(u) * gaussian(ctx, n - 1, u));
                    // [n u] = q^{n-u} [n-1 u-1] + [n-1 u]
                    EXPECT_EQ(gaussian(ctx, n, u),
                              ctx.pow(n - u) * gaussian(ctx, n - 1, u - 1) + gaussian(ctx, n - 1, u));
                }
            }
    }
}

TEST(Beta, ExamplesAndIdentities) {
    QContext q2(2);
    EXPECT_EQ(beta(q2, 5, 0), 1);
    EXPECT_EQ(beta(q2, 2, 1), 3);
    EXPECT_EQ(beta(q2, 3, 2), 21);
    EXPECT_THROW(beta(q2, 2, 3), std::invalid_argument);
    for (unsigned qv : {2u, 3u}) {
        QContext ctx(qv);
        for (long long m = 0; m <= 6; ++m)
            for (long long u = 0; u <= m; ++u)
                EXPECT_EQ(beta(ctx, m, u), gaussian(ctx, m, u) * beta(ctx, u, u));
        for (long long m = 0; m <= 4; ++m)
            for (long long u = 0; u <= 3; ++u)
                EXPECT_EQ(beta(ctx, m + u, m + u),
                          gaussian(ctx, m + u, u) * beta(ctx, m, m) * beta(ctx, u, u));
    }
}

TEST(NumRankU, BruteForceRankCountsOnSmallGrids) {
    for (auto [q, m, n] : {std::array<unsigned, 3>{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {2, 1, 4}}) {
        auto t = FieldTower::make(q, 1, m);
        QContext ctx(q);
        std::uint64_t total = 1;
        for (unsigned i = 0; i < n; ++i) total *= t->q_to_m();
        std::vector<BigInt> counts(std::min(m, n) + 1, 0);
        std::vector<std::uint32_t> v(n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t x = idx;
            for (unsigned i = 0; i < n; ++i) {
                v[i] = static_cast<std::uint32_t>(x % t->q_to_m());
                x /= t->q_to_m();
            }
            ++counts[rank_norm(*t, v)];
        }
        BigInt sum = 0;
        for (unsigned u = 0; u <= std::min(m, n); ++u) {
            EXPECT_EQ(counts[u], num_rank_u(ctx, m, n, u)) << "q=" << q << " m=" << m << " n=" << n;
            EXPECT_EQ(num_rank_u(ctx, m, n, u), num_rank_u(ctx, n, m, u));
            sum += counts[u];
        }
        EXPECT_EQ(sum, ctx.pow(static_cast<unsigned long long>(m) * n));
    }
}

TEST(NumRankU, ExamplesAndErrors) {
    QContext q2(2);
    EXPECT_EQ(num_rank_u(q2, 3, 5, 0), 1);
    EXPECT_EQ(num_rank_u(q2, 2, 2, 1), 9);
    EXPECT_EQ(num_rank_u(q2, 2, 2, 2), 6);
    EXPECT_THROW(num_rank_u(q2, 2, 2, 3), std::invalid_argument);
}
