#pragma once

// The three worked example codes used across the test suites.

#include <rankmw/codes.hpp>

namespace rankmw::testing {

/// (3,2) code with generator rows (1, a, 1), (1, a, 0), a = primitive_qm.
/// Valid for any prime q and m >= 2 at desk scale.
inline LinearCode make_c1(unsigned q, unsigned m) {
    auto t = FieldTower::make(q, 1, m);
    const std::uint32_t a = t->primitive_qm();
    Matrix G(ext_view(*t), 2, 3);
    G(0, 0) = 1; G(0, 1) = a; G(0, 2) = 1;
    G(1, 0) = 1; G(1, 1) = a; G(1, 2) = 0;
    return LinearCode(t, std::move(G));
}

/// Its rank weight enumerator in closed form:
/// x^3 + (q^m-1) y x^2 + q^2 (q^m-1) y^2 x + (q^m-q^2)(q^m-1) y^3.
inline HomPoly c1_rank_enumerator(unsigned q, unsigned m) {
    QContext ctx(q);
    const BigInt qm = ctx.pow(m);
    const BigInt q2 = ctx.pow(2);
    return HomPoly(std::vector<BigInt>{1, qm - 1, q2 * (qm - 1), (qm - q2) * (qm - 1)});
}

/// (4,2) Gabidulin code with point vector (1, a, a^2, a^3) over GF(2^m).
inline LinearCode make_c2(unsigned m) {
    auto t = FieldTower::make(2, 1, m);
    const std::uint32_t a = t->primitive_qm();
    std::vector<std::uint32_t> g{1, a, t->ext_pow(a, 2), t->ext_pow(a, 3)};
    return gabidulin_code(t, 4, 2, g);
}

/// x^4 + [4 1](q^m-1) y^3 x + (q^{2m}-1-[4 1](q^m-1)) y^4 at q = 2.
inline HomPoly c2_rank_enumerator(unsigned m) {
    QContext ctx(2);
    const BigInt qm = ctx.pow(m);
    const BigInt a3 = gaussian(ctx, 4, 1) * (qm - 1);
    return HomPoly(std::vector<BigInt>{1, 0, 0, a3, qm * qm - 1 - a3});
}

/// (7,4) code over GF(2^4) with generator [I_4 | P], P built from powers of
/// the primitive element b: rows (b^3, b^6, b^12), (b^6, b^12, 0),
/// (b^12, 0, b^3), (0, b^3, b^6).
inline LinearCode make_c3() {
    auto t = FieldTower::make(2, 1, 4);
    const std::uint32_t b = t->primitive_qm();
    const std::uint32_t b3 = t->ext_pow(b, 3), b6 = t->ext_pow(b, 6), b12 = t->ext_pow(b, 12);
    Matrix G(ext_view(*t), 4, 7);
    const std::uint32_t P[4][3] = {{b3, b6, b12}, {b6, b12, 0}, {b12, 0, b3}, {0, b3, b6}};
    for (std::size_t r = 0; r < 4; ++r) {
        G(r, r) = 1;
        for (std::size_t c = 0; c < 3; ++c) G(r, 4 + c) = P[r][c];
    }
    return LinearCode(t, std::move(G));
}

inline HomPoly c3_rank_enumerator() {
    return HomPoly(std::vector<BigInt>{1, 0, 105, 7350, 58080, 0, 0, 0});
}

inline HomPoly c3_dual_rank_enumerator() {
    return HomPoly(std::vector<BigInt>{1, 0, 0, 465, 3630, 0, 0, 0});
}

}  // namespace rankmw::testing
