#pragma once

#include "okb/bundle.hpp"
#include "okb/polytope.hpp"

#include <algorithm>

namespace okb {

// Rank-2 specialization: P(E) is a ruled surface.

inline void require_rank_two(const HNData& hn) {
    if (hn.rank() != 2) throw Error(ErrorKind::RankNotTwo, "ruled surface operations need rank 2");
}

/// Intersection product on a ruled surface: ξ² = d, ξ·f = 1, f² = 0.
inline Rat intersect(const HNData& hn, const DivisorClass& x, const DivisorClass& y) {
    require_rank_two(hn);
    return x.xi * y.xi * hn.degree() + x.xi * y.f + x.f * y.xi;
}

struct ZariskiResult {
    DivisorClass positive;
    DivisorClass negative;
    Rat t_star;
};

/**
 * @brief Zariski decomposition of the big class a(ξ − μ_ℓ f) + b f.
 *
 * Nef classes (t* >= 0) are their own positive part. Otherwise the negative
 * part is a multiple of the section class ξ − μ_ℓ f.
 */
inline ZariskiResult zariski(const HNData& hn, const Rat& a, const Rat& b) {
    require_rank_two(hn);
    if (a <= 0 || b <= 0) throw Error(ErrorKind::NotBig, "Zariski decomposition needs a big class (a > 0, b > 0)");
    const Rat gap = hn.mu_max() - hn.mu_min();
    const Rat t_star = b - a * gap;
    const DivisorClass eta = DivisorClass::from_ab(hn, a, b);
    if (t_star >= 0) return {eta, {Rat(0), Rat(0)}, t_star};
    const Rat p = b / gap;
    const Rat n = (a * gap - b) / gap;
    return {p * DivisorClass{Rat(1), -hn.mu_min()}, n * DivisorClass{Rat(1), -hn.mu_max()}, t_star};
}

/**
 * @brief Vertices of Δ_{Y•}(η) on a ruled surface, in (ν_1, ν_2).
 *
 * `through` says whether the flag point lies on the negative section
 * s(C); it is ignored for semi-stable data.
 */
inline VRep polygon(const HNData& hn, const Rat& a, const Rat& b, bool through) {
    require_rank_two(hn);
    if (a <= 0 || b <= 0) throw Error(ErrorKind::NotBig, "polygon needs a big class (a > 0, b > 0)");
    std::vector<RatVec> v;
    if (hn.length() == 1) {
        v = {{0, 0}, {b, 0}, {b, a}, {0, a}};
    } else {
        const Rat gap = hn.mu_max() - hn.mu_min();
        const Rat t_star = b - a * gap;
        if (t_star > 0) {
            if (through)
                v = {{0, 0}, {0, a}, {b, a}, {t_star, 0}};
            else
                v = {{0, 0}, {0, a}, {t_star, a}, {b, 0}};
        } else if (t_star == 0) {
            if (through)
                v = {{0, 0}, {0, a}, {b, a}};
            else
                v = {{0, 0}, {0, a}, {b, 0}};
        } else {
            if (through)
                v = {{0, -t_star / gap}, {0, a}, {b, a}};
            else
                v = {{0, 0}, {0, b / gap}, {b, 0}};
        }
    }
    std::sort(v.begin(), v.end());
    return {2, std::move(v)};
}

} // namespace okb
