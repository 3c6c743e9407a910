#pragma once

#include "okb/bodies.hpp"
#include "okb/bundle.hpp"
#include "okb/polynomial.hpp"
#include "okb/polytope.hpp"

namespace okb {

namespace detail {

// β_1^{r_1−1}⋯β_ℓ^{r_ℓ−1} / ((r_1−1)!⋯(r_ℓ−1)!) in (β_2, …, β_ℓ), β_1 = 1 − Σ β_i.
inline Polynomial wolfe_weight(const HNData& hn) {
    const auto& q = hn.quotients();
    const std::size_t n = q.size() - 1;
    RatVec minus_ones(n, Rat(-1));
    Polynomial w = Polynomial::affine(minus_ones, Rat(1)).pow(q[0].rank - 1);
    Int denom = factorial(q[0].rank - 1);
    for (std::size_t i = 1; i < q.size(); ++i) {
        w = w * Polynomial::variable(n, i - 1).pow(q[i].rank - 1);
        denom *= factorial(q[i].rank - 1);
    }
    return w * Rat(Int(1), denom);
}

// c_1(1 − Σ x_i) + Σ c_i x_i − t
inline Polynomial slope_form(const RatVec& c, const Rat& t) {
    RatVec coeffs(c.size() - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = c[i + 1] - c[0];
    return Polynomial::affine(coeffs, c[0] - t);
}

inline RatVec slopes(const HNData& hn) {
    RatVec mu;
    for (const auto& q : hn.quotients()) mu.push_back(q.slope);
    return mu;
}

} // namespace detail

/// vol(ξ − t f) as r! times the integral of the affine branch over □_t (r−1 coordinates).
inline Rat chen_volume(const HNData& hn, const Rat& t) {
    require_projective(hn);
    if (t >= hn.mu_max()) return 0;
    const RatVec s = s_vector(hn);
    return Rat(factorial(hn.rank())) * integrate_polynomial(slope_region(s, t), detail::slope_form(s, t));
}

/// vol(ξ − t f) via the weighted integral over □̂_t (ℓ−1 coordinates).
inline Rat wolfe_volume(const HNData& hn, const Rat& t) {
    require_projective(hn);
    if (t >= hn.mu_max()) return 0;
    const RatVec mu = detail::slopes(hn);
    const Polynomial integrand = detail::slope_form(mu, t) * detail::wolfe_weight(hn);
    return Rat(factorial(hn.rank())) * integrate_polynomial(box_hat(hn, t), integrand);
}

/// vol(a(ξ − μ_ℓ f) + b f) by degree-r homogeneity.
inline Rat volume_class(const HNData& hn, const Rat& a, const Rat& b) {
    require_projective(hn);
    if (a <= 0) throw Error(ErrorKind::NonPositiveA, "volume_class needs a > 0");
    if (b <= 0) return 0;
    return pow(a, hn.rank()) * chen_volume(hn, hn.mu_max() - b / a);
}

/// η^r = r a^{r−1} (b − a(μ_ℓ − μ(E))).
inline Rat top_self_intersection(const HNData& hn, const Rat& a, const Rat& b) {
    require_projective(hn);
    const unsigned r = hn.rank();
    return r * pow(a, r - 1) * (b - a * (hn.mu_max() - hn.slope()));
}

/// (xξ + yf)^r = x^r d + r x^{r−1} y, from f² = 0, ξ^{r−1}f = 1, ξ^r = d.
inline Rat top_self_intersection(const HNData& hn, const DivisorClass& c) {
    require_projective(hn);
    const unsigned r = hn.rank();
    return pow(c.xi, r) * hn.degree() + r * pow(c.xi, r - 1) * c.f;
}

/// vol_{P(E)|F}(ξ − t f); zero outside the big range t < μ_ℓ.
inline Rat restricted_volume(const HNData& hn, const Rat& t) {
    require_projective(hn);
    if (t >= hn.mu_max()) return 0;
    return Rat(factorial(hn.rank() - 1)) * integrate_polynomial(box_hat(hn, t), detail::wolfe_weight(hn));
}

/**
 * @brief Euclidean (r−1)-volume of the slice Δ(ξ − t f)_{ν_1 = τ}.
 *
 * Equals restricted_volume(hn, t + τ) / (r−1)! inside the big range. At
 * τ = μ_ℓ − t this is the boundary face, which is a full simplex when the
 * data are semi-stable and has no interior otherwise.
 */
inline Rat slice_volume(const HNData& hn, const Rat& t, const Rat& tau) {
    require_projective(hn);
    if (tau < 0 || tau > hn.mu_max() - t) throw Error(ErrorKind::TauOutOfRange, "tau must lie in [0, mu_max - t]");
    return integrate_polynomial(box_hat(hn, t + tau), detail::wolfe_weight(hn));
}

} // namespace okb
