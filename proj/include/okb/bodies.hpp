#pragma once

#include "okb/bundle.hpp"
#include "okb/polytope.hpp"

#include <utility>

namespace okb {

/**
 * @brief {x ∈ Δ_{n-1} : c_1 (1 − Σ_{i≥2} x_i) + Σ_{i≥2} c_i x_i >= t}
 *
 * The region of the full-dimensional (n−1)-simplex, with the first
 * barycentric coordinate eliminated, on which the linear form with
 * coefficients c (length n) is at least t. Simplex constraints come first,
 * the slope constraint last.
 */
inline HRep slope_region(const RatVec& c, const Rat& t) {
    if (c.empty()) throw Error(ErrorKind::InvalidArgument, "slope region needs at least one coefficient");
    const std::size_t n = c.size() - 1;
    HRep h = standard_simplex(n);
    RatVec normal(n);
    for (std::size_t i = 0; i < n; ++i) normal[i] = c[0] - c[i + 1];
    h.add(std::move(normal), c[0] - t);
    return h;
}

/// Coefficient order used by □^w: (σ_{w(r)}, σ_{w(1)}, …, σ_{w(r−1)}).
inline RatVec permuted_sigma(const HNData& hn, const Permutation& w) {
    const RatVec sigma = sigma_vector(hn);
    const unsigned r = hn.rank();
    if (w.size() != r) throw Error(ErrorKind::InvalidArgument, "permutation size must equal rank");
    RatVec c(r);
    c[0] = sigma[w(r) - 1];
    for (unsigned i = 2; i <= r; ++i) c[i - 1] = sigma[w(i - 1) - 1];
    return c;
}

/// □̂_t in coordinates (β_2, …, β_ℓ); dimension ℓ−1.
inline HRep box_hat(const HNData& hn, const Rat& t) {
    RatVec mu;
    for (const auto& q : hn.quotients()) mu.push_back(q.slope);
    return slope_region(mu, t);
}

/// □^w_t in coordinates (ν_2, …, ν_r); dimension r−1.
inline HRep box_w(const HNData& hn, const Rat& t, const Permutation& w) {
    require_projective(hn);
    return slope_region(permuted_sigma(hn, w), t);
}

/// A big class a(ξ − μ_ℓ f) + b f together with the Schubert label w of the flag.
struct BodySpec {
    HNData hn;
    Rat a;
    Rat b;
    Permutation w;

    BodySpec(HNData hn_, Rat a_, Rat b_, Permutation w_)
        : hn(std::move(hn_)), a(std::move(a_)), b(std::move(b_)), w(std::move(w_)) {
        require_projective(hn);
        if (a <= 0 || b <= 0) throw Error(ErrorKind::NotBig, "body needs a big class (a > 0 and b > 0)");
        if (w.size() != hn.rank()) throw Error(ErrorKind::InvalidArgument, "permutation size must equal rank");
    }

    DivisorClass divisor() const { return DivisorClass::from_ab(hn, a, b); }
    Rat t_star() const { return b - a * (hn.mu_max() - hn.mu_min()); }
};

namespace detail {

// ν_i >= 0, ν_1 <= b, Σ_{i≥2} ν_i <= a, then
// Σ_{i≥2} σ_{w(i−1)} ν_i + σ_{w(r)} (a − Σ_{i≥2} ν_i) >= aμ_ℓ − (b − ν_1).
inline HRep body_hrep(const HNData& hn, const Rat& a, const Rat& b, const Permutation& w) {
    const unsigned r = hn.rank();
    const RatVec c = permuted_sigma(hn, w);
    HRep h(r);
    for (unsigned i = 0; i < r; ++i) {
        RatVec e(r, Rat(0));
        e[i] = -1;
        h.add(std::move(e), Rat(0));
    }
    RatVec e1(r, Rat(0));
    e1[0] = 1;
    h.add(std::move(e1), b);
    RatVec tail(r, Rat(1));
    tail[0] = 0;
    h.add(std::move(tail), a);
    RatVec slope(r);
    slope[0] = 1;
    for (unsigned i = 1; i < r; ++i) slope[i] = c[0] - c[i];
    h.add(std::move(slope), b - a * hn.mu_max() + a * c[0]);
    return h;
}

} // namespace detail

/// Δ_{Y•}(η) ⊂ R^r for the flag in Schubert cell w.
inline HRep body(const BodySpec& spec) { return detail::body_hrep(spec.hn, spec.a, spec.b, spec.w); }

/// Δ_{Y•}(ξ − μ_1 f), the nef class on the boundary of the nef cone.
/// For semi-stable data this is the degenerate slab {0} × Δ_{r−1}.
inline HRep body_nef_min(const HNData& hn, const Permutation& w) {
    require_projective(hn);
    return detail::body_hrep(hn, Rat(1), hn.mu_max() - hn.mu_min(), w);
}

/// The slice ν_1 = τ as a polytope in (ν_2, …, ν_r): a·□^w_{μ_ℓ − (b−τ)/a}.
inline HRep slice(const BodySpec& spec, const Rat& tau) {
    if (tau < 0 || tau > spec.b) throw Error(ErrorKind::TauOutOfRange, "slice parameter must lie in [0, b]");
    const Rat t = spec.hn.mu_max() - (spec.b - tau) / spec.a;
    return scale_translate(box_w(spec.hn, t, spec.w), spec.a, RatVec(spec.hn.rank() - 1, Rat(0)));
}

/// Image of the body under the first coordinate projection.
inline std::pair<Rat, Rat> projection_interval(const BodySpec& spec) { return {Rat(0), spec.b}; }

/**
 * @brief The global Newton-Okounkov cone in coordinates (ν_1, …, ν_r, a, b).
 *
 * Every inequality is homogeneous; the fiber over a big (a, b) is body().
 */
struct GlobalBody {
    HNData hn;
    Permutation w;
    HRep cone;

    /// Fiber over the class a(ξ − μ_ℓ f) + b f, as an H-rep in R^r.
    HRep slice_at(const Rat& a, const Rat& b) const {
        const std::size_t r = hn.rank();
        HRep h(r);
        for (const auto& s : cone.halfspaces()) {
            RatVec normal(s.normal.begin(), s.normal.begin() + static_cast<long>(r));
            h.add(std::move(normal), s.offset - s.normal[r] * a - s.normal[r + 1] * b);
        }
        return h;
    }
};

inline GlobalBody global_body(const HNData& hn, const Permutation& w) {
    require_projective(hn);
    const unsigned r = hn.rank();
    if (w.size() != r) throw Error(ErrorKind::InvalidArgument, "permutation size must equal rank");
    const RatVec c = permuted_sigma(hn, w);
    const std::size_t n = r + 2;
    const std::size_t ia = r, ib = r + 1;
    HRep h(n);
    for (unsigned i = 0; i < r; ++i) {
        RatVec e(n, Rat(0));
        e[i] = -1;
        h.add(std::move(e), Rat(0));
    }
    RatVec na(n, Rat(0));
    na[ia] = -1;
    h.add(std::move(na), Rat(0));
    RatVec first(n, Rat(0));
    first[0] = 1;
    first[ib] = -1;
    h.add(std::move(first), Rat(0));
    RatVec tail(n, Rat(1));
    tail[0] = 0;
    tail[ia] = -1;
    tail[ib] = 0;
    h.add(std::move(tail), Rat(0));
    RatVec slope(n, Rat(0));
    slope[0] = 1;
    for (unsigned i = 1; i < r; ++i) slope[i] = c[0] - c[i];
    slope[ia] = hn.mu_max() - c[0];
    slope[ib] = -1;
    h.add(std::move(slope), Rat(0));
    return {hn, w, std::move(h)};
}

/// HNData already is gr(HN•(E)), so bodies agree exactly when the data do.
inline bool depends_only_on_graded(const HNData& a, const HNData& b) { return a == b; }

} // namespace okb
