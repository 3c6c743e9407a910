#pragma once

#include "okb/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace okb {

/// One semi-stable quotient of the Harder-Narasimhan filtration.
struct HNQuotient {
    unsigned rank;
    Rat slope;

    friend bool operator==(const HNQuotient&, const HNQuotient&) = default;
};

/**
 * @brief Numerical Harder-Narasimhan data (r_i, μ_i), i = 1..ℓ.
 *
 * Slopes must be strictly increasing; the constructor rejects anything else
 * instead of sorting. Degrees d_i = r_i μ_i need not be integers.
 */
class HNData {
public:
    explicit HNData(std::vector<HNQuotient> quotients) : q_(std::move(quotients)) {
        if (q_.empty()) throw Error(ErrorKind::InvalidHN, "HN data needs at least one quotient");
        for (std::size_t i = 0; i < q_.size(); ++i) {
            if (q_[i].rank == 0) throw Error(ErrorKind::InvalidHN, "HN quotient ranks must be positive");
            if (i > 0 && !(q_[i - 1].slope < q_[i].slope))
                throw Error(ErrorKind::InvalidHN, "HN slopes must be strictly increasing");
        }
    }

    static HNData semistable(unsigned rank, const Rat& slope) { return HNData({{rank, slope}}); }

    const std::vector<HNQuotient>& quotients() const { return q_; }
    std::size_t length() const { return q_.size(); }

    unsigned rank() const {
        return std::accumulate(q_.begin(), q_.end(), 0u, [](unsigned s, const HNQuotient& q) { return s + q.rank; });
    }
    Rat degree() const {
        Rat d = 0;
        for (const auto& q : q_) d += q.rank * q.slope;
        return d;
    }
    Rat slope() const { return degree() / rank(); }
    const Rat& mu_min() const { return q_.front().slope; }
    const Rat& mu_max() const { return q_.back().slope; }

    friend bool operator==(const HNData&, const HNData&) = default;

private:
    std::vector<HNQuotient> q_;
};

/// Operations on P(E) need r >= 2.
inline void require_projective(const HNData& hn) {
    if (hn.rank() < 2) throw Error(ErrorKind::InvalidHN, "P(E) operations need total rank >= 2");
}

/// σ = (μ_ℓ,…,μ_ℓ, …, μ_1,…,μ_1), each μ_i repeated r_i times.
inline RatVec sigma_vector(const HNData& hn) {
    RatVec s;
    for (auto it = hn.quotients().rbegin(); it != hn.quotients().rend(); ++it) s.insert(s.end(), it->rank, it->slope);
    return s;
}

/// s = (μ_1,…,μ_1, …, μ_ℓ,…,μ_ℓ).
inline RatVec s_vector(const HNData& hn) {
    RatVec s;
    for (const auto& q : hn.quotients()) s.insert(s.end(), q.rank, q.slope);
    return s;
}

/// xi·ξ + f·f in N^1(P(E)).
struct DivisorClass {
    Rat xi;
    Rat f;

    /// a(ξ − μ_ℓ f) + b f
    static DivisorClass from_ab(const HNData& hn, const Rat& a, const Rat& b) { return {a, b - a * hn.mu_max()}; }

    Rat a() const { return xi; }
    Rat b(const HNData& hn) const { return f + xi * hn.mu_max(); }

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) { return {x.xi + y.xi, x.f + y.f}; }
    friend DivisorClass operator*(const Rat& c, const DivisorClass& x) { return {c * x.xi, c * x.f}; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline bool is_nef(const HNData& hn, const DivisorClass& c) { return c.xi >= 0 && c.f >= -c.xi * hn.mu_min(); }
inline bool is_psef(const HNData& hn, const DivisorClass& c) { return c.xi >= 0 && c.f >= -c.xi * hn.mu_max(); }
inline bool is_big(const HNData& hn, const DivisorClass& c) { return c.xi > 0 && c.f > -c.xi * hn.mu_max(); }
inline bool is_ample(const HNData& hn, const DivisorClass& c) { return c.xi > 0 && c.f > -c.xi * hn.mu_min(); }

/// The two extremal rays of a cone on P(E): ξ − μ f and f.
struct ConeGenerators {
    DivisorClass slope_ray;
    DivisorClass fiber_ray;

    friend bool operator==(const ConeGenerators&, const ConeGenerators&) = default;
};

inline ConeGenerators nef_cone(const HNData& hn) { return {{Rat(1), -hn.mu_min()}, {Rat(0), Rat(1)}}; }
inline ConeGenerators psef_cone(const HNData& hn) { return {{Rat(1), -hn.mu_max()}, {Rat(0), Rat(1)}}; }

inline bool is_semistable(const HNData& hn) { return hn.length() == 1; }

/// (μ_min, μ_max) of E ⊗ F.
inline std::pair<Rat, Rat> tensor_mu_extremes(const HNData& a, const HNData& b) {
    return {a.mu_min() + b.mu_min(), a.mu_max() + b.mu_max()};
}

/// (μ_min, μ_max) of S^m E.
inline std::pair<Rat, Rat> sym_mu_extremes(const HNData& hn, unsigned m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "symmetric power needs m >= 1");
    return {m * hn.mu_min(), m * hn.mu_max()};
}

/// One-line permutation w(1..r), stored 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<unsigned> images) : w_(std::move(images)) {
        std::vector<bool> seen(w_.size() + 1, false);
        for (unsigned v : w_) {
            if (v < 1 || v > w_.size() || seen[v]) throw Error(ErrorKind::InvalidArgument, "not a permutation of 1..r");
            seen[v] = true;
        }
    }

    static Permutation identity(unsigned r) {
        std::vector<unsigned> w(r);
        std::iota(w.begin(), w.end(), 1u);
        return Permutation(std::move(w));
    }

    static Permutation reversal(unsigned r) {
        std::vector<unsigned> w(r);
        for (unsigned i = 0; i < r; ++i) w[i] = r - i;
        return Permutation(std::move(w));
    }

    /// All r! permutations in lexicographic order.
    static std::vector<Permutation> all(unsigned r) {
        std::vector<unsigned> w(r);
        std::iota(w.begin(), w.end(), 1u);
        std::vector<Permutation> out;
        do {
            out.emplace_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        return out;
    }

    std::size_t size() const { return w_.size(); }
    /// w(i) for 1-based i.
    unsigned operator()(unsigned i) const { return w_.at(i - 1); }
    const std::vector<unsigned>& images() const { return w_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<unsigned> w_;
};

struct SymPowerPart {
    std::vector<unsigned> partition; // (m_1, …, m_ℓ), |m| = m
    Int rank;                        // rank of S^{m_1}Q_1 ⊗ ⋯ ⊗ S^{m_ℓ}Q_ℓ
};

struct SymPowerGroup {
    Rat slope;
    Int rank;
    std::vector<SymPowerPart> parts;
};

/// HN quotients of S^m E grouped by slope (strictly increasing).
struct SymPowerHN {
    unsigned m;
    std::vector<SymPowerGroup> groups;

    Int total_rank() const {
        Int t = 0;
        for (const auto& g : groups) t += g.rank;
        return t;
    }
};

/// Calls f(parts) for every composition of m into k nonnegative parts, lexicographically.
template <class F>
void for_each_composition(unsigned m, std::size_t k, F&& f) {
    std::vector<unsigned> parts(k, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == k) {
            parts[i] = left;
            f(static_cast<const std::vector<unsigned>&>(parts));
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            parts[i] = v;
            self(self, i + 1, left - v);
        }
    };
    if (k == 0) return;
    rec(rec, 0, m);
}

inline SymPowerHN sym_power_hn(const HNData& hn, unsigned m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "symmetric power needs m >= 1");
    const auto& q = hn.quotients();
    std::map<Rat, SymPowerGroup> by_slope;
    for_each_composition(m, q.size(), [&](const std::vector<unsigned>& parts) {
        Rat slope = 0;
        Int rank = 1;
        for (std::size_t i = 0; i < q.size(); ++i) {
            slope += parts[i] * q[i].slope;
            rank *= binomial(parts[i] + q[i].rank - 1, q[i].rank - 1);
        }
        auto& g = by_slope[slope];
        g.slope = slope;
        g.rank += rank;
        g.parts.push_back({parts, rank});
    });
    SymPowerHN out{m, {}};
    for (auto& [s, g] : by_slope) out.groups.push_back(std::move(g));
    return out;
}

} // namespace okb
