#pragma once

#include "okb/okb.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace okb::test {

// Named data sets used across the suites.
inline HNData hn_a() { return HNData({{1, Rat(0)}, {1, Rat(1)}}); }
inline HNData hn_b() { return HNData({{2, Rat(0)}, {1, Rat(2)}}); }
inline HNData hn_s(unsigned r, const Rat& mu) { return HNData::semistable(r, mu); }

inline Rat q(long n, long d = 1) { return make_rat(n, d); }

inline RatVec vec(std::initializer_list<Rat> xs) { return RatVec(xs); }

inline std::vector<RatVec> sorted(std::vector<RatVec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// Small deterministic generator of rationals, HN data, permutations and polytopes.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// n/d with |n| <= span·d and 1 <= d <= max_den.
    Rat rational(long span, long max_den) {
        const long d = integer(1, max_den);
        return make_rat(integer(-span * d, span * d), d);
    }

    Rat positive(long span, long max_den) {
        const long d = integer(1, max_den);
        return make_rat(integer(1, span * d), d);
    }

    /// Lengths 1..max_len, total rank in [min_rank, max_rank], slopes with denominators <= max_den.
    HNData hn(unsigned max_len, unsigned min_rank, unsigned max_rank, long max_den = 6) {
        for (;;) {
            const unsigned len = static_cast<unsigned>(integer(1, max_len));
            if (len > max_rank) continue;
            std::set<Rat> slopes;
            while (slopes.size() < len) slopes.insert(rational(3, max_den));
            std::vector<unsigned> ranks(len, 1);
            unsigned total = len;
            const unsigned target = static_cast<unsigned>(integer(std::max<long>(min_rank, len), max_rank));
            while (total < target) {
                ++ranks[static_cast<std::size_t>(integer(0, len - 1))];
                ++total;
            }
            std::vector<HNQuotient> qs;
            std::size_t i = 0;
            for (const auto& s : slopes) qs.push_back({ranks[i++], s});
            return HNData(std::move(qs));
        }
    }

    Permutation permutation(unsigned r) {
        std::vector<unsigned> w(r);
        for (unsigned i = 0; i < r; ++i) w[i] = i + 1;
        std::shuffle(w.begin(), w.end(), rng_);
        return Permutation(std::move(w));
    }

    /// Random bounded full-dimensional polytope: a box cut by a few random half-spaces through its interior.
    HRep polytope(std::size_t dim, unsigned cuts) {
        RatVec lo(dim), hi(dim), centre(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            lo[i] = rational(2, 3);
            hi[i] = lo[i] + positive(2, 3);
            centre[i] = (lo[i] + hi[i]) / 2;
        }
        HRep h = box(lo, hi);
        for (unsigned k = 0; k < cuts; ++k) {
            RatVec n(dim);
            bool zero = true;
            for (auto& c : n) {
                c = Rat(integer(-3, 3));
                zero = zero && c == 0;
            }
            if (zero) n[0] = 1;
            h.add(n, dot(n, centre) + positive(1, 4));
        }
        return h;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace okb::test
