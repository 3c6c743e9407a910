#pragma once

#include "okb/polynomial.hpp"
#include "okb/rational.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace okb {

/// {x : normal·x <= offset}
struct HalfSpace {
    RatVec normal;
    Rat offset;

    bool contains(const RatVec& x) const { return dot(normal, x) <= offset; }
    bool tight(const RatVec& x) const { return dot(normal, x) == offset; }

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/**
 * @brief Half-space representation of a convex polyhedron in R^dim.
 *
 * Normals are nonzero, except in dimension 0 where every constraint is the
 * constant condition 0 <= offset. Constraints keep their insertion order.
 */
class HRep {
public:
    explicit HRep(std::size_t dim = 0) : dim_(dim) {}

    HRep(std::size_t dim, std::vector<HalfSpace> halfspaces) : dim_(dim) {
        for (auto& h : halfspaces) push(std::move(h));
    }

    std::size_t dim() const { return dim_; }
    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

    /// Adds normal·x <= offset. A zero normal in positive dimension is a
    /// constant condition: dropped when it holds, otherwise the whole set
    /// collapses to the canonical empty representation {x_1 <= -1, -x_1 <= 0}.
    HRep& add(RatVec normal, Rat offset) {
        if (normal.size() != dim_) throw Error(ErrorKind::InvalidArgument, "halfspace normal has wrong length");
        bool zero = std::all_of(normal.begin(), normal.end(), [](const Rat& c) { return c == 0; });
        if (zero && dim_ > 0) {
            if (offset >= 0) return *this;
            RatVec e(dim_, Rat(0));
            e[0] = 1;
            halfspaces_.push_back({e, Rat(-1)});
            e[0] = -1;
            halfspaces_.push_back({e, Rat(0)});
            return *this;
        }
        halfspaces_.push_back({std::move(normal), std::move(offset)});
        return *this;
    }

    bool contains(const RatVec& x) const {
        return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const HalfSpace& h) { return h.contains(x); });
    }

    friend bool operator==(const HRep&, const HRep&) = default;

private:
    void push(HalfSpace h) {
        if (h.normal.size() != dim_) throw Error(ErrorKind::InvalidArgument, "halfspace normal has wrong length");
        if (dim_ > 0 && std::all_of(h.normal.begin(), h.normal.end(), [](const Rat& c) { return c == 0; }))
            throw Error(ErrorKind::InvalidArgument, "halfspace normal is the zero vector");
        halfspaces_.push_back(std::move(h));
    }

    std::size_t dim_;
    std::vector<HalfSpace> halfspaces_;
};

/// Vertex representation; vertices are distinct, extreme and sorted lexicographically.
struct VRep {
    std::size_t dim = 0;
    std::vector<RatVec> vertices;

    friend bool operator==(const VRep&, const VRep&) = default;
};

namespace linalg {

/// Row-reduces `m` in place and returns its rank.
inline std::size_t row_reduce(std::vector<RatVec>& m, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < m[r].size(); ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank(std::vector<RatVec> rows, std::size_t cols) { return row_reduce(rows, cols); }

/// Unique solution of the square system A x = b, if A is nonsingular.
inline std::optional<RatVec> solve(const std::vector<RatVec>& A, const RatVec& b) {
    const std::size_t n = A.size();
    std::vector<RatVec> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = A[i];
        m[i].push_back(b[i]);
    }
    if (row_reduce(m, n) < n) return std::nullopt;
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

/// Basis of {x : rows·x = 0}.
inline std::vector<RatVec> nullspace(std::vector<RatVec> rows, std::size_t cols) {
    std::size_t r = row_reduce(rows, cols);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t c = 0;
        while (rows[i][c] == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][free] / rows[i][pivot_col[i]];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rat determinant(std::vector<RatVec> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Affine dimension of a point set (-1 for the empty set).
inline long affine_dim(const std::vector<RatVec>& pts) {
    if (pts.empty()) return -1;
    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVec d(pts[i].size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
        diffs.push_back(std::move(d));
    }
    return static_cast<long>(rank(std::move(diffs), pts[0].size()));
}

/// Calls f(indices) for every k-subset of {0..n-1}, in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace linalg

/// Simplex in R^n given by n+1 affinely independent vertices.
class Simplex {
public:
    explicit Simplex(std::vector<RatVec> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty()) throw Error(ErrorKind::DegenerateSimplex, "simplex without vertices");
        const std::size_t n = vertices_.size() - 1;
        for (const auto& v : vertices_) {
            if (v.size() != n) throw Error(ErrorKind::DegenerateSimplex, "simplex needs exactly dim+1 vertices");
        }
        det_ = linalg::determinant(edge_matrix());
        if (det_ == 0) throw Error(ErrorKind::DegenerateSimplex, "simplex vertices are affinely dependent");
    }

    /// The simplex conv(0, e_1, ..., e_n).
    static Simplex standard(std::size_t n) {
        std::vector<RatVec> v(n + 1, RatVec(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) v[i + 1][i] = 1;
        return Simplex(std::move(v));
    }

    std::size_t dim() const { return vertices_.size() - 1; }
    const std::vector<RatVec>& vertices() const { return vertices_; }

    /// Row i, column j holds (v_{j+1} - v_0)_i.
    std::vector<RatVec> edge_matrix() const {
        const std::size_t n = dim();
        std::vector<RatVec> m(n, RatVec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = vertices_[j + 1][i] - vertices_[0][i];
        return m;
    }

    Rat abs_det() const { return abs(det_); }
    Rat volume() const { return abs(det_) / Rat(factorial(static_cast<unsigned>(dim()))); }

private:
    std::vector<RatVec> vertices_;
    Rat det_;
};

namespace detail {

inline std::vector<RatVec> candidate_vertices(const HRep& h) {
    const std::size_t n = h.dim();
    const auto& hs = h.halfspaces();
    std::set<RatVec> found;
    linalg::for_each_subset(hs.size(), n, [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVec> A;
        RatVec b;
        for (std::size_t i : idx) {
            A.push_back(hs[i].normal);
            b.push_back(hs[i].offset);
        }
        auto x = linalg::solve(A, b);
        if (x && h.contains(*x)) found.insert(std::move(*x));
    });
    return {found.begin(), found.end()};
}

inline bool has_recession_ray(const HRep& h) {
    const std::size_t n = h.dim();
    if (n == 0) return false;
    const auto& hs = h.halfspaces();
    auto recedes = [&](const RatVec& d) {
        return std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& s) { return dot(s.normal, d) <= 0; });
    };
    bool ray = false;
    linalg::for_each_subset(hs.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
        if (ray) return;
        std::vector<RatVec> rows;
        for (std::size_t i : idx) rows.push_back(hs[i].normal);
        auto null = linalg::nullspace(rows, n);
        if (null.size() != 1) return;
        RatVec d = null[0];
        if (recedes(d)) ray = true;
        for (auto& c : d) c = -c;
        if (recedes(d)) ray = true;
    });
    return ray;
}

} // namespace detail

/**
 * @brief Exact vertex enumeration.
 *
 * Every dim-subset of constraints is solved exactly; feasible unique
 * solutions are kept and deduplicated. Returns an empty vertex list for an
 * empty set and throws Error{Unbounded} when the set is nonempty and
 * contains a ray.
 */
inline VRep vertex_enumerate(const HRep& h) {
    const std::size_t n = h.dim();
    std::vector<RatVec> normals;
    for (const auto& s : h.halfspaces()) normals.push_back(s.normal);
    auto lineality = linalg::nullspace(normals, n);
    if (!lineality.empty()) {
        // Not pointed: nonempty iff the slice orthogonal to the lineality space is.
        HRep cut = h;
        for (const auto& u : lineality) {
            RatVec neg = u;
            for (auto& c : neg) c = -c;
            cut.add(u, Rat(0));
            cut.add(neg, Rat(0));
        }
        if (detail::candidate_vertices(cut).empty()) return {n, {}};
        throw Error(ErrorKind::Unbounded, "polyhedron contains a line");
    }
    auto verts = detail::candidate_vertices(h);
    if (verts.empty()) return {n, {}};
    if (detail::has_recession_ray(h)) throw Error(ErrorKind::Unbounded, "polyhedron contains a ray");
    return {n, std::move(verts)};
}

inline bool is_bounded(const HRep& h) {
    try {
        vertex_enumerate(h);
        return true;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Unbounded) return false;
        throw;
    }
}

namespace detail {

class Triangulator {
public:
    Triangulator(const HRep& h, const VRep& v) : verts_(v.vertices) {
        for (const auto& s : h.halfspaces()) {
            std::vector<std::size_t> on;
            for (std::size_t i = 0; i < verts_.size(); ++i)
                if (s.tight(verts_[i])) on.push_back(i);
            tight_.push_back(std::move(on));
        }
    }

    // Star from the lexicographically smallest vertex of `face` (its first
    // index) over the facets of `face` that avoid it.
    std::vector<std::vector<std::size_t>> run(const std::vector<std::size_t>& face, std::size_t k) const {
        if (face.size() == k + 1) return {face};
        const std::size_t apex = face.front();
        std::set<std::vector<std::size_t>> facets;
        for (const auto& on : tight_) {
            std::vector<std::size_t> f;
            std::set_intersection(face.begin(), face.end(), on.begin(), on.end(), std::back_inserter(f));
            if (f.size() < k || f.size() == face.size()) continue;
            if (std::binary_search(f.begin(), f.end(), apex)) continue;
            if (facets.count(f)) continue;
            if (linalg::affine_dim(points(f)) != static_cast<long>(k) - 1) continue;
            facets.insert(std::move(f));
        }
        std::vector<std::vector<std::size_t>> out;
        for (const auto& f : facets) {
            for (auto s : run(f, k - 1)) {
                s.insert(s.begin(), apex);
                out.push_back(std::move(s));
            }
        }
        return out;
    }

    std::vector<RatVec> points(const std::vector<std::size_t>& idx) const {
        std::vector<RatVec> p;
        for (std::size_t i : idx) p.push_back(verts_[i]);
        return p;
    }

private:
    std::vector<RatVec> verts_;
    std::vector<std::vector<std::size_t>> tight_;
};

} // namespace detail

/**
 * @brief Deterministic triangulation into full-dimensional simplices.
 *
 * Returns an empty list for empty or lower-dimensional input.
 */
inline std::vector<Simplex> triangulate(const HRep& h) {
    VRep v = vertex_enumerate(h);
    const std::size_t n = h.dim();
    if (v.vertices.empty() || linalg::affine_dim(v.vertices) < static_cast<long>(n)) return {};
    detail::Triangulator tri(h, v);
    std::vector<std::size_t> all(v.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<Simplex> out;
    for (const auto& s : tri.run(all, n)) out.emplace_back(tri.points(s));
    return out;
}

inline Rat volume(const HRep& h) {
    Rat total = 0;
    for (const auto& s : triangulate(h)) total += s.volume();
    return total;
}

/// ∫ y^e over conv(0, e_1, ..., e_n) = (∏ e_i!) / (n + |e|)!
inline Rat integrate_monomial_standard(const Exponents& e) {
    Int num = 1;
    unsigned total = 0;
    for (unsigned k : e) {
        num *= factorial(k);
        total += k;
    }
    Rat q(num, factorial(static_cast<unsigned>(e.size()) + total));
    q.canonicalize();
    return q;
}

/// Exact ∫_s p dx by pulling p back along the affine parametrization of s.
inline Rat integrate_polynomial(const Simplex& s, const Polynomial& p) {
    if (p.dim() != s.dim()) throw Error(ErrorKind::InvalidArgument, "polynomial and simplex dimensions differ");
    const Polynomial q = p.pullback(s.vertices().front(), s.edge_matrix(), s.dim());
    Rat sum = 0;
    for (const auto& [e, c] : q.terms()) sum += c * integrate_monomial_standard(e);
    return sum * s.abs_det();
}

inline Rat integrate_monomial_simplex(const Simplex& s, const Exponents& exponents) {
    if (exponents.size() != s.dim()) throw Error(ErrorKind::InvalidArgument, "exponent vector has wrong length");
    return integrate_polynomial(s, Polynomial::monomial(exponents));
}

inline Rat integrate_polynomial(const HRep& h, const Polynomial& p) {
    if (p.dim() != h.dim()) throw Error(ErrorKind::InvalidArgument, "polynomial and polytope dimensions differ");
    Rat total = 0;
    for (const auto& s : triangulate(h)) total += integrate_polynomial(s, p);
    return total;
}

/// {c·x + shift : x ∈ h}
inline HRep scale_translate(const HRep& h, const Rat& c, const RatVec& shift) {
    if (c <= 0) throw Error(ErrorKind::InvalidArgument, "scale factor must be positive");
    if (shift.size() != h.dim()) throw Error(ErrorKind::InvalidArgument, "shift has wrong length");
    std::vector<HalfSpace> out;
    for (const auto& s : h.halfspaces()) out.push_back({s.normal, c * s.offset + dot(s.normal, shift)});
    return HRep(h.dim(), std::move(out));
}

inline VRep scale_translate(const VRep& v, const Rat& c, const RatVec& shift) {
    VRep out{v.dim, {}};
    for (const auto& x : v.vertices) {
        RatVec y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = c * x[i] + shift[i];
        out.vertices.push_back(std::move(y));
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

/// p(x) ↦ p((y - shift)/c): the integrand matching scale_translate.
inline Polynomial pullback_scale_translate(const Polynomial& p, const Rat& c, const RatVec& shift) {
    const std::size_t n = p.dim();
    std::vector<RatVec> M(n, RatVec(n, Rat(0)));
    RatVec origin(n);
    for (std::size_t i = 0; i < n; ++i) {
        M[i][i] = 1 / c;
        origin[i] = -shift[i] / c;
    }
    return p.pullback(origin, M, n);
}

/// The full-dimensional standard simplex {x >= 0, Σx <= side}.
inline HRep standard_simplex(std::size_t n, const Rat& side = Rat(1)) {
    HRep h(n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVec e(n, Rat(0));
        e[i] = -1;
        h.add(e, Rat(0));
    }
    if (n > 0) h.add(RatVec(n, Rat(1)), side);
    return h;
}

inline HRep box(const RatVec& lo, const RatVec& hi) {
    const std::size_t n = lo.size();
    HRep h(n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVec e(n, Rat(0));
        e[i] = -1;
        h.add(e, -lo[i]);
        e[i] = 1;
        h.add(e, hi[i]);
    }
    return h;
}

} // namespace okb
