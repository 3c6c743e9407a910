#include "support.hpp"

#include "okb/oracles.hpp"

#include <gtest/gtest.h>

using namespace okb;
using okb::test::q;
using okb::test::sorted;

namespace {

HRep triangle_cut() {
    HRep h = standard_simplex(2);
    h.add({Rat(-2), Rat(0)}, Rat(-1)); // 2x >= 1
    return h;
}

Rat factorial_loop(unsigned n) {
    Rat f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

TEST(Rational, ParseAndPrintCanonical) {
    EXPECT_EQ(parse_rat("6/4"), q(3, 2));
    EXPECT_EQ(parse_rat("-7"), q(-7));
    EXPECT_EQ(parse_rat("2/-4"), q(-1, 2));
    EXPECT_EQ(to_string(q(4, -6)), "-2/3");
    EXPECT_EQ(to_string(q(8, 4)), "2");
}

TEST(Rational, ParseRejectsGarbage) {
    for (const char* s : {"", "1/0", "abc", "1/2/3", "0.5", "/3"}) {
        try {
            parse_rat(s);
            ADD_FAILURE() << "accepted '" << s << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument) << s;
        }
    }
}

TEST(HRepTest, ZeroNormalRejectedInConstructor) {
    EXPECT_THROW(HRep(2, {{{Rat(0), Rat(0)}, Rat(1)}}), Error);
}

TEST(HRepTest, ConstantConstraintsInAdd) {
    HRep h = standard_simplex(2);
    h.add({Rat(0), Rat(0)}, Rat(3));
    EXPECT_EQ(h, standard_simplex(2));
    h.add({Rat(0), Rat(0)}, Rat(-1));
    EXPECT_TRUE(vertex_enumerate(h).vertices.empty());
}

TEST(VertexEnumerate, UnitSquare) {
    VRep v = vertex_enumerate(box({Rat(0), Rat(0)}, {Rat(1), Rat(1)}));
    EXPECT_EQ(v.vertices, sorted({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}));
}

TEST(VertexEnumerate, StandardSimplex) {
    VRep v = vertex_enumerate(standard_simplex(2));
    EXPECT_EQ(v.vertices, sorted({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}));
}

TEST(VertexEnumerate, CutTriangle) {
    VRep v = vertex_enumerate(triangle_cut());
    EXPECT_EQ(v.vertices, sorted({{q(1, 2), Rat(0)}, {Rat(1), Rat(0)}, {q(1, 2), q(1, 2)}}));
}

TEST(VertexEnumerate, UnboundedThrows) {
    HRep quadrant(2);
    quadrant.add({Rat(-1), Rat(0)}, Rat(0)).add({Rat(0), Rat(-1)}, Rat(0));
    try {
        vertex_enumerate(quadrant);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Unbounded);
    }
    HRep strip(2);
    strip.add({Rat(1), Rat(0)}, Rat(1)).add({Rat(-1), Rat(0)}, Rat(0));
    EXPECT_FALSE(is_bounded(strip));
    EXPECT_THROW(volume(strip), Error);
}

TEST(VertexEnumerate, EmptySetHasNoVertices) {
    HRep h = standard_simplex(2);
    h.add({Rat(1), Rat(1)}, Rat(-1));
    EXPECT_TRUE(vertex_enumerate(h).vertices.empty());
    EXPECT_EQ(volume(h), 0);
}

TEST(VertexEnumerate, EmptyStripWithLineality) {
    HRep h(2);
    h.add({Rat(1), Rat(0)}, Rat(0)).add({Rat(-1), Rat(0)}, Rat(-1));
    EXPECT_TRUE(vertex_enumerate(h).vertices.empty());
}

TEST(Volume, Examples) {
    EXPECT_EQ(volume(standard_simplex(2)), q(1, 2));
    EXPECT_EQ(volume(triangle_cut()), q(1, 8));
    EXPECT_EQ(volume(box(RatVec(3, Rat(0)), RatVec(3, Rat(1)))), 1);
}

TEST(Volume, LowerDimensionalIsZero) {
    HRep seg = box({Rat(0), Rat(0)}, {Rat(1), Rat(0)});
    EXPECT_EQ(volume(seg), 0);
    EXPECT_TRUE(triangulate(seg).empty());
}

TEST(Triangulate, Examples) {
    auto t = triangulate(standard_simplex(2));
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(sorted(t[0].vertices()), sorted({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}));

    auto sq = triangulate(box({Rat(0), Rat(0)}, {Rat(1), Rat(1)}));
    ASSERT_EQ(sq.size(), 2u);
    for (const auto& s : sq) EXPECT_EQ(s.volume(), q(1, 2));

    auto cut = triangulate(triangle_cut());
    ASSERT_EQ(cut.size(), 1u);
    EXPECT_EQ(cut[0].volume(), q(1, 8));
}

TEST(Triangulate, DeterministicOrder) {
    okb::test::Gen g(11);
    HRep h = g.polytope(3, 3);
    auto a = triangulate(h), b = triangulate(h);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].vertices(), b[i].vertices());
}

TEST(SimplexTest, DegenerateThrows) {
    try {
        Simplex({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateSimplex);
    }
}

TEST(Integrate, MonomialExamples) {
    EXPECT_EQ(integrate_monomial_simplex(Simplex::standard(1), {1}), q(1, 2));
    EXPECT_EQ(integrate_monomial_simplex(Simplex::standard(2), {1, 0}), q(1, 6));
    EXPECT_EQ(integrate_monomial_simplex(Simplex::standard(2), {0, 0}), q(1, 2));
}

TEST(Integrate, PolynomialExamples) {
    const Polynomial two_y = Polynomial::variable(2, 1) * Rat(2);
    EXPECT_EQ(integrate_polynomial(standard_simplex(2), two_y), q(1, 3));

    HRep upper = standard_simplex(2);
    upper.add({Rat(0), Rat(-1)}, q(-1, 2));
    EXPECT_EQ(integrate_polynomial(upper, two_y - Polynomial::constant(2, Rat(1))), q(1, 24));

    HRep empty = standard_simplex(2);
    empty.add({Rat(1), Rat(0)}, Rat(-1));
    EXPECT_EQ(integrate_polynomial(empty, two_y), 0);
}

TEST(Integrate, DimensionMismatchThrows) {
    EXPECT_THROW(integrate_polynomial(standard_simplex(2), Polynomial::variable(3, 0)), Error);
}

TEST(Integrate, PointPolytopeEvaluates) {
    HRep point(0);
    EXPECT_EQ(volume(point), 1);
    EXPECT_EQ(integrate_polynomial(point, Polynomial::constant(0, q(5, 3))), q(5, 3));
}

TEST(ScaleTranslate, Examples) {
    EXPECT_EQ(volume(scale_translate(standard_simplex(2), Rat(2), {Rat(0), Rat(0)})), 2);

    VRep moved = vertex_enumerate(scale_translate(standard_simplex(2), Rat(1), {Rat(1), Rat(0)}));
    EXPECT_EQ(moved.vertices, sorted({{Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(1)}}));

    HRep upper = standard_simplex(2);
    upper.add({Rat(0), Rat(-1)}, q(-1, 2));
    EXPECT_EQ(volume(scale_translate(upper, Rat(3), {Rat(0), Rat(0)})), 9 * volume(upper));
    EXPECT_THROW(scale_translate(upper, Rat(0), {Rat(0), Rat(0)}), Error);
}

// Properties over generated polytopes.

TEST(PolytopeProperty, RoundTrip) {
    okb::test::Gen g(101);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = static_cast<std::size_t>(g.integer(1, 4));
        HRep h = g.polytope(dim, static_cast<unsigned>(g.integer(0, 3)));
        VRep v = vertex_enumerate(h);
        ASSERT_FALSE(v.vertices.empty());
        for (const auto& x : v.vertices) {
            EXPECT_TRUE(h.contains(x));
            std::vector<RatVec> tight;
            for (const auto& s : h.halfspaces())
                if (s.tight(x)) tight.push_back(s.normal);
            EXPECT_EQ(linalg::rank(tight, dim), dim) << "vertex is not extreme";
        }
        for (std::size_t k = 0; k < h.halfspaces().size(); ++k) {
            const auto& s = h.halfspaces()[k];
            std::vector<RatVec> on;
            for (const auto& x : v.vertices)
                if (s.tight(x)) on.push_back(x);
            if (linalg::affine_dim(on) == static_cast<long>(dim) - 1) continue; // supports a facet
            HRep without(dim);
            for (std::size_t j = 0; j < h.halfspaces().size(); ++j)
                if (j != k) without.add(h.halfspaces()[j].normal, h.halfspaces()[j].offset);
            EXPECT_EQ(vertex_enumerate(without), v) << "non-facet constraint is not redundant";
        }
    }
}

TEST(PolytopeProperty, Additivity) {
    okb::test::Gen g(202);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = static_cast<std::size_t>(g.integer(1, 4));
        HRep h = g.polytope(dim, static_cast<unsigned>(g.integer(0, 3)));
        Rat sum = 0;
        for (const auto& s : triangulate(h)) sum += s.volume();
        EXPECT_EQ(sum, volume(h));

        RatVec n(dim, Rat(0));
        n[0] = 1;
        const Rat cut = vertex_enumerate(h).vertices.front()[0] + g.positive(1, 3);
        HRep left = h, right = h;
        left.add(n, cut);
        n[0] = -1;
        right.add(n, -cut);
        EXPECT_EQ(volume(left) + volume(right), volume(h));
    }
}

TEST(PolytopeProperty, MonomialIdentity) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const Simplex s = Simplex::standard(n);
        Exponents e(n, 0);
        auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
            if (i == n) {
                Rat expect = 1;
                unsigned total = 0;
                for (unsigned k : e) {
                    expect *= factorial_loop(k);
                    total += k;
                }
                expect /= factorial_loop(static_cast<unsigned>(n) + total);
                EXPECT_EQ(integrate_monomial_simplex(s, e), expect);
                return;
            }
            for (unsigned k = 0; k <= left; ++k) {
                e[i] = k;
                self(self, i + 1, left - k);
            }
        };
        rec(rec, 0, 6);
    }
}

TEST(PolytopeProperty, MonteCarloAgreement) {
    okb::test::Gen g(303);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t dim = static_cast<std::size_t>(g.integer(1, 4));
        HRep h = g.polytope(dim, static_cast<unsigned>(g.integer(1, 3)));
        VRep v = vertex_enumerate(h);
        std::vector<double> lo(dim, 1e300), hi(dim, -1e300);
        for (const auto& x : v.vertices)
            for (std::size_t i = 0; i < dim; ++i) {
                lo[i] = std::min(lo[i], x[i].get_d());
                hi[i] = std::max(hi[i], x[i].get_d());
            }
        auto mc = oracles::mc_volume_box(h, lo, hi, {200000, static_cast<std::uint64_t>(trial + 1), 2});
        EXPECT_LE(std::abs(mc.estimate - volume(h).get_d()), 4 * mc.std_error + 1e-12)
            << "dim " << dim << " trial " << trial;
    }
}

TEST(PolytopeProperty, AffineInvariance) {
    okb::test::Gen g(404);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t dim = static_cast<std::size_t>(g.integer(1, 3));
        HRep h = g.polytope(dim, static_cast<unsigned>(g.integer(0, 2)));
        Polynomial p(dim);
        for (int k = 0; k < 3; ++k) {
            Exponents e(dim);
            for (auto& x : e) x = static_cast<unsigned>(g.integer(0, 2));
            p.add_term(e, g.rational(2, 4));
        }
        const Rat c = g.positive(3, 3);
        RatVec shift(dim);
        for (auto& s : shift) s = g.rational(2, 3);
        const Rat lhs = integrate_polynomial(scale_translate(h, c, shift), pullback_scale_translate(p, c, shift));
        EXPECT_EQ(lhs, pow(c, static_cast<unsigned>(dim)) * integrate_polynomial(h, p));
    }
}
