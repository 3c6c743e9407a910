#include "support.hpp"

#include "okb/oracles.hpp"

#include <gtest/gtest.h>

using namespace okb;
using namespace okb::test;
using namespace okb::oracles;

namespace {

bool within(const McResult& r, double exact, double k = 4.0) { return std::abs(r.estimate - exact) <= k * r.std_error; }

// Weighted integrand for hn_b at t = 1, in β_2: max{2β_2 − 1, 0}·(1 − β_2).
Integrand wolfe_hn_b() {
    return product(clamped_affine({2.0}, -1.0), [](std::span<const double> x) { return 1.0 - x[0]; });
}

} // namespace

TEST(MonteCarlo, ConstantOnTriangle) {
    const McResult r = mc_integrate_simplex(2, [](std::span<const double>) { return 1.0; }, {});
    EXPECT_DOUBLE_EQ(r.estimate, 0.5);
    EXPECT_EQ(r.std_error, 0.0);
}

TEST(MonteCarlo, ClampedAffineOnSegment) {
    const McResult r = mc_integrate_simplex(1, clamped_affine({1.0}, -0.5), {200000, 3, 1});
    EXPECT_TRUE(within(r, 1.0 / 8)) << r.estimate << " ± " << r.std_error;
    EXPECT_NEAR(2 * r.estimate, chen_volume(hn_a(), q(1, 2)).get_d(), 8 * r.std_error);
}

TEST(MonteCarlo, WolfeIntegrand) {
    const McResult r = mc_integrate_simplex(1, wolfe_hn_b(), {200000, 5, 4});
    EXPECT_TRUE(within(r, 1.0 / 24)) << r.estimate << " ± " << r.std_error;
}

TEST(MonteCarlo, PolynomialIntegrand) {
    const Polynomial p = Polynomial::variable(2, 1) * Rat(2);
    const McResult r = mc_integrate_simplex(2, polynomial_integrand(p), {200000, 9, 2});
    EXPECT_TRUE(within(r, integrate_polynomial(standard_simplex(2), p).get_d()));
}

TEST(MonteCarlo, Validation) {
    EXPECT_THROW(mc_integrate_simplex(0, clamped_affine({}, 1.0), {}), Error);
    EXPECT_THROW(mc_integrate_simplex(1, clamped_affine({1.0}, 0.0), {0, 1, 1}), Error);
}

TEST(MonteCarlo, SeedDeterminism) {
    const McConfig cfg{50000, 77, 3};
    const McResult a = mc_integrate_simplex(3, clamped_affine({1.0, -2.0, 0.5}, 0.3), cfg);
    const McResult b = mc_integrate_simplex(3, clamped_affine({1.0, -2.0, 0.5}, 0.3), cfg);
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_EQ(a.std_error, b.std_error);
    const McResult c = mc_integrate_simplex(3, clamped_affine({1.0, -2.0, 0.5}, 0.3), {50000, 78, 3});
    EXPECT_NE(a.estimate, c.estimate);
}

TEST(MonteCarlo, WorkedValuesSecondWitness) {
    // Each worked volume recomputed from its integral over a standard simplex.
    const McConfig cfg{400000, 2024, 4};
    const McResult hn_a_0 = mc_integrate_simplex(1, clamped_affine({1.0}, 0.0), cfg);
    EXPECT_TRUE(within(hn_a_0, 0.5));
    const McResult hn_a_half = mc_integrate_simplex(1, clamped_affine({1.0}, -0.5), cfg);
    EXPECT_TRUE(within(hn_a_half, 0.125));
    // s = (0, 0, 2) in coordinates (λ_2, λ_3): 2λ_3 − 1 on Δ_2.
    const McResult hn_b_1 = mc_integrate_simplex(2, clamped_affine({0.0, 2.0}, -1.0), cfg);
    EXPECT_TRUE(within(hn_b_1, 1.0 / 24));
    const McResult restricted = mc_integrate_simplex(
        1, [](std::span<const double> x) { return x[0] >= 0.5 ? 1.0 - x[0] : 0.0; }, cfg);
    EXPECT_TRUE(within(restricted, 1.0 / 8));
    const McResult nef_min = mc_volume_box(body_nef_min(hn_b(), Permutation::identity(3)), {0, 0, 0}, {2, 1, 1}, cfg);
    EXPECT_TRUE(within(nef_min, 1.0 / 3));
}

TEST(MonteCarlo, ConsistencyRate) {
    // |estimate − exact| <= 4σ should hold in at least 99% of independent trials.
    Gen g(81);
    int hits = 0;
    const int trials = 200;
    for (int i = 0; i < trials; ++i) {
        const HNData hn = g.hn(3, 2, 4);
        const Rat t = hn.mu_min() - 1 + (hn.mu_max() - hn.mu_min() + 1) * q(g.integer(0, 5), 6);
        const RatVec s = s_vector(hn);
        std::vector<double> coeffs;
        for (std::size_t k = 1; k < s.size(); ++k) coeffs.push_back(to_double(s[k] - s[0]));
        const McResult r = mc_integrate_simplex(
            hn.rank() - 1, clamped_affine(coeffs, to_double(s[0] - t)), {4000, static_cast<std::uint64_t>(i) + 1, 1});
        const double exact = to_double(chen_volume(hn, t) / Rat(factorial(hn.rank())));
        if (std::abs(r.estimate - exact) <= 4 * r.std_error + 1e-12 * std::max(1.0, exact)) ++hits;
    }
    EXPECT_GE(hits, trials * 99 / 100);
}

TEST(BruteArea, Examples) {
    EXPECT_EQ(brute_volume_2d({2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}}), 1);
    EXPECT_EQ(brute_volume_2d({2, {{Rat(0), Rat(0)}, {Rat(0), q(1, 2)}, {q(1, 2), Rat(0)}}}), q(1, 8));
    EXPECT_EQ(brute_volume_2d({2, {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}}), 0);
}

TEST(BruteArea, AgreesWithTriangulation) {
    Gen g(82);
    for (int i = 0; i < 40; ++i) {
        const HRep h = g.polytope(2, static_cast<unsigned>(g.integer(0, 4)));
        EXPECT_EQ(brute_volume_2d(vertex_enumerate(h)), volume(h));
    }
}
