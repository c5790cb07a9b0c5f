#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace xlag;

TEST(Laguerre, RecurrenceMatchesSeries) {
    for (const auto& a : {Scalar(0), make_scalar(1, 2), make_scalar(-7, 2), make_scalar(5, 3), Scalar(-2)})
        for (int n = 0; n <= 9; ++n) EXPECT_EQ(laguerre_poly(n, a), oracle::series_laguerre(n, a)) << n << " " << a;
}

TEST(Laguerre, NegatedArgument) {
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(laguerre_poly(n, make_scalar(-3, 2), -1), oracle::at_minus(oracle::series_laguerre(n, make_scalar(-3, 2))));
}

TEST(Laguerre, RejectsBadArguments) {
    EXPECT_THROW(laguerre_poly(-1, 0), std::invalid_argument);
    EXPECT_THROW(laguerre_poly(LaguerreSpec{2, 0, 3}), std::invalid_argument);
    EXPECT_THROW(OscParams(0, 1), std::invalid_argument);
}

TEST(Classical, SpectrumIsEquallySpaced) {
    for (const auto& w : {Scalar(1), Scalar(2), make_scalar(1, 2)})
        for (int l = 0; l <= 4; ++l) {
            OscParams p(w, l);
            auto v = partner_potentials(catalog_superpotential(1, p), p).first;
            for (int n = 0; n <= 8; ++n) {
                ASSERT_TRUE(schrodinger_residual(v, classical_eigenfunction(n, p), 2 * n * w, p).is_zero());
                EXPECT_FALSE(schrodinger_residual(v, classical_eigenfunction(n, p), 2 * n * w + 1, p).is_zero());
            }
        }
}

TEST(Classical, GroundStateFromSuperpotential) {
    OscParams p(2, 3);
    WaveFunction g = ground_state(catalog_superpotential(1, p));
    EXPECT_TRUE(proportionality(g, classical_eigenfunction(0, p)).has_value());
    EXPECT_TRUE(is_normalizable(g));
}

TEST(Classical, GramDiagonalMatchesGammaFormula) {
    OscParams p(2, 1);
    GramResult g = orthogonality_matrix(p, 4, QuadratureConfig{});
    for (int n = 0; n <= 4; ++n) EXPECT_NEAR(g.G[n][n] / oracle::classical_norm(n, 1, 2), 1.0, 1e-10);
    EXPECT_LT(max_offdiag_normalized(g.G), 1e-9);
}
