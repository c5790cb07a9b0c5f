#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace xlag;

TEST(Susy, CatalogPartnersMatchOracle) {
    for (int i = 1; i <= 4; ++i)
        for (int l = 0; l <= 5; ++l)
            for (const auto& w : {Scalar(1), Scalar(2), make_scalar(1, 2)}) {
                OscParams p(w, l);
                auto pr = partner_potentials(catalog_superpotential(i, p), p);
                auto want = oracle::catalog_partners(i, p);
                EXPECT_EQ(pr.first.value, want.first) << "i=" << i << " l=" << l << " w=" << w;
                EXPECT_EQ(pr.second.value, want.second) << "i=" << i << " l=" << l << " w=" << w;
                EXPECT_NO_THROW(shape_invariance_shift(i, p));
            }
}

TEST(Susy, ShapeInvarianceShiftIsTwoOmega) {
    OscParams p(make_scalar(1, 2), 3);
    EXPECT_EQ(shape_invariance_shift(1, p), 2 * p.omega);
}

TEST(Susy, IntertwinerMapsEigenstates) {
    OscParams p(2, 2);
    SuperpotentialForm w = catalog_superpotential(1, p);
    auto [vm, vp] = partner_potentials(w, p);
    for (int n = 1; n <= 4; ++n) {
        WaveFunction img = apply_intertwiner(w, false, classical_eigenfunction(n, p), p);
        EXPECT_TRUE(schrodinger_residual(vp, img, classical_energy(n, p), p).is_zero()) << n;
    }
    // ground state is annihilated
    EXPECT_TRUE(apply_intertwiner(w, false, classical_eigenfunction(0, p), p).is_zero());
}

TEST(Susy, ProportionalityDetectsMismatch) {
    OscParams p(1, 0);
    WaveFunction a = classical_eigenfunction(2, p);
    WaveFunction b = WaveFunction::make(make_scalar(-3, 5), a.a, a.s, a.num, a.den);
    ASSERT_TRUE(proportionality(b, a).has_value());
    EXPECT_EQ(*proportionality(b, a), make_scalar(-3, 5));
    EXPECT_FALSE(proportionality(classical_eigenfunction(1, p), a).has_value());
}

TEST(Susy, GroundStateNeedsGaussianSlope) {
    SuperpotentialForm w;
    w.linR = 1;
    EXPECT_THROW(ground_state(w), std::invalid_argument);
}
