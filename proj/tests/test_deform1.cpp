#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace xlag;

TEST(Gen1, ResidualsVanishForValidFamilies) {
    int built = 0;
    for (int i = 1; i <= 3; ++i)
        for (int m = 0; m <= 3; ++m)
            for (int l = 0; l <= 5; ++l) {
                Gen1Family f = make_gen1(i, m, OscParams(2, l), true);
                if (!f.valid) continue;
                ++built;
                PotentialForm v = gen1_potential(f);
                for (int n = 0; n <= 5; ++n) {
                    ASSERT_TRUE(schrodinger_residual(v, gen1_eigenfunction(f, n), gen1_eigenvalue(f, n), f.p).is_zero())
                        << f.key() << " n=" << n;
                    EXPECT_EQ(gen1_eigenvalue(f, n), gen1_energy(f, n + gen1_label_shift(f)) + gen1_reference_offset(f));
                }
            }
    EXPECT_GT(built, 30);
}

TEST(Gen1, EnergyFormula) {
    Gen1Family f = make_gen1(3, 2, OscParams(1, 0), true);
    EXPECT_EQ(gen1_energy(f, 5), Scalar(6));
    Gen1Family g = make_gen1(1, 2, OscParams(1, 0), true);
    EXPECT_EQ(gen1_energy(g, 5), Scalar(14));
}

TEST(Gen1, TypeIPolynomialFromSeriesOracle) {
    // family 2, m=1, ℓ=1: α = 1/2
    Gen1Family f = make_gen1(2, 1, OscParams(2, 1));
    const Scalar a = make_scalar(1, 2);
    for (int n = 0; n <= 4; ++n) {
        YPoly want = oracle::at_minus(oracle::series_laguerre(1, a + 1)) * oracle::series_laguerre(n, a) -
                     oracle::at_minus(oracle::series_laguerre(1, a)) * oracle::series_laguerre(n, a).derivative();
        WaveFunction psi = gen1_eigenfunction(f, n);
        EXPECT_EQ(psi.num * psi.constant, want * (1 / f.seed_poly.lead())) << n;
    }
}

TEST(Gen1, TypeIEquationHolds) {
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 5; ++n) {
            Scalar a = make_scalar(2 * n + 1, 2);
            EXPECT_TRUE(type_i_eop_operator(m, n, a).apply(make_xm_eop(EopKind::I, m, n, a).poly).is_zero());
        }
}

TEST(Gen1, SeedCertificateRejectsZeros) {
    // family 3 seed is L_m^{α}(y) with α = −ℓ−3/2; m=1, ℓ=0 gives y + 1/2, no positive root
    EXPECT_TRUE(make_gen1(3, 1, OscParams(1, 0)).valid);
    Gen1Family bad = make_gen1(3, 2, OscParams(1, 0), true);
    EXPECT_FALSE(bad.valid);
    EXPECT_THROW(make_gen1(3, 2, OscParams(1, 0)), InvalidFamily);
    EXPECT_THROW(gen1_potential(bad), InvalidFamily);
    EXPECT_THROW(make_gen1(4, 1, OscParams(1, 0)), std::invalid_argument);
}

TEST(Gen1, IsospectralShift) {
    Gen1Family f = make_gen1(1, 2, OscParams(1, 2));
    YRatFun d = gen1_potential_plus(f).value - partner_potentials(catalog_superpotential(1, f.p), f.p).second.value;
    EXPECT_EQ(d, YRatFun(f.R1));
}

TEST(Gen1, ConventionalSuperpotentialIsConsistent) {
    for (int i = 1; i <= 3; ++i) {
        Gen1Family f = make_gen1(i, 1, OscParams(1, 1), true);
        if (!f.valid) continue;
        SuperpotentialForm w = conventional_superpotential(f);
        auto [vm, vp] = partner_potentials(w, f.p);
        YRatFun d = vm.value - gen1_potential(f).value;
        EXPECT_TRUE(d.is_constant()) << i;
    }
}

TEST(Gen1, WeightDenominatorIsSeed) {
    Gen1Family f = make_gen1(2, 1, OscParams(2, 1));
    EXPECT_EQ(gen1_weight(f).den, f.seed_poly * (1 / f.seed_poly.lead()));
}
