#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace xlag;

TEST(Gen2, RiccatiResidualVanishes) {
    for (int i = 1; i <= 3; ++i)
        for (int np = 0; np <= 5; ++np)
            for (int rp = -6; rp <= 4; ++rp) {
                Gen2Family g = make_gen2(i, 1, np, rp, 1, true);
                EXPECT_TRUE(riccati_residual(gen2_parent_superpotential(g), gen2_phi(g), g.R2, g.p).is_zero()) << g.key();
            }
}

TEST(Gen2, R2MatchesHandFormula) {
    for (const auto& w : {Scalar(1), Scalar(2), make_scalar(1, 3)})
        for (int i = 1; i <= 3; ++i)
            for (int np = 1; np <= 4; ++np)
                for (int rp = -5; rp <= 3; ++rp) {
                    Gen2Family g = make_gen2(i, 1, np, rp, w, true);
                    EXPECT_EQ(g.R2, oracle::r2(i, np, rp, w)) << g.key();
                }
}

TEST(Gen2, EigenfunctionsSolveSchrodinger) {
    int checked = 0;
    for (int i = 1; i <= 3; ++i)
        for (int np = 1; np <= 3; ++np)
            for (int rp = -6; rp <= 3; ++rp) {
                Gen2Family g = make_gen2(i, 1, np, rp, 2, true);
                if (!g.valid) continue;
                ++checked;
                PotentialForm v = gen2_potential(g);
                EXPECT_EQ(partner_potentials(gen2_superpotential(g), g.p).second.value, v.value);
                for (int n = 0; n <= 3; ++n)
                    EXPECT_TRUE(schrodinger_residual(v, gen2_eigenfunction(g, n), gen2_eigenvalue(g, n), g.p).is_zero())
                        << g.key() << " n=" << n;
            }
    EXPECT_GT(checked, 10);
}

TEST(Gen2, IntertwinerProportionalToClosedForm) {
    Gen2Family g = make_gen2(1, 1, 1, -2, 1);
    SuperpotentialForm wb = gen2_superpotential(g);
    for (int n = 0; n <= 3; ++n) {
        WaveFunction img = apply_intertwiner(wb, false, detail::gen1_eigenfunction_unchecked(g.parent, n), g.p);
        EXPECT_TRUE(proportionality(img, gen2_eigenfunction(g, n)).has_value()) << n;
    }
}

TEST(Gen2, SecondIterationRequiresM1) {
    try {
        make_gen2(1, 2, 1, -3, 1);
        FAIL() << "expected UnsupportedIteration";
    } catch (const UnsupportedIteration& e) {
        EXPECT_NE(std::string(e.what()).find("second iteration requires m=1"), std::string::npos);
    }
}

TEST(Gen2, InvalidFamilyNeedsOptIn) {
    // family 2 at a = 1, n' = 1 has P_N with a positive root
    EXPECT_THROW(make_gen2(2, 1, 1, 1, 1), InvalidFamily);
    Gen2Family g = make_gen2(2, 1, 1, 1, 1, true);
    EXPECT_FALSE(g.valid);
    EXPECT_THROW(gen2_eigenfunction(g, 0), InvalidFamily);
}

TEST(Residues, DualValuesPerSingularPoint) {
    for (int i = 1; i <= 3; ++i) {
        OscParams p(1, 2);
        Gen1Family f = make_gen1(i, 1, p, true);
        SuperpotentialForm wt = detail::deformed_superpotential_unchecked(f);
        ResidueSet rs = enumerate_residues(wt);
        EXPECT_EQ(rs.b1.values[1], -(2 * wt.invR + 1));
        EXPECT_EQ(rs.d1.values, (std::array<Scalar, 2>{0, -3}));
        EXPECT_EQ(rs.d1p.values, (std::array<Scalar, 2>{0, -1}));
        EXPECT_EQ(rs.c1.values[1], -2 * wt.linR);
    }
}

TEST(Residues, PublishedChoiceIsUniqueAmongSelections) {
    for (int i = 1; i <= 3; ++i) {
        auto reps = enumerate_other_choices(make_gen1(i, 1, OscParams(1, 1), true));
        ASSERT_EQ(reps.size(), 16u);
        int pub = 0;
        for (const auto& r : reps) {
            pub += r.cls == ChoiceClass::Published;
            if (r.choice.d1p == -1) {
                EXPECT_FALSE(r.r_dependent_R2) << r.choice.str();
            }
        }
        EXPECT_EQ(pub, 1);
    }
}

TEST(Residues, RepeatedSeedRootRejected) {
    SuperpotentialForm w;
    w.invR = -1;
    w.linR = make_scalar(1, 2);
    w.logTerms.push_back({1, oracle::from_roots({-1, -1})});
    EXPECT_THROW(enumerate_residues(w), std::invalid_argument);
}

TEST(Gen2, WeightDenominators) {
    Gen2Family g = make_gen2(1, 1, 2, -3, 1);
    Gen2Weight w = gen2_weight(g);
    EXPECT_TRUE(w.effective_certified);
    EXPECT_EQ(w.effective.den, g.pn.poly * (1 / g.pn.poly.lead()));
}
