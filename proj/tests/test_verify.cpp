#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace xlag;

TEST(Config, ParsesKeys) {
    SuiteConfig c = parse_suite_config_text("# subset\nonly = catalog, residues\nfamily=2\nrel_tol=1e-8\npanels=8\n");
    EXPECT_EQ(c.only, (std::set<std::string>{"catalog", "residues"}));
    EXPECT_TRUE(c.family(2));
    EXPECT_FALSE(c.family(1));
    EXPECT_DOUBLE_EQ(c.quad.rel_tol, 1e-8);
    EXPECT_EQ(c.quad.panels, 8);
}

TEST(Config, RejectsUnknownInput) {
    EXPECT_THROW(parse_suite_config_text("colour=blue"), ConfigError);
    EXPECT_THROW(parse_suite_config_text("only=nosuchgroup"), ConfigError);
    EXPECT_THROW(parse_suite_config_text("panels=0"), ConfigError);
    EXPECT_THROW(parse_suite_config_text("just a line"), ConfigError);
    EXPECT_THROW(parse_suite_config("/nonexistent/cfg"), ConfigError);
}

TEST(Suite, SubsetRunsOnlyRequestedGroups) {
    SuiteConfig c = parse_suite_config_text("only=catalog");
    SuiteReport r = run_suite(c);
    ASSERT_FALSE(r.checks.empty());
    for (const auto& k : r.checks) EXPECT_EQ(k.group, "catalog");
    EXPECT_TRUE(r.ok());
}

TEST(Suite, InjectedEigenvalueErrorFailsExactlyOnce) {
    SuiteConfig c = parse_suite_config_text("only=gen1-residual\nfamily=2\ninject_wrong_eigenvalue=true");
    SuiteReport r = run_suite(c);
    EXPECT_EQ(r.count(Status::Fail), 1);
    EXPECT_FALSE(r.ok());
}

TEST(Suite, CsvQuotesAndHeader) {
    SuiteReport r;
    r.checks.push_back({"g", "n", "k", Status::Flagged, "a,\"b\""});
    EXPECT_EQ(r.to_csv(), "group,name,key,status,witness\ng,n,k,flagged,\"a,\"\"b\"\"\"\n");
    EXPECT_TRUE(r.ok());
}

TEST(Scan, Family1AgreesWithWindow) {
    auto rows = zero_free_scan(1, int_range(1, 5), scalar_range(-7, 5));
    for (const auto& r : rows) {
        auto win = oracle::family1_window(r.R2);
        ASSERT_TRUE(r.window_predicts_valid.has_value());
        EXPECT_EQ(*r.window_predicts_valid, *win);
        if (*win) {
            EXPECT_TRUE(r.certificate_valid) << r.nprime << " " << r.reparam;
        }
    }
}

TEST(Orthogonality, Gen1FamilyIsOrthogonal) {
    GramResult g = orthogonality_matrix(make_gen1(2, 1, OscParams(2, 1)), 4, QuadratureConfig{});
    EXPECT_LT(max_offdiag_normalized(g.G), 1e-9);
    EXPECT_LT(g.doubling_change, 1e-9);
    for (size_t k = 0; k < g.G.size(); ++k) EXPECT_GT(g.G[k][k], 0);
}

TEST(Orthogonality, UnreachableTailIsReported) {
    QuadratureConfig q;
    EXPECT_THROW(gram_matrix({classical_eigenfunction(0, OscParams(1, 0))}, 1, 2.0, q), TailUnattainable);
}

TEST(Quadrature, PolynomialAndGaussian) {
    auto v = integrate([](double x, std::vector<double>& o) { o[0] = x * x; o[1] = std::exp(-x * x); }, 2, 0, 3, 4, 1e-14, 1e-12);
    EXPECT_NEAR(v[0], 9.0, 1e-12);
    EXPECT_NEAR(v[1], std::sqrt(M_PI) / 2 * std::erf(3.0), 1e-12);
}
