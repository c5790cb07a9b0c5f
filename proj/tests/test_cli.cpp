#include "cli.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace xlag;

namespace {
struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int c = cli::run(args, out, err);
    return {c, out.str(), err.str()};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }
}  // namespace

TEST(Cli, GenFirstIterationEmitsTypeIPolynomial) {
    Outcome r = run({"gen", "--iter", "1", "--family", "2", "--m", "1", "--n", "3", "--ell", "1", "--omega", "2/1"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["family"], "gen1/i=2/m=1/ell=1/omega=2");
    EXPECT_TRUE(j["valid"].get<bool>());
    ASSERT_EQ(j["states"].size(), 1u);
    const Scalar a = make_scalar(1, 2);
    YPoly want = oracle::at_minus(oracle::series_laguerre(1, a + 1)) * oracle::series_laguerre(3, a) -
                 oracle::at_minus(oracle::series_laguerre(1, a)) * oracle::series_laguerre(3, a).derivative();
    EXPECT_EQ(j["states"][0]["poly"].get<YPoly>(), want);
    EXPECT_EQ(scalar_from_json(j["R1"]), Scalar(4));
}

TEST(Cli, GenRoundTripReproducesObjects) {
    Outcome r = run({"gen", "--iter", "1", "--family", "1", "--m", "2", "--n", "0..3", "--ell", "2", "--omega", "1/2"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    Gen1Family f = make_gen1(1, 2, OscParams(make_scalar(1, 2), 2));
    EXPECT_TRUE(j["superpotential"].get<SuperpotentialForm>().same_as(deformed_superpotential(f)));
    EXPECT_EQ(j["potential"].get<YRatFun>(), gen1_potential(f).value);
    for (int n = 0; n <= 3; ++n) {
        WaveFunction psi = j["states"][n]["eigenfunction"].get<WaveFunction>();
        EXPECT_EQ(psi.num, gen1_eigenfunction(f, n).num);
        EXPECT_EQ(scalar_from_json(j["states"][n]["eigenvalue"]), gen1_eigenvalue(f, n));
    }
}

TEST(Cli, GenClassicalGroundState) {
    Outcome r = run({"gen", "--iter", "0", "--n", "0", "--ell", "0", "--omega", "2/1"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    WaveFunction psi = j["states"][0]["eigenfunction"].get<WaveFunction>();
    EXPECT_EQ(psi.a, Scalar(1));
    EXPECT_EQ(psi.s, -1);
    EXPECT_TRUE(psi.num.is_constant());
    EXPECT_EQ(scalar_from_json(j["states"][0]["eigenvalue"]), Scalar(0));
}

TEST(Cli, SecondIterationWithM2IsUsageError) {
    Outcome r = run({"gen", "--iter", "2", "--family", "1", "--m", "2", "--d", "1"});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_NE(r.err.find("second iteration requires m=1"), std::string::npos);
}

TEST(Cli, SecondIterationJson) {
    Outcome r = run({"gen", "--iter", "2", "--family", "1", "--nprime", "1", "--d", "-2", "--n", "0..1"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    Gen2Family g = make_gen2(1, 1, 1, -2, 1);
    EXPECT_EQ(scalar_from_json(j["R2"]), g.R2);
    EXPECT_EQ(j["pn"].get<YPoly>(), g.pn.poly);
}

TEST(Cli, InvalidFamilyNeedsFlag) {
    Outcome r = run({"gen", "--iter", "2", "--family", "2", "--a", "1"});
    EXPECT_EQ(r.code, cli::kCheckFailure);
    r = run({"gen", "--iter", "2", "--family", "2", "--a", "1", "--allow-invalid"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_FALSE(json::parse(r.out)["valid"].get<bool>());
}

TEST(Cli, SelectorMistakesAreUsageErrors) {
    EXPECT_EQ(run({"gen", "--iter", "2", "--family", "2", "--d", "1"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--iter", "1", "--omega", "0.5"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--iter", "1", "--omega", "-1"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--iter", "5"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--bogus"}).code, cli::kUsage);
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, PlotDataRowCountAndOrigin) {
    Outcome r = run({"plot-data", "--iter", "1", "--family", "3", "--m", "1", "--ell", "1", "--rmax", "8", "--step", "0.01"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out), 801);  // header + 800
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "r,V,w,psi_0");
    EXPECT_EQ(run({"plot-data", "--rmin", "0"}).code, cli::kUsage);
    EXPECT_EQ(run({"plot-data", "--step", "0"}).code, cli::kUsage);
}

TEST(Cli, ScanWritesAgreementCsv) {
    Outcome r = run({"scan", "--family", "1", "--nprime", "1..5", "--d", "1..5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out), 26);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) EXPECT_EQ(line.substr(line.rfind(',') + 1), "true") << line;
}

TEST(Cli, VerifySubsetAndFile) {
    Outcome r = run({"verify", "--only", "gen2-riccati"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("gen2-riccati"), std::string::npos);
    EXPECT_EQ(r.out.find("catalog"), std::string::npos);
    auto path = std::filesystem::temp_directory_path() / "xlag_cli_report.csv";
    r = run({"verify", "--only", "catalog", "--format", "csv", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    std::ifstream f(path);
    std::string head;
    std::getline(f, head);
    EXPECT_EQ(head, "group,name,key,status,witness");
    std::filesystem::remove(path);
}

TEST(Cli, VerifyConfigAndFailureExit) {
    auto path = std::filesystem::temp_directory_path() / "xlag_cli.cfg";
    std::ofstream(path) << "only=gen1-residual\nfamily=2\ninject_wrong_eigenvalue=true\n";
    EXPECT_EQ(run({"verify", "--config", path.string()}).code, cli::kCheckFailure);
    std::ofstream(path) << "nonsense\n";
    EXPECT_EQ(run({"verify", "--config", path.string()}).code, cli::kUsage);
    std::filesystem::remove(path);
}

TEST(Cli, ListCatalog) {
    Outcome r = run({"list", "--families", "2", "--ms", "1", "--ells", "0..2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "i,m,ell,omega,alpha_i,R1,valid,seed_roots_in_domain\n"
                     "2,1,0,1,-1/2,2,true,0\n2,1,1,1,1/2,2,true,0\n2,1,2,1,3/2,2,true,0\n");
}

TEST(Cli, Deterministic) {
    std::vector<std::string> a = {"gen", "--iter", "2", "--family", "3", "--nprime", "1", "--b", "-5", "--n", "0..2"};
    EXPECT_EQ(run(a).out, run(a).out);
}
