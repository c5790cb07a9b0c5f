#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace xlag;

TEST(Scalar, ParsesRationalStrings) {
    EXPECT_EQ(parse_scalar("3/4"), make_scalar(3, 4));
    EXPECT_EQ(parse_scalar("-6/8"), make_scalar(-3, 4));
    EXPECT_EQ(parse_scalar("+5"), Scalar(5));
    EXPECT_EQ(to_string(parse_scalar("2/1")), "2");
}

TEST(Scalar, RejectsMalformedInput) {
    for (const char* s : {"", "1/0", "abc", "1.5", "1/-2", "/3", "3/"}) EXPECT_THROW(parse_scalar(s), std::invalid_argument) << s;
    EXPECT_THROW(make_scalar(1, 0), std::invalid_argument);
    EXPECT_THROW(to_long(make_scalar(1, 2)), std::domain_error);
}

TEST(Poly, ArithmeticAndTrim) {
    YPoly p{Scalar(1), Scalar(2)}, q{Scalar(-1), Scalar(0), Scalar(3)};
    EXPECT_EQ((p * q).coeffs(), (std::vector<Scalar>{-1, -2, 3, 6}));
    EXPECT_EQ((p - p).degree(), -1);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((YPoly{Scalar(0), Scalar(0)}).degree(), -1);
    EXPECT_EQ(p(make_scalar(1, 2)), Scalar(2));
    EXPECT_EQ(q.derivative(), (YPoly{Scalar(0), Scalar(6)}));
}

TEST(Poly, DivmodReconstructs) {
    YPoly a = oracle::from_roots({1, 2, make_scalar(-1, 3), 5});
    YPoly b{Scalar(7), Scalar(0), Scalar(2)};
    auto [q, r] = YPoly::divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_THROW(YPoly::divmod(a, YPoly()), std::domain_error);
    EXPECT_THROW(YPoly::exact_div(a, b), std::logic_error);
}

TEST(Poly, GcdOfKnownFactors) {
    YPoly common = oracle::from_roots({make_scalar(2, 3), -4});
    YPoly a = common * oracle::from_roots({1}), b = common * oracle::from_roots({7, 9});
    YPoly g = gcd(a, b);
    EXPECT_EQ(g * (1 / g.lead()), common);
    EXPECT_EQ(gcd(oracle::from_roots({1}), oracle::from_roots({2})).degree(), 0);
}

TEST(RatFun, ReducesAndDifferentiates) {
    YPoly c = oracle::from_roots({3});
    YRatFun f = ratfun_reduce(c * YPoly{Scalar(1), Scalar(1)}, c * YPoly{Scalar(0), Scalar(2)});
    EXPECT_EQ(f.den().degree(), 1);
    EXPECT_EQ(f, YRatFun(YPoly{Scalar(1), Scalar(1)}) / YRatFun(YPoly{Scalar(0), Scalar(2)}));
    // (1+y)/(2y) has derivative −1/(2y²)
    EXPECT_EQ(f.derivative(), YRatFun(make_scalar(-1, 2)) / YRatFun(YPoly::monomial(2)));
    EXPECT_EQ(f(Scalar(1)), Scalar(1));
    EXPECT_THROW(ratfun_reduce(YPoly(1), YPoly()), std::domain_error);
}

TEST(Sturm, CountsMatchKnownRoots) {
    const std::vector<Scalar> roots = {make_scalar(-5, 2), make_scalar(1, 7), 1, 2, make_scalar(9, 2)};
    YPoly p = oracle::from_roots(roots);
    EXPECT_EQ(positive_root_count(p), oracle::count_in(roots, 0, 1000));
    EXPECT_EQ(sturm_count(p, Bound::at(1), Bound::at(3)), 1);  // open at 1
    EXPECT_EQ(sturm_count(p, Bound::at(-3), Bound::infinity()), 5);
    EXPECT_EQ(sturm_count(p * p, Bound::zero_plus(), Bound::infinity()), 4);
    EXPECT_EQ(positive_root_count(YPoly{Scalar(1), Scalar(0), Scalar(1)}), 0);
    EXPECT_THROW(sturm_count(YPoly(), Bound::zero_plus(), Bound::infinity()), std::invalid_argument);
}

TEST(Sturm, ZeroAtOriginIsExcluded) {
    YPoly p = oracle::from_roots({0, 3});
    EXPECT_EQ(positive_root_count(p), 1);
    EXPECT_EQ(roots_in_domain(p), 2);
}

TEST(Linalg, NullspaceOfRankDeficientMatrix) {
    Matrix a = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    auto basis = nullspace(a, 3);
    ASSERT_EQ(basis.size(), 1u);
    for (const auto& row : a) {
        Scalar dot = 0;
        for (size_t k = 0; k < 3; ++k) dot += row[k] * basis[0][k];
        EXPECT_EQ(dot, 0);
    }
}
