#pragma once

#include "linalg.hpp"
#include "ratfun.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace xlag {

// Second-order linear operator A·P″ + B·P′ + C·P with rational coefficients in y.
struct LinearOde {
    YRatFun a, b, c;

    YRatFun apply(const YPoly& p) const {
        return a * YRatFun(p.derivative().derivative()) + b * YRatFun(p.derivative()) + c * YRatFun(p);
    }
};

struct PolySolution {
    YPoly poly;      // normalized to leading coefficient 1
    Scalar lambda;   // eigenvalue: A P″ + B P′ + C P = λ P
};

struct NoPolynomialSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree-N polynomial eigenfunction of the operator, by exact linear algebra on
// the coefficients after clearing denominators. λ is fixed by the top coefficient.
inline PolySolution solve_polynomial_eigen(const LinearOde& ode, int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    YPoly d = ode.a.den();
    for (const YPoly* q : {&ode.b.den(), &ode.c.den()}) d = YPoly::exact_div(d * *q, gcd(d, *q));
    const YPoly ap = YPoly::exact_div(d, ode.a.den()) * ode.a.num();
    const YPoly bp = YPoly::exact_div(d, ode.b.den()) * ode.b.num();
    const YPoly cp = YPoly::exact_div(d, ode.c.den()) * ode.c.num();

    std::vector<YPoly> cols;
    int rows = 0;
    for (int k = 0; k <= degree; ++k) {
        YPoly mono = YPoly::monomial(k);
        YPoly img = ap * mono.derivative().derivative() + bp * mono.derivative() + cp * mono;
        rows = std::max(rows, img.degree() + 1);
        cols.push_back(std::move(img));
    }
    const int top = degree + d.degree();
    rows = std::max(rows, top + 1);
    for (int k = 0; k <= degree; ++k)
        if (cols[k].degree() > k + d.degree())
            throw NoPolynomialSolution("operator raises degree beyond the balance order; no constant eigenvalue");
    const Scalar lambda = cols[degree].coeff(top) / d.lead();

    Matrix m(rows, std::vector<Scalar>(degree + 1, Scalar(0)));
    for (int k = 0; k <= degree; ++k) {
        YPoly col = cols[k] - d * YPoly::monomial(k) * lambda;
        for (int r = 0; r < rows; ++r) m[r][k] = col.coeff(r);
    }
    auto basis = nullspace(std::move(m), degree + 1);
    if (basis.empty())
        throw NoPolynomialSolution("no polynomial solution of degree " + std::to_string(degree));
    if (basis.size() > 1)
        throw NoPolynomialSolution("polynomial solution of degree " + std::to_string(degree) + " is not unique");
    auto& v = basis.front();
    if (v[degree] == 0)
        throw NoPolynomialSolution("solution space does not reach degree " + std::to_string(degree));
    Scalar inv = 1 / v[degree];
    for (auto& x : v) x *= inv;
    return {YPoly(std::move(v)), lambda};
}

}  // namespace xlag
