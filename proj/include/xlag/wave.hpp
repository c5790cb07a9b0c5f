#pragma once

#include "ratfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace xlag {

// c · r^a · exp(s·y/2) · num(y)/den(y), with y = ωr²/2.
// num and den are coprime and den is monic; the ratio num/den is never rescaled.
struct WaveFunction {
    Scalar constant = 0;
    Scalar a = 0;
    int s = -1;
    YPoly num;
    YPoly den = YPoly(1);

    static WaveFunction make(Scalar c, Scalar a, int s, const YPoly& num, const YPoly& den) {
        if (s != 1 && s != -1) throw std::invalid_argument("gaussian sign must be ±1");
        if (den.is_zero()) throw std::domain_error("zero denominator");
        WaveFunction w;
        w.a = std::move(a);
        w.s = s;
        if (c == 0 || num.is_zero()) return w;
        YPoly g = gcd(num, den);
        YPoly n = YPoly::exact_div(num, g), d = YPoly::exact_div(den, g);
        Scalar k = 1 / d.lead();
        w.constant = std::move(c);
        w.num = n * k;
        w.den = d * k;
        return w;
    }
    static WaveFunction make(Scalar c, Scalar a, int s, const YRatFun& f) {
        return make(std::move(c), std::move(a), s, f.num(), f.den());
    }

    bool is_zero() const { return constant == 0 || num.is_zero(); }
    YRatFun ratio() const { return ratfun_reduce(num * constant, den); }

    double eval(double r, double omega) const {
        double y = omega * r * r / 2;
        return constant.get_d() * std::pow(r, a.get_d()) * std::exp(s * y / 2) * num.eval(y) /
               den.eval(y);
    }
};

// σ·∂_r ln P; σ is an integer multiplicity, usually ±1.
struct LogTerm {
    int sign = +1;
    YPoly poly;
};

// W(r) = invR/r + linR·ωr + Σ σ ∂_r ln P(y).
// Since ∂_r ln P(y) = ωr P'/P, this is invR/r + ωr·K(y) with K = linR + Σ σ P'/P.
struct SuperpotentialForm {
    Scalar invR = 0;
    Scalar linR = 0;
    std::vector<LogTerm> logTerms;

    YRatFun slope() const {
        YRatFun k(linR);
        for (const auto& t : logTerms) {
            if (t.poly.is_zero()) throw std::invalid_argument("log term of the zero polynomial");
            if (t.poly.is_constant()) continue;
            if (t.sign == 0) continue;
            k = k + log_derivative(t.poly) * static_cast<long>(t.sign);
        }
        return k;
    }

    // log polys vanishing at y = 0 would hide part of the 1/r pole
    void require_regular_at_origin() const {
        for (const auto& t : logTerms) {
            if (t.poly.is_zero()) throw std::invalid_argument("log term of the zero polynomial");
            if (t.poly.coeff(0) == 0)
                throw std::invalid_argument("log term polynomial vanishes at y=0: " + t.poly.str());
        }
    }

    SuperpotentialForm with_log(int sign, const YPoly& p) const {
        SuperpotentialForm w = *this;
        w.logTerms.push_back({sign, p});
        return w;
    }
    SuperpotentialForm negated() const {
        SuperpotentialForm w = *this;
        w.invR = -w.invR;
        w.linR = -w.linR;
        for (auto& t : w.logTerms) t.sign = -t.sign;
        return w;
    }

    // same function of r
    bool same_as(const SuperpotentialForm& o) const {
        return invR == o.invR && slope() == o.slope();
    }

    double eval(double r, double omega) const {
        double y = omega * r * r / 2;
        return invR.get_d() / r + omega * r * slope().eval(y);
    }
};

// invR/r + ωr·slope(y): any odd function of r with these two pole classes.
struct PoleForm {
    Scalar invR = 0;
    YRatFun slope;

    static PoleForm of(const SuperpotentialForm& w) { return {w.invR, w.slope()}; }

    friend PoleForm operator+(const PoleForm& f, const PoleForm& g) {
        return {f.invR + g.invR, f.slope + g.slope};
    }
    friend PoleForm operator-(const PoleForm& f, const PoleForm& g) {
        return {f.invR - g.invR, f.slope - g.slope};
    }
    bool operator==(const PoleForm& o) const { return invR == o.invR && slope == o.slope; }
    bool operator!=(const PoleForm& o) const { return !(*this == o); }

    // f·g, even in r, as a function of y
    YRatFun times(const PoleForm& g, const Scalar& omega) const {
        const YRatFun y = YPoly::y();
        return ratfun_reduce(YPoly(omega * invR * g.invR / 2), YPoly::y()) +
               (g.slope * invR + slope * g.invR) * omega + y * slope * g.slope * (2 * omega);
    }
    // ∂_r f as a function of y
    YRatFun derivative(const Scalar& omega) const {
        const YRatFun y = YPoly::y();
        return ratfun_reduce(YPoly(-omega * invR / 2), YPoly::y()) + slope * omega +
               y * slope.derivative() * (2 * omega);
    }
};

struct PotentialForm {
    YRatFun value;
    double eval(double r, double omega) const { return value.eval(omega * r * r / 2); }
};

struct EnergyLevel {
    int n = 0;
    Scalar value = 0;
};

}  // namespace xlag
