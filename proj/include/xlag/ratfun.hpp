#pragma once

#include "poly.hpp"

namespace xlag {

class YRatFun;
YRatFun ratfun_reduce(const YPoly& num, const YPoly& den);

// Reduced rational function num/den. Canonical form: gcd(num, den) constant,
// integer coefficients with joint content 1, positive leading den coefficient.
class YRatFun {
public:
    YRatFun() : den_(1) {}
    YRatFun(const YPoly& p) { *this = ratfun_reduce(p, YPoly(1)); }  // NOLINT
    YRatFun(const Scalar& k) : YRatFun(YPoly(k)) {}                   // NOLINT
    YRatFun(long k) : YRatFun(YPoly(k)) {}                            // NOLINT

    const YPoly& num() const { return num_; }
    const YPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Scalar constant_value() const {
        if (!is_constant()) throw std::domain_error("rational function is not constant");
        return num_.coeff(0) / den_.coeff(0);
    }
    YPoly as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial");
        return num_ * (1 / den_.coeff(0));
    }

    friend bool operator==(const YRatFun& a, const YRatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const YRatFun& a, const YRatFun& b) { return !(a == b); }

    friend YRatFun operator+(const YRatFun& a, const YRatFun& b) {
        if (a.den_ == b.den_) return ratfun_reduce(a.num_ + b.num_, a.den_);
        return ratfun_reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend YRatFun operator-(const YRatFun& a, const YRatFun& b) {
        if (a.den_ == b.den_) return ratfun_reduce(a.num_ - b.num_, a.den_);
        return ratfun_reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    YRatFun operator-() const {
        YRatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend YRatFun operator*(const YRatFun& a, const YRatFun& b) {
        if (a.is_zero() || b.is_zero()) return {};
        // cross-cancel first to keep sizes down
        YPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        return ratfun_reduce(YPoly::exact_div(a.num_, g1) * YPoly::exact_div(b.num_, g2),
                             YPoly::exact_div(a.den_, g2) * YPoly::exact_div(b.den_, g1));
    }
    friend YRatFun operator/(const YRatFun& a, const YRatFun& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return a * YRatFun::raw(b.den_, b.num_);
    }
    friend YRatFun operator*(const YRatFun& a, const Scalar& k) {
        if (k == 0 || a.is_zero()) return {};
        return raw_scaled(a, k);
    }
    friend YRatFun operator*(const YRatFun& a, long k) { return a * Scalar(k); }
    template <class T, class U>
    friend YRatFun operator*(const YRatFun& a, const __gmp_expr<T, U>& k) {
        return a * Scalar(k);
    }
    YRatFun& operator+=(const YRatFun& o) { return *this = *this + o; }
    YRatFun& operator-=(const YRatFun& o) { return *this = *this - o; }
    YRatFun& operator*=(const YRatFun& o) { return *this = *this * o; }

    YRatFun derivative() const {
        return ratfun_reduce(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    double eval(double y) const { return num_.eval(y) / den_.eval(y); }
    Scalar operator()(const Scalar& y) const { return num_(y) / den_(y); }

    std::string str() const {
        if (den_ == YPoly(1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    friend YRatFun ratfun_reduce(const YPoly&, const YPoly&);
    // k·f stays reduced up to the sign and content normalization
    static YRatFun raw_scaled(const YRatFun& a, const Scalar& k) {
        return ratfun_reduce(a.num_ * k, a.den_);
    }
    // Unchecked pair; only used where the caller knows both parts are coprime.
    static YRatFun raw(YPoly n, YPoly d) {
        YRatFun r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    YPoly num_;
    YPoly den_;
};

inline YRatFun ratfun_reduce(const YPoly& num, const YPoly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    YRatFun r;
    if (num.is_zero()) return r;
    YPoly n = num, d = den;
    YPoly g = gcd(n, d);
    if (g.degree() > 0) {
        n = YPoly::exact_div(n, g);
        d = YPoly::exact_div(d, g);
    }
    // joint integer normalization
    Integer l = 1;
    for (const auto& x : n.coeffs()) l = lcm(l, x.get_den());
    for (const auto& x : d.coeffs()) l = lcm(l, x.get_den());
    Integer c = 0;
    for (const auto& x : n.coeffs()) c = gcd(c, x.get_num() * (l / x.get_den()));
    for (const auto& x : d.coeffs()) c = gcd(c, x.get_num() * (l / x.get_den()));
    Scalar f = make_scalar(l, c);
    if (d.lead() < 0) f = -f;
    r.num_ = n * f;
    r.den_ = d * f;
    return r;
}

inline YRatFun ratfun_derivative(const YRatFun& f) { return f.derivative(); }

inline YRatFun operator/(const YPoly& a, const YPoly& b) { return ratfun_reduce(a, b); }

// p'/p
inline YRatFun log_derivative(const YPoly& p) { return ratfun_reduce(p.derivative(), p); }

}  // namespace xlag
