#pragma once

#include "scalar.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xlag {

// Dense univariate polynomial in y, ascending powers. Zero is the empty vector.
class YPoly {
public:
    YPoly() = default;
    YPoly(std::initializer_list<Scalar> cs) : c_(cs) { trim(); }
    explicit YPoly(std::vector<Scalar> cs) : c_(std::move(cs)) { trim(); }
    YPoly(const Scalar& k) {  // NOLINT: constants convert implicitly
        if (k != 0) c_.push_back(k);
    }
    YPoly(long k) : YPoly(Scalar(k)) {}  // NOLINT

    static YPoly monomial(unsigned k, const Scalar& coef = 1) {
        if (coef == 0) return {};
        std::vector<Scalar> cs(k + 1, Scalar(0));
        cs[k] = coef;
        return YPoly(std::move(cs));
    }
    static YPoly y() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Scalar(0);
    }
    Scalar lead() const { return c_.empty() ? Scalar(0) : c_.back(); }
    // lowest nonzero coefficient and its index
    std::pair<int, Scalar> trailing() const {
        for (size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return {static_cast<int>(k), c_[k]};
        return {-1, Scalar(0)};
    }

    friend bool operator==(const YPoly& a, const YPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const YPoly& a, const YPoly& b) { return !(a == b); }

    YPoly operator-() const {
        YPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    YPoly& operator+=(const YPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    YPoly& operator-=(const YPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    YPoly& operator*=(const Scalar& k) {
        if (k == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= k;
        return *this;
    }
    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
    friend YPoly operator*(YPoly a, const Scalar& k) { return a *= k; }
    friend YPoly operator*(const Scalar& k, YPoly a) { return a *= k; }
    friend YPoly operator*(YPoly a, long k) { return a *= Scalar(k); }
    friend YPoly operator*(long k, YPoly a) { return a *= Scalar(k); }
    template <class T, class U>
    friend YPoly operator*(YPoly a, const __gmp_expr<T, U>& k) {
        return a *= Scalar(k);
    }
    template <class T, class U>
    friend YPoly operator*(const __gmp_expr<T, U>& k, YPoly a) {
        return a *= Scalar(k);
    }
    friend YPoly operator*(const YPoly& a, const YPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return YPoly(std::move(r));
    }
    YPoly& operator*=(const YPoly& o) { return *this = *this * o; }

    // Euclidean division over Q.
    static std::pair<YPoly, YPoly> divmod(const YPoly& a, const YPoly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {YPoly(), a};
        std::vector<Scalar> rem = a.c_;
        std::vector<Scalar> quo(a.c_.size() - b.c_.size() + 1, Scalar(0));
        const Scalar inv = 1 / b.lead();
        const int db = b.degree();
        for (int k = a.degree(); k >= db; --k) {
            if (rem[k] == 0) continue;
            Scalar q = rem[k] * inv;
            quo[k - db] = q;
            for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.c_[j];
        }
        rem.resize(db);
        return {YPoly(std::move(quo)), YPoly(std::move(rem))};
    }
    // Division that must leave no remainder.
    static YPoly exact_div(const YPoly& a, const YPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }

    YPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Scalar> r(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * static_cast<long>(k);
        return YPoly(std::move(r));
    }

    // p(k·y)
    YPoly scale_arg(const Scalar& k) const {
        YPoly r = *this;
        Scalar f = 1;
        for (auto& x : r.c_) {
            x *= f;
            f *= k;
        }
        r.trim();
        return r;
    }
    // p(y + a), Horner-style Taylor shift
    YPoly shift(const Scalar& a) const {
        std::vector<Scalar> r = c_;
        const int n = static_cast<int>(r.size());
        for (int i = 0; i < n - 1; ++i)
            for (int j = n - 2; j >= i; --j) r[j] += a * r[j + 1];
        return YPoly(std::move(r));
    }

    Scalar operator()(const Scalar& x) const {
        Scalar r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    double eval(double x) const {
        double r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
        return r;
    }

    std::string str(const char* var = "y") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Scalar a = c_[k];
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            Scalar m = abs(a);
            if (k == 0 || m != 1) os << m.get_str();
            if (k > 0) {
                if (m != 1) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

inline YPoly pow(const YPoly& p, unsigned e) {
    YPoly r(1);
    for (unsigned k = 0; k < e; ++k) r *= p;
    return r;
}

namespace detail {

using ZPoly = std::vector<Integer>;  // ascending, trimmed

inline void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Integer zcontent(const ZPoly& p) {
    Integer g = 0;
    for (const auto& x : p) g = gcd(g, x);
    return g;
}

// Clears denominators; returns a primitive integer polynomial with positive lead.
inline ZPoly primitive_integer(const YPoly& p) {
    Integer l = 1;
    for (const auto& x : p.coeffs()) l = lcm(l, x.get_den());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) z.push_back(x.get_num() * (l / x.get_den()));
    Integer g = zcontent(z);
    if (g != 0) {
        if (z.back() < 0) g = -g;
        for (auto& x : z) x /= g;
    }
    return z;
}

// lc(b)^(deg a - deg b + 1) · a mod b over Z
inline ZPoly prem(ZPoly a, const ZPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    const Integer& lb = b.back();
    int e = da - db + 1;
    while (da >= db && !a.empty()) {
        Integer la = a.back();
        for (auto& x : a) x *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
        ztrim(a);
        --e;
        da = static_cast<int>(a.size()) - 1;
    }
    if (e > 0) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& x : a) x *= f;
    }
    return a;
}

inline Integer zpow(const Integer& b, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace detail

// Monic gcd over Q via the subresultant remainder sequence over Z.
inline YPoly gcd(const YPoly& p, const YPoly& q) {
    using namespace detail;
    if (p.is_zero() && q.is_zero()) return {};
    if (p.is_zero()) return q * (1 / q.lead());
    if (q.is_zero()) return p * (1 / p.lead());
    ZPoly a = primitive_integer(p), b = primitive_integer(q);
    if (a.size() < b.size()) std::swap(a, b);
    Integer g = 1, h = 1;
    while (true) {
        if (b.size() == 1) return YPoly(1);
        const long d = static_cast<long>(a.size()) - static_cast<long>(b.size());
        ZPoly r = prem(a, b);
        if (r.empty()) break;
        a = std::move(b);
        Integer div = g * zpow(h, d);
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), div.get_mpz_t());
        b = std::move(r);
        g = a.back();
        if (d > 0) {
            Integer num = zpow(g, d);
            Integer den = zpow(h, d - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    Integer c = zcontent(b);
    std::vector<Scalar> out;
    out.reserve(b.size());
    for (const auto& x : b) out.push_back(make_scalar(x, c));
    YPoly res(std::move(out));
    return res * (1 / res.lead());
}

}  // namespace xlag
