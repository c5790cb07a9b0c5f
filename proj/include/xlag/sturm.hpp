#pragma once

#include "poly.hpp"

#include <optional>
#include <vector>

namespace xlag {

// Interval endpoint: a finite rational, 0⁺ (just right of zero) or +∞.
struct Bound {
    enum class Kind { finite, zero_plus, pos_inf };
    Kind kind = Kind::finite;
    Scalar value = 0;

    static Bound at(const Scalar& v) { return {Kind::finite, v}; }
    static Bound zero_plus() { return {Kind::zero_plus, 0}; }
    static Bound infinity() { return {Kind::pos_inf, 0}; }
};

namespace detail {

// Sign of p just right (side = +1) or just left (side = -1) of x.
inline int side_sign(const YPoly& p, const Scalar& x, int side) {
    YPoly t = p.shift(x);
    auto [k, c] = t.trailing();
    if (k < 0) return 0;
    int s = sgn(c);
    return (side < 0 && (k % 2 == 1)) ? -s : s;
}

inline int sign_changes(const std::vector<int>& s) {
    int count = 0, last = 0;
    for (int v : s) {
        if (v == 0) continue;
        if (last != 0 && v != last) ++count;
        last = v;
    }
    return count;
}

}  // namespace detail

// Sturm chain of the square-free part; each member rescaled by a positive
// constant to keep coefficients small (sign pattern unchanged).
inline std::vector<YPoly> sturm_chain(const YPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm chain of the zero polynomial");
    YPoly sq = YPoly::exact_div(p, gcd(p, p.derivative()));
    std::vector<YPoly> chain{sq};
    if (sq.degree() < 1) return chain;
    chain.push_back(sq.derivative());
    while (true) {
        const YPoly& a = chain[chain.size() - 2];
        const YPoly& b = chain.back();
        YPoly r = -YPoly::divmod(a, b).second;
        if (r.is_zero()) break;
        Scalar k = abs(r.lead());
        chain.push_back(r * (1 / k));
    }
    return chain;
}

// Distinct real roots of p in the open interval (lo, hi).
inline int sturm_count(const YPoly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
    if (lo.kind == Bound::Kind::pos_inf || hi.kind == Bound::Kind::zero_plus)
        throw std::invalid_argument("sturm_count: bad interval endpoints");
    Scalar lo_v = lo.kind == Bound::Kind::finite ? lo.value : Scalar(0);
    if (hi.kind == Bound::Kind::finite && hi.value <= lo_v)
        throw std::invalid_argument("sturm_count: empty interval");
    auto chain = sturm_chain(p);
    std::vector<int> sl, sh;
    for (const auto& q : chain) {
        sl.push_back(detail::side_sign(q, lo_v, +1));
        if (hi.kind == Bound::Kind::pos_inf)
            sh.push_back(sgn(q.lead()));
        else
            sh.push_back(detail::side_sign(q, hi.value, -1));
    }
    return detail::sign_changes(sl) - detail::sign_changes(sh);
}

inline int positive_root_count(const YPoly& p) {
    return sturm_count(p, Bound::zero_plus(), Bound::infinity());
}

}  // namespace xlag
