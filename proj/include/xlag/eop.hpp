#pragma once

#include "laguerre.hpp"
#include "odesolve.hpp"

#include <string>

namespace xlag {

enum class EopKind { I, II, III };

inline const char* kind_name(EopKind k) {
    switch (k) {
        case EopKind::I: return "I";
        case EopKind::II: return "II";
        default: return "III";
    }
}

// Bilinear X_m exceptional Laguerre polynomial, built in x and evaluated at x = argSign·y.
struct XmEOP {
    EopKind family = EopKind::I;
    int m = 0;
    int n = 0;
    Scalar alpha = 0;
    int argSign = +1;
    YPoly poly;
};

namespace detail {

// All three kinds in the variable x.
inline YPoly xm_eop_in_x(EopKind kind, int m, int n, const Scalar& al) {
    const YPoly x = YPoly::y();
    switch (kind) {
        case EopKind::I:
            // L_m^{α+1}(−x) L_n^α(x) − L_m^α(−x) L_n^α′(x)
            return laguerre_poly(m, al + 1, -1) * laguerre_poly(n, al) -
                   laguerre_poly(m, al, -1) * laguerre_poly(n, al).derivative();
        case EopKind::II:
            // −2(m+α) L_m^{α−1}(x) L_n^{−α}(x) + 2x L_m^α(x) L_n^{−α}′(x)
            return laguerre_poly(m, al - 1) * laguerre_poly(n, -al) * (-2 * (m + al)) +
                   x * laguerre_poly(m, al) * laguerre_poly(n, -al).derivative() * 2;
        case EopKind::III:
            // x L_n^{1−α}(x) L_m^α(−x) + (m+α) L_m^{α−1}(−x) L_n^{−α}(x)
            return x * laguerre_poly(n, 1 - al) * laguerre_poly(m, al, -1) +
                   laguerre_poly(m, al - 1, -1) * laguerre_poly(n, -al) * (m + al);
    }
    return {};
}

}  // namespace detail

inline XmEOP make_xm_eop(EopKind kind, int m, int n, const Scalar& alpha, int argSign = +1) {
    if (m < 0 || n < 0) throw std::invalid_argument("EOP indices must be nonnegative");
    if (argSign != 1 && argSign != -1) throw std::invalid_argument("argSign must be ±1");
    YPoly p = detail::xm_eop_in_x(kind, m, n, alpha);
    if (argSign < 0) p = p.scale_arg(-1);
    return {kind, m, n, alpha, argSign, p};
}

// Degree under the literal indexing: m+n for I and II, m+n+1 for III.
inline int nominal_degree(EopKind kind, int m, int n) { return kind == EopKind::III ? m + n + 1 : m + n; }

// Operator annihilating the type-I X_m polynomial L^{I,α}_{m,n}(y):
// y Y″ + (α+2−y−2y ξ′/ξ) Y′ + (n+m−2(α+1) ξ′/ξ) Y, ξ = L_m^α(−y).
inline LinearOde type_i_eop_operator(int m, int n, const Scalar& alpha) {
    const YRatFun y = YPoly::y();
    const YPoly xi = laguerre_poly(m, alpha, -1);
    const YRatFun g = xi.is_constant() ? YRatFun() : log_derivative(xi);
    return {y, YRatFun(alpha + 2) - y - y * g * 2, YRatFun(Scalar(n + m)) - g * (2 * (alpha + 1))};
}

}  // namespace xlag
