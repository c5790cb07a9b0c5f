#pragma once

#include "poly.hpp"
#include "wave.hpp"

#include <stdexcept>

namespace xlag {

struct OscParams {
    Scalar omega = 1;
    Scalar ell = 0;

    OscParams() = default;
    OscParams(Scalar w, Scalar l) : omega(std::move(w)), ell(std::move(l)) {
        if (omega <= 0) throw std::invalid_argument("omega must be positive");
    }
};

struct LaguerreSpec {
    int n = 0;
    Scalar alpha = 0;
    int argSign = +1;
};

// L_n^alpha(argSign·y) from (k+1)L_{k+1} = (2k+1+α−x)L_k − (k+α)L_{k−1}.
inline YPoly laguerre_poly(const LaguerreSpec& s) {
    if (s.n < 0) throw std::invalid_argument("laguerre degree must be nonnegative");
    if (s.argSign != 1 && s.argSign != -1) throw std::invalid_argument("argSign must be ±1");
    const YPoly x = YPoly::y();
    YPoly prev(1);
    if (s.n == 0) return prev;
    YPoly cur = YPoly(1 + s.alpha) - x;
    for (int k = 1; k < s.n; ++k) {
        YPoly next = (YPoly(2 * k + 1 + s.alpha) - x) * cur - YPoly(k + s.alpha) * prev;
        next *= make_scalar(1, k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return s.argSign < 0 ? cur.scale_arg(-1) : cur;
}

inline YPoly laguerre_poly(int n, const Scalar& alpha, int argSign = +1) {
    return laguerre_poly(LaguerreSpec{n, alpha, argSign});
}

// r^{ℓ+1} e^{−y/2} L_n^{ℓ+1/2}(y)
inline WaveFunction classical_eigenfunction(int n, const OscParams& p) {
    return WaveFunction::make(1, p.ell + 1, -1, laguerre_poly(n, p.ell + make_scalar(1, 2)), YPoly(1));
}

inline Scalar classical_energy(int n, const OscParams& p) { return 2 * n * p.omega; }

}  // namespace xlag
