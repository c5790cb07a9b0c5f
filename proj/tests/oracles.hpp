#pragma once

// Reference values computed independently of the library code paths.

#include "xlag/xlag.hpp"

#include <cmath>
#include <vector>

namespace oracle {

using xlag::Scalar;
using xlag::YPoly;
using xlag::YRatFun;

// L_n^α(x) = Σ_k (−1)^k binom(n+α, n−k) x^k / k!
inline YPoly series_laguerre(int n, const Scalar& alpha) {
    std::vector<Scalar> c;
    Scalar fact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        Scalar binom = 1;
        for (int j = 1; j <= n - k; ++j) binom *= (k + alpha + j) / Scalar(j);
        c.push_back((k % 2 ? -1 : 1) * binom / fact);
    }
    return YPoly(c);
}

inline YPoly at_minus(const YPoly& p) {
    std::vector<Scalar> c = p.coeffs();
    for (size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return YPoly(c);
}

inline YPoly from_roots(const std::vector<Scalar>& roots) {
    YPoly p(1);
    for (const auto& r : roots) p = p * YPoly{-r, Scalar(1)};
    return p;
}

inline int count_in(const std::vector<Scalar>& roots, const Scalar& lo, const Scalar& hi) {
    int c = 0;
    for (const auto& r : roots) c += r > lo && r <= hi;
    return c;
}

// ω y/2 + ω ℓ(ℓ+1)/(2y) + shift, i.e. ω²r²/4 + ℓ(ℓ+1)/r² + shift
inline YRatFun oscillator(const Scalar& omega, const Scalar& k, const Scalar& shift) {
    return YRatFun(YPoly{shift, omega / 2}) + YPoly(omega * k / 2) / YPoly{Scalar(0), Scalar(1)};
}

// ∫₀^∞ (r^{ℓ+1} e^{−y/2} L_n^{ℓ+1/2}(y))² dr = (2/ω)^{ℓ+1} Γ(n+ℓ+3/2) / (n! √(2ω))
inline double classical_norm(int n, double ell, double omega) {
    return std::pow(2 / omega, ell + 1) / std::sqrt(2 * omega) * std::exp(std::lgamma(n + ell + 1.5) - std::lgamma(n + 1.0));
}

// Catalog V⁻ and V⁺ for rows 1..4: centrifugal coefficient and constant.
inline std::pair<YRatFun, YRatFun> catalog_partners(int i, const xlag::OscParams& p) {
    const Scalar l = p.ell, w = p.omega, h = xlag::make_scalar(1, 2);
    const Scalar cm[] = {-w * (l + 3 * h), w * (l - h), w * (l + 3 * h), -w * (l - h)};
    const Scalar kp = (i == 1 || i == 3) ? Scalar((l + 1) * (l + 2)) : Scalar(l * (l - 1));
    const Scalar cp = (i == 2 || i == 3) ? Scalar(w * (l + h)) : Scalar(-w * (l + h));
    return {oscillator(w, l * (l + 1), cm[i - 1]), oscillator(w, kp, cp)};
}

// R₂ read off the P_N closed forms by hand.
inline Scalar r2(int i, int np, const Scalar& rp, const Scalar& w) {
    const Scalar h = xlag::make_scalar(1, 2);
    switch (i) {
        case 1: return -2 * w * (np + rp + 3 * h);
        case 2: return 2 * w * (np + rp + h);
        default: return 2 * w * (np + rp + 3 * h);
    }
}

// P_N zero-free windows on the reparametrized grid; nullopt where nothing is stated.
inline std::optional<bool> family1_window(const Scalar& R2) { return R2 > -2 && R2 < 0; }

}  // namespace oracle
