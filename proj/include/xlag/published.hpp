#pragma once

// Closed forms exactly as they are displayed in the literature on this construction.
// Nothing here feeds the derived pipeline; verify compares against these and reports
// mismatches as "flagged".

#include "deform2.hpp"

#include <optional>

namespace xlag::published {

// V(r) = ω²r²/4 + ℓ(ℓ+1)/r² in y.
inline YRatFun oscillator(const OscParams& p) {
    return YRatFun(YPoly::y()) * (p.omega / 2) + ratfun_reduce(YPoly(p.omega * p.ell * (p.ell + 1) / 2), YPoly::y());
}

// V⁻ᵢ = V + cᵢ
inline YRatFun catalog_vminus(int i, const OscParams& p) {
    const Scalar h = make_scalar(1, 2), l = p.ell, w = p.omega;
    Scalar c;
    switch (i) {
        case 1: c = -w * (l + 3 * h); break;
        case 2: c = w * (l - h); break;
        case 3: c = w * (l + 3 * h); break;
        case 4: c = -w * (l - h); break;
        default: throw std::invalid_argument("catalog row must be 1..4");
    }
    return oscillator(p) + YRatFun(c);
}

// ω²r²/4 + k/r² ± ω(ℓ+1/2)
inline YRatFun catalog_vplus(int i, const OscParams& p) {
    const Scalar h = make_scalar(1, 2), l = p.ell, w = p.omega;
    Scalar k = (i == 1 || i == 3) ? Scalar((l + 1) * (l + 2)) : Scalar(l * (l - 1));
    Scalar c = (i == 2 || i == 3) ? Scalar(w * (l + h)) : Scalar(-w * (l + h));
    if (i < 1 || i > 4) throw std::invalid_argument("catalog row must be 1..4");
    return YRatFun(YPoly::y()) * (w / 2) + ratfun_reduce(YPoly(w * k / 2), YPoly::y()) + YRatFun(c);
}

// Type II row with prefactor −(α+1) and L_m^{α+1}; r∂_r → 2x d/dx.
inline YPoly type_ii_eop(int m, int n, const Scalar& alpha, int argSign = +1) {
    const YPoly x = YPoly::y();
    YPoly p = laguerre_poly(m, alpha + 1) * laguerre_poly(n, -alpha) * (-(alpha + 1)) +
              x * laguerre_poly(m, alpha) * laguerre_poly(n, -alpha).derivative() * 2;
    return argSign < 0 ? p.scale_arg(-1) : p;
}

// Conventional superpotential rows as (1/r coefficient, slope).
inline PoleForm conventional_row(int i, int m, const OscParams& p) {
    const Scalar a = gen1_alpha(i, p.ell);
    const Scalar a2 = gen1_alpha(2, p.ell);
    YRatFun k(make_scalar(1, 2));
    auto lg = [](const YPoly& q) { return q.is_constant() ? YRatFun() : log_derivative(q); };
    switch (i) {
        case 1: k = k + lg(laguerre_poly(m, a, -1)) - lg(laguerre_poly(m + 1, a - 1, -1)); break;
        case 2: k = k + lg(laguerre_poly(m, a, -1)) - lg(laguerre_poly(m, a + 1, -1)); break;
        case 3: {
            // numerator and denominator carry different parameters as displayed
            YPoly den = laguerre_poly(m, a2, -1);
            k = k + ratfun_reduce(laguerre_poly(m, a, -1).derivative(), den) - lg(laguerre_poly(m, a + 1));
            break;
        }
        default: throw std::invalid_argument("conventional row must be 1..3");
    }
    return {-(p.ell + 1), k};
}

// Displayed type-I X₁ equation, z Y″ + (−z + g + 3/2 − 2zξ′/ξ)Y′ + (−2z η′/ξ + n′ + 1)Y,
// ξ = L₁^{g−1/2}(z), η = L₁^{g+1/2}(z).
inline LinearOde l1_operator(int nprime, const Scalar& g) {
    const YRatFun z = YPoly::y();
    const YPoly xi = laguerre_poly(1, g - make_scalar(1, 2));
    const YPoly eta = laguerre_poly(1, g + make_scalar(1, 2));
    return {z, YRatFun(g + make_scalar(3, 2)) - z - z * log_derivative(xi) * 2,
            YRatFun(Scalar(nprime + 1)) - z * ratfun_reduce(eta.derivative(), xi) * 2};
}

// Dual residue values as displayed; c₁ in units of ω.
struct ResidueValues {
    std::array<Scalar, 2> b1, d1, d1p, c1;
};

inline ResidueValues residues(int i, const OscParams& p) {
    const Scalar l2 = 2 * p.ell + 1;
    switch (i) {
        case 1: return {{0, l2}, {0, -3}, {0, -1}, {0, -1}};
        case 2: return {{0, -l2}, {0, -3}, {0, -1}, {0, -1}};
        case 3: return {{0, l2}, {0, 3}, {0, -1}, {0, 1}};
        default: throw std::invalid_argument("residue table row must be 1..3");
    }
}

inline Scalar r2(int i, int nprime, const Scalar& reparam, const Scalar& omega) {
    const Scalar h = make_scalar(1, 2);
    switch (i) {
        case 1: return -(-nprime + reparam + 3 * h) * 2 * omega;
        case 2: return (reparam + h + nprime) * 2 * omega;
        case 3: return (nprime + reparam + 3 * h) * 2 * omega;
        default: throw std::invalid_argument("family must be 1..3");
    }
}

// P_N as displayed; for i = 2 this uses the displayed type II row.
inline YPoly pn(int i, int nprime, const Scalar& reparam) {
    if (i == 2) return type_ii_eop(1, nprime, -reparam - make_scalar(3, 2), -1);
    return pn_closed_form(i, nprime, reparam).poly;
}

// W̄ᵢ displays.
inline PoleForm wbar(const Gen2Family& g) {
    const Scalar& l = g.p.ell;
    YRatFun k(g.i == 1 ? make_scalar(1, 2) : make_scalar(-1, 2));
    k = k + log_derivative(g.parent.seed_poly) - log_derivative(g.pn.poly);
    return {g.i == 1 ? Scalar(-l) : l, k};
}

// V̄ᵢ⁺ displays.
inline YRatFun vbar(const Gen2Family& g) {
    const Scalar h = make_scalar(1, 2), l = g.p.ell, w = g.p.omega;
    const int n = g.nprime;
    auto vplus = partner_potentials(catalog_superpotential(g.i, g.p), g.p).second.value;
    PoleForm lp{0, log_derivative(g.pn.poly)};
    switch (g.i) {
        case 1: {
            PoleForm phi{2 * l + 1, -log_derivative(g.pn.poly)};
            return vplus + phi.derivative(w) * 2 + YRatFun(2 * w * (l - n - h));
        }
        case 2: return vplus - lp.derivative(w) * 2 + YRatFun(2 * w * (n + g.reparam + h));
        default: return vplus - lp.derivative(w) * 2 + YRatFun(2 * w * (n - l + h));
    }
}

// 𝒬 displays.
inline YPoly q(const Gen2Family& g, int n) {
    const YPoly y = YPoly::y();
    const YPoly Y = make_xm_eop(gen1_eop_kind(g.i), 1, n, g.parent.alpha, +1).poly;
    const YPoly& P = g.pn.poly;
    const Scalar l2 = 2 * g.p.ell + 1;
    switch (g.i) {
        case 1: return P * Y * l2 + y * (P * Y.derivative() - Y * P.derivative()) * 2;
        case 2: return (YPoly(l2) - y * 2) * Y * P - y * (P * Y.derivative() + Y * P.derivative()) * 2;
        default: return (YPoly(l2) - y * 2) * P * Y + y * (P * Y.derivative() - Y * P.derivative()) * 2;
    }
}

// Zero-free observations for P_N; nullopt where nothing is claimed.
inline std::optional<bool> window(int i, int nprime, const Scalar& ell, const Scalar& R2) {
    switch (i) {
        case 1: return R2 > -2 && R2 < 0;
        case 2: {
            if (!is_integer(ell)) return std::nullopt;
            const bool lo = to_long(ell) % 2 != 0, no = nprime % 2 != 0;
            if (lo && no) return R2 >= make_scalar(-3, 2);
            if (!lo && !no) return R2 <= make_scalar(-5, 2);
            return std::nullopt;
        }
        case 3: {
            if (!is_integer(ell)) return std::nullopt;
            if (to_long(ell) % 2 == 0) return R2 > make_scalar(3, 2);
            return R2 < 0;
        }
        default: throw std::invalid_argument("family must be 1..3");
    }
}

}  // namespace xlag::published
