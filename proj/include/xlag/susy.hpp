#pragma once

#include "laguerre.hpp"
#include "sturm.hpp"
#include "wave.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace xlag {

// The four radial-oscillator superpotentials ±ωr/2 + {−(ℓ+1), ℓ}/r.
inline SuperpotentialForm catalog_superpotential(int i, const OscParams& p) {
    SuperpotentialForm w;
    const Scalar half = make_scalar(1, 2);
    switch (i) {
        case 1: w.linR = half;  w.invR = -(p.ell + 1); break;
        case 2: w.linR = half;  w.invR = p.ell;        break;
        case 3: w.linR = -half; w.invR = -(p.ell + 1); break;
        case 4: w.linR = -half; w.invR = p.ell;        break;
        default: throw std::invalid_argument("superpotential index must be 1..4, got " + std::to_string(i));
    }
    return w;
}

// ℓ after the shape-invariance step: ℓ+1 for i = 1, 3 and ℓ−1 for i = 2, 4.
inline Scalar shifted_ell(int i, const Scalar& ell) {
    if (i < 1 || i > 4) throw std::invalid_argument("superpotential index must be 1..4");
    return (i == 1 || i == 3) ? Scalar(ell + 1) : Scalar(ell - 1);
}

// W² and ∂_r W as functions of y.
inline std::pair<YRatFun, YRatFun> square_and_slope(const SuperpotentialForm& w, const OscParams& p) {
    w.require_regular_at_origin();
    PoleForm f = PoleForm::of(w);
    return {f.times(f, p.omega), f.derivative(p.omega)};
}

// (V⁻, V⁺) = (W² − W′, W² + W′)
inline std::pair<PotentialForm, PotentialForm> partner_potentials(const SuperpotentialForm& w,
                                                                  const OscParams& p) {
    auto [sq, dw] = square_and_slope(w, p);
    return {PotentialForm{sq - dw}, PotentialForm{sq + dw}};
}

// V⁺(ℓ) − V⁻(ℓ → a₁), required to be constant.
inline Scalar shape_invariance_shift(int i, const OscParams& p) {
    auto vplus = partner_potentials(catalog_superpotential(i, p), p).second;
    OscParams q(p.omega, shifted_ell(i, p.ell));
    auto vminus = partner_potentials(catalog_superpotential(i, q), q).first;
    YRatFun d = vplus.value - vminus.value;
    if (!d.is_constant())
        throw std::logic_error("shape invariance violated: difference " + d.str() + " is not constant");
    return d.constant_value();
}

// ψ′/ψ = a/r + ωr·H(y)
inline YRatFun log_slope(const WaveFunction& psi) {
    YRatFun h(make_scalar(psi.s, 2));
    if (!psi.num.is_constant()) h += log_derivative(psi.num);
    if (!psi.den.is_constant()) h -= log_derivative(psi.den);
    return h;
}

// (±d/dr + W)ψ; the sign is + for dagger = false.
inline WaveFunction apply_intertwiner(const SuperpotentialForm& w, bool dagger, const WaveFunction& psi,
                                      const OscParams& p) {
    (void)p;
    if (psi.den.is_zero()) throw std::invalid_argument("wave function with zero denominator");
    if (psi.is_zero()) return WaveFunction::make(0, psi.a - 1, psi.s, YPoly(), YPoly(1));
    const int pm = dagger ? -1 : 1;
    YRatFun k = w.slope();
    YRatFun h = log_slope(psi);
    YRatFun inner = pm > 0 ? h + k : k - h;
    // r·(±ψ′/ψ + W) = (±a + invR) + 2y(±H + K)
    YRatFun m = YRatFun(pm * psi.a + w.invR) + YRatFun(YPoly::y()) * inner * 2;
    return WaveFunction::make(psi.constant, psi.a - 1, psi.s, psi.num * m.num(), psi.den * m.den());
}

// (V − E) − ψ″/ψ; identically zero iff ψ solves −ψ″ + Vψ = Eψ.
inline YRatFun schrodinger_residual(const PotentialForm& v, const WaveFunction& psi, const Scalar& e,
                                    const OscParams& p) {
    if (psi.num.is_zero()) throw std::invalid_argument("schrodinger_residual of the zero wave function");
    const Scalar& om = p.omega;
    const Scalar& a = psi.a;
    YRatFun h = log_slope(psi);
    YRatFun ratio = ratfun_reduce(YPoly(om * a * (a - 1) / 2), YPoly::y()) + h * ((2 * a + 1) * om) +
                    YRatFun(YPoly::y()) * (h * h + h.derivative()) * (2 * om);
    return v.value - YRatFun(e) - ratio;
}

// exp(−∫W), or exp(+∫W) for the partner's candidate ground state.
inline WaveFunction ground_state(const SuperpotentialForm& w, bool partner = false) {
    const int sg = partner ? 1 : -1;
    Scalar s2 = 2 * sg * w.linR;  // exp(s·y/2) with s = ∓2·linR
    if (s2 != 1 && s2 != -1)
        throw std::invalid_argument("ground state needs linR = ±1/2 to stay in Gaussian form");
    YPoly num(1), den(1);
    for (const auto& t : w.logTerms) {
        YPoly f = pow(t.poly, static_cast<unsigned>(std::abs(t.sign)));
        if (t.sign * sg < 0) den *= f;
        else num *= f;
    }
    return WaveFunction::make(1, sg * w.invR, static_cast<int>(to_long(s2)), num, den);
}

// Square integrable on (0, ∞): r^a with a > 1/2 at the origin, Gaussian decay, regular denominator.
inline bool is_normalizable(const WaveFunction& psi) {
    if (psi.is_zero()) return false;
    if (psi.s != -1 || psi.a <= make_scalar(1, 2)) return false;
    return psi.den.is_constant() || positive_root_count(psi.den) == 0;
}

// k with ψ₁ = k·ψ₂, by cross-multiplication; nullopt if not proportional.
inline std::optional<Scalar> proportionality(const WaveFunction& p1, const WaveFunction& p2) {
    if (p1.is_zero() || p2.is_zero()) return std::nullopt;
    if (p1.a != p2.a || p1.s != p2.s) return std::nullopt;
    YPoly lhs = p1.num * p2.den;
    YPoly rhs = p2.num * p1.den;
    Scalar ratio = lhs.lead() / rhs.lead();
    if (lhs != rhs * ratio) return std::nullopt;
    return ratio * p1.constant / p2.constant;
}

}  // namespace xlag
