#pragma once

#include "eop.hpp"
#include "odesolve.hpp"
#include "susy.hpp"

#include <stdexcept>
#include <string>

namespace xlag {

struct InvalidFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One rationally extended oscillator: seed P_m^{α_i}, α_i and R₁ for i = 1..3.
struct Gen1Family {
    int i = 1;
    int m = 0;
    OscParams p;
    Scalar alpha = 0;
    Scalar R1 = 0;
    LaguerreSpec seed;
    YPoly seed_poly = YPoly(1);
    int seed_roots = 0;  // distinct roots in (0, ∞), plus one if the seed vanishes at 0
    bool valid = true;

    std::string key() const {
        return "gen1/i=" + std::to_string(i) + "/m=" + std::to_string(m) + "/ell=" + to_string(p.ell) +
               "/omega=" + to_string(p.omega);
    }
};

inline int roots_in_domain(const YPoly& q) {
    if (q.is_constant()) return 0;
    return positive_root_count(q) + (q.coeff(0) == 0 ? 1 : 0);
}

inline Scalar gen1_alpha(int i, const Scalar& ell) {
    if (i == 2) return ell - make_scalar(1, 2);
    if (i == 1 || i == 3) return -ell - make_scalar(3, 2);
    throw std::invalid_argument("first-generation family index must be 1..3, got " + std::to_string(i));
}

inline Gen1Family make_gen1(int i, int m, const OscParams& p, bool allow_invalid = false) {
    if (m < 0) throw std::invalid_argument("codimension m must be nonnegative");
    Gen1Family f;
    f.i = i;
    f.m = m;
    f.p = p;
    f.alpha = gen1_alpha(i, p.ell);
    f.R1 = (i == 3 ? -2 : 2) * m * p.omega;
    f.seed = LaguerreSpec{m, f.alpha, i == 3 ? +1 : -1};
    f.seed_poly = laguerre_poly(f.seed);
    f.seed_roots = roots_in_domain(f.seed_poly);
    f.valid = f.seed_roots == 0;
    if (!f.valid && !allow_invalid)
        throw InvalidFamily(f.key() + ": seed " + f.seed_poly.str() + " has " +
                            std::to_string(f.seed_roots) + " root(s) in [0, inf)");
    return f;
}

inline void require_valid(const Gen1Family& f) {
    if (!f.valid) throw InvalidFamily(f.key() + ": seed fails the zero-free certificate");
}

// Degree-m polynomial P with P″ + 2σ·W·P′ − R·P = 0 (σ = −1 when signFlip).
// In y: y P″ + (1/2 + σ·invR + 2σ·y·K) P′ = (R/2ω) P.
inline std::pair<YPoly, Scalar> solve_p_equation(const SuperpotentialForm& w, bool signFlip, int m,
                                                 const OscParams& p) {
    const int sg = signFlip ? -1 : 1;
    const YRatFun y = YPoly::y();
    LinearOde ode{y, YRatFun(make_scalar(1, 2) + sg * w.invR) + y * w.slope() * (2 * sg), YRatFun()};
    PolySolution s = solve_polynomial_eigen(ode, m);
    return {s.poly, 2 * p.omega * s.lambda};
}

namespace detail {
inline SuperpotentialForm deformed_superpotential_unchecked(const Gen1Family& f) {
    SuperpotentialForm w = catalog_superpotential(f.i, f.p);
    if (f.m > 0) w.logTerms.push_back({+1, f.seed_poly});
    return w;
}
}  // namespace detail

inline EopKind gen1_eop_kind(int i) {
    switch (i) {
        case 1: return EopKind::III;
        case 2: return EopKind::I;
        case 3: return EopKind::II;
        default: throw std::invalid_argument("first-generation family index must be 1..3");
    }
}

inline SuperpotentialForm deformed_superpotential(const Gen1Family& f) {
    require_valid(f);
    return detail::deformed_superpotential_unchecked(f);
}

// ∂²_r ln q(y) = ω(g + 2y g′), g = q′/q
inline YRatFun second_log_derivative(const YPoly& q, const Scalar& omega) {
    if (q.is_constant()) return {};
    YRatFun g = log_derivative(q);
    return (g + YRatFun(YPoly::y()) * g.derivative() * 2) * omega;
}

namespace detail {
// Ṽᵢ⁻ = Vᵢ⁻ − 2∂²_r ln P + R₁
inline PotentialForm gen1_potential_unchecked(const Gen1Family& f) {
    auto vminus = partner_potentials(catalog_superpotential(f.i, f.p), f.p).first;
    return {vminus.value - second_log_derivative(f.seed_poly, f.p.omega) * 2 + YRatFun(f.R1)};
}

inline WaveFunction gen1_eigenfunction_unchecked(const Gen1Family& f, int n) {
    if (n < 0) throw std::invalid_argument("negative state index");
    YPoly num = make_xm_eop(gen1_eop_kind(f.i), f.m, n, f.alpha, +1).poly;
    return WaveFunction::make(1, f.p.ell + 1, -1, num, f.seed_poly);
}
}  // namespace detail

inline PotentialForm gen1_potential(const Gen1Family& f) {
    require_valid(f);
    return detail::gen1_potential_unchecked(f);
}

// Ṽᵢ⁺ = W̃² + W̃′, which must equal Vᵢ⁺ + R₁.
inline PotentialForm gen1_potential_plus(const Gen1Family& f) {
    return partner_potentials(deformed_superpotential(f), f.p).second;
}

inline XmEOP xm_eop(EopKind kind, int m, int n, const OscParams& p) {
    int i = kind == EopKind::III ? 1 : kind == EopKind::I ? 2 : 3;
    return make_xm_eop(kind, m, n, gen1_alpha(i, p.ell), +1);
}

// r^{ℓ+1} e^{−y/2} · EOP_n / P_m
inline WaveFunction gen1_eigenfunction(const Gen1Family& f, int n) {
    require_valid(f);
    return detail::gen1_eigenfunction_unchecked(f, n);
}

// The displayed energy formula: 2ω(n+m) for i = 1, 2 and 2ω(n−m) for i = 3.
inline Scalar gen1_energy(const Gen1Family& f, int n) {
    return 2 * f.p.omega * (f.i == 3 ? n - f.m : n + f.m);
}

// Constant separating Vᵢ⁻ from V₁⁻; the displayed energies are measured from V₁⁻.
inline Scalar gen1_reference_offset(const Gen1Family& f) {
    switch (f.i) {
        case 1: return 0;
        case 2: return f.p.omega * (2 * f.p.ell + 1);
        default: return f.p.omega * (2 * f.p.ell + 3);
    }
}

// Displayed label of the state built from EOP index n is n + shift.
inline int gen1_label_shift(const Gen1Family& f) { return f.i == 1 ? 1 : 0; }

// Exact eigenvalue of gen1_eigenfunction(f, n) under gen1_potential(f).
inline Scalar gen1_eigenvalue(const Gen1Family& f, int n) {
    return gen1_energy(f, n + gen1_label_shift(f)) + gen1_reference_offset(f);
}

// r^{ℓ+1} e^{−y/2} / P_m
inline WaveFunction gen1_weight(const Gen1Family& f) {
    WaveFunction w = WaveFunction::make(1, f.p.ell + 1, -1, YPoly(1), f.seed_poly);
    WaveFunction g = ground_state(catalog_superpotential(1, f.p));
    if (g.a != w.a || g.s != w.s || !g.den.is_constant() || !g.num.is_constant())
        throw std::logic_error("weight prefactor differs from exp(-int W1)");
    return w;
}

// −∂_r ln ψ̃₀⁻
inline SuperpotentialForm conventional_superpotential_unchecked(const Gen1Family& f) {
    WaveFunction g = WaveFunction::make(1, f.p.ell + 1, -1,
                                        make_xm_eop(gen1_eop_kind(f.i), f.m, 0, f.alpha, +1).poly,
                                        f.seed_poly);
    SuperpotentialForm w;
    w.invR = -g.a;
    w.linR = make_scalar(-g.s, 2);
    if (!g.num.is_constant()) w.logTerms.push_back({-1, g.num});
    if (!g.den.is_constant()) w.logTerms.push_back({+1, g.den});
    return w;
}

// −∂_r ln ψ̃₀⁻, checked against 𝒲̄² − 𝒲̄′ = Ṽ⁻ − (eigenvalue of ψ̃₀⁻).
inline SuperpotentialForm conventional_superpotential(const Gen1Family& f) {
    require_valid(f);
    SuperpotentialForm w = conventional_superpotential_unchecked(f);
    YRatFun d = partner_potentials(w, f.p).first.value - gen1_potential(f).value + YRatFun(gen1_eigenvalue(f, 0));
    if (!d.is_zero()) throw std::logic_error(f.key() + ": conventional superpotential identity fails by " + d.str());
    return w;
}

}  // namespace xlag
