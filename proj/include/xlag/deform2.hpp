#pragma once

#include "deform1.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xlag {

struct UnsupportedIteration : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IdentificationError : std::logic_error {
    using std::logic_error::logic_error;
};

// φ = b₁/r + ωr·(c₁ + d₁ S′/S + d₁′ P′/P), all in units where c₁ multiplies ωr.
struct ResidueChoice {
    Scalar b1 = 0;
    Scalar d1 = 0;
    Scalar d1p = 0;
    Scalar c1 = 0;
    Scalar C = 0;  // constant (r⁰) part of the ansatz

    bool operator==(const ResidueChoice& o) const {
        return b1 == o.b1 && d1 == o.d1 && d1p == o.d1p && c1 == o.c1 && C == o.C;
    }
    std::string str() const {
        return "b1=" + to_string(b1) + " d1=" + to_string(d1) + " d1p=" + to_string(d1p) +
               " c1=" + to_string(c1) + " C=" + to_string(C);
    }
};

// ρ² + linear·ρ = 0 solved; roots {0, −linear}.
struct ResiduePair {
    Scalar linear = 0;
    std::array<Scalar, 2> values{};
    bool present = true;
};

struct ResidueSet {
    ResiduePair b1;   // simple pole at r = 0
    ResiduePair d1;   // seed zeros
    ResiduePair d1p;  // zeros of P_N
    ResiduePair c1;   // growth at infinity, units of ω
};

namespace detail {
inline ResiduePair residue_pair(const Scalar& lin) {
    ResiduePair r;
    r.linear = lin;
    r.values = {Scalar(0), Scalar(-lin)};
    return r;
}

// the one nonconstant log term of W̃, or nullopt
inline std::optional<LogTerm> single_seed(const SuperpotentialForm& w) {
    std::optional<LogTerm> out;
    for (const auto& t : w.logTerms) {
        if (t.poly.is_constant()) continue;
        if (out) throw std::invalid_argument("expected at most one seed log term in the superpotential");
        out = t;
    }
    return out;
}
}  // namespace detail

// Leading Laurent balance of φ² + 2W̃φ − φ′ at each singular point.
inline ResidueSet enumerate_residues(const SuperpotentialForm& wt) {
    wt.require_regular_at_origin();
    ResidueSet s;
    s.b1 = detail::residue_pair(2 * wt.invR + 1);
    auto seed = detail::single_seed(wt);
    if (seed) {
        if (gcd(seed->poly, seed->poly.derivative()).degree() > 0)
            throw std::invalid_argument("seed polynomial has a repeated root: " + seed->poly.str());
        s.d1 = detail::residue_pair(Scalar(2 * seed->sign + 1));
    } else {
        s.d1 = detail::residue_pair(0);
        s.d1.present = false;
    }
    s.d1p = detail::residue_pair(1);
    s.c1 = detail::residue_pair(2 * wt.linR);
    return s;
}

// The residue selection that leads to the closed-form P_N for each family.
inline ResidueChoice published_residue_choice(int i, const OscParams& p) {
    const Scalar l2 = 2 * p.ell + 1;
    switch (i) {
        case 1: return {l2, 0, -1, 0, 0};
        case 2: return {0, 0, -1, -1, 0};
        case 3: return {l2, 0, -1, 0, 0};
        default: throw std::invalid_argument("second-iteration family index must be 1..3");
    }
}

inline PoleForm phi_base(const SuperpotentialForm& wt, const ResidueChoice& c) {
    YRatFun k(c.c1);
    auto seed = detail::single_seed(wt);
    if (seed && c.d1 != 0) k += log_derivative(seed->poly) * c.d1;
    return {c.b1, k};
}

// Odd-in-r part of the Riccati balance fixes C: the r¹ coefficient is 2C·ω(linR + c₁),
// the r⁻¹ coefficient 2C(invR + b₁).
inline Scalar analytic_constant(const SuperpotentialForm& wt, const ResidueChoice& c) {
    if (wt.linR + c.c1 != 0) return 0;
    if (wt.invR + c.b1 != 0) return 0;
    throw std::domain_error("analytic constant is undetermined for " + c.str());
}

// F₀ = φ₀² + 2W̃φ₀ − φ₀′
inline YRatFun riccati_source(const SuperpotentialForm& wt, const PoleForm& phi0, const OscParams& p) {
    PoleForm w = PoleForm::of(wt);
    return phi0.times(phi0, p.omega) + w.times(phi0, p.omega) * 2 - phi0.derivative(p.omega);
}

// P″ − 2U P′ + (F₀ − R₂)P = 0 with U = W̃ + φ₀, written as y P″ + B P′ + C P = (R₂/2ω) P.
inline LinearOde pn_equation(const SuperpotentialForm& wt, const ResidueChoice& c, const OscParams& p) {
    PoleForm phi0 = phi_base(wt, c);
    PoleForm u = PoleForm::of(wt) + phi0;
    const YRatFun y = YPoly::y();
    YRatFun b = YRatFun(make_scalar(1, 2) - u.invR) - y * u.slope * 2;
    YRatFun cc = riccati_source(wt, phi0, p) * (1 / (2 * p.omega));
    return {y, b, cc};
}

struct Gen2Family {
    int i = 1;
    int m = 1;
    int nprime = 0;
    Scalar reparam = 0;
    OscParams p;
    Gen1Family parent;
    ResidueChoice choice;
    XmEOP pn;           // closed form of P_N
    Scalar R2 = 0;      // from the P_N equation
    bool independent_solve = false;  // nullspace solve agreed with the closed form
    int pn_roots = 0;
    bool valid = true;

    std::string key() const {
        return "gen2/i=" + std::to_string(i) + "/m=" + std::to_string(m) + "/nprime=" + std::to_string(nprime) +
               "/reparam=" + to_string(reparam) + "/omega=" + to_string(p.omega);
    }
    const YPoly& pn_poly() const { return pn.poly; }
};

// ℓ = −reparam − 1
inline Scalar gen2_ell(const Scalar& reparam) { return -reparam - 1; }

// Closed form of P_N for the published residue choice.
inline XmEOP pn_closed_form(int i, int nprime, const Scalar& reparam) {
    const Scalar half = make_scalar(1, 2);
    switch (i) {
        case 1: return make_xm_eop(EopKind::I, 1, nprime, reparam - half, +1);
        case 2: return make_xm_eop(EopKind::II, 1, nprime, -reparam - 3 * half, -1);
        case 3: return make_xm_eop(EopKind::I, 1, nprime, reparam - half, -1);
        default: throw std::invalid_argument("second-iteration family index must be 1..3");
    }
}

struct PnSolution {
    XmEOP closed;
    Scalar R2;
    bool independent_solve = false;
};

// Check the closed form against the P_N equation and read off R₂ = 2ωλ.
inline PnSolution solve_pn(const Gen1Family& parent, const ResidueChoice& c, int nprime, const Scalar& reparam) {
    SuperpotentialForm wt = detail::deformed_superpotential_unchecked(parent);
    LinearOde ode = pn_equation(wt, c, parent.p);
    PnSolution out{pn_closed_form(parent.i, nprime, reparam), 0, false};
    const YPoly& pc = out.closed.poly;
    if (pc.degree() != nprime + 1)
        throw IdentificationError("closed-form P_N has degree " + std::to_string(pc.degree()) + ", expected " +
                                  std::to_string(nprime + 1));
    YRatFun lam = ode.apply(pc) / YRatFun(pc);
    if (!lam.is_constant())
        throw IdentificationError("closed-form P_N does not solve the P_N equation: ratio " + lam.str());
    out.R2 = 2 * parent.p.omega * lam.constant_value();
    try {
        PolySolution s = solve_polynomial_eigen(ode, nprime + 1);
        if (s.lambda != lam.constant_value() || s.poly * pc.lead() != pc)
            throw IdentificationError("nullspace solution " + s.poly.str() + " differs from closed form " + pc.str());
        out.independent_solve = true;
    } catch (const NoPolynomialSolution&) {
        // degenerate parameter: the kernel is not one-dimensional; closed form already checked
    }
    return out;
}

inline Gen2Family make_gen2(int i, int m, int nprime, const Scalar& reparam, const Scalar& omega,
                            bool allow_invalid = false) {
    if (m != 1) throw UnsupportedIteration("second iteration requires m=1, got m=" + std::to_string(m));
    if (i < 1 || i > 3) throw std::invalid_argument("second-iteration family index must be 1..3");
    if (nprime < 0) throw std::invalid_argument("n' must be nonnegative");
    Gen2Family g;
    g.i = i;
    g.m = m;
    g.nprime = nprime;
    g.reparam = reparam;
    g.p = OscParams(omega, gen2_ell(reparam));
    g.parent = make_gen1(i, 1, g.p, true);
    g.choice = published_residue_choice(i, g.p);
    SuperpotentialForm wt = detail::deformed_superpotential_unchecked(g.parent);
    g.choice.C = analytic_constant(wt, g.choice);
    PnSolution s = solve_pn(g.parent, g.choice, nprime, reparam);
    g.pn = s.closed;
    g.R2 = s.R2;
    g.independent_solve = s.independent_solve;
    g.pn_roots = roots_in_domain(g.pn.poly);
    g.valid = g.pn_roots == 0;
    if (!g.valid && !allow_invalid)
        throw InvalidFamily(g.key() + ": P_N = " + g.pn.poly.str() + " has " + std::to_string(g.pn_roots) +
                            " root(s) in [0, inf)");
    return g;
}

inline SuperpotentialForm gen2_parent_superpotential(const Gen2Family& g) {
    return detail::deformed_superpotential_unchecked(g.parent);
}

// φ₂ = φ₀ + d₁′ ∂_r ln P_N
inline PoleForm gen2_phi(const Gen2Family& g) {
    PoleForm f = phi_base(gen2_parent_superpotential(g), g.choice);
    if (g.choice.d1p != 0) f.slope += log_derivative(g.pn.poly) * g.choice.d1p;
    return f;
}

// φ² + 2W̃φ − φ′ − R₂, zero for a consistent choice
inline YRatFun riccati_residual(const SuperpotentialForm& wt, const PoleForm& phi, const Scalar& R2,
                                const OscParams& p) {
    return riccati_source(wt, phi, p) - YRatFun(R2);
}

// W̄ = W̃ + φ₂
inline SuperpotentialForm gen2_superpotential(const Gen2Family& g) {
    SuperpotentialForm wt = gen2_parent_superpotential(g);
    const ResidueChoice& c = g.choice;
    if (!is_integer(c.d1) || !is_integer(c.d1p))
        throw std::domain_error("log residues must be integers");
    SuperpotentialForm w;
    w.invR = wt.invR + c.b1;
    w.linR = wt.linR + c.c1;
    for (auto t : wt.logTerms) {
        t.sign += static_cast<int>(to_long(c.d1));
        if (t.sign != 0) w.logTerms.push_back(t);
    }
    if (c.d1p != 0) w.logTerms.push_back({static_cast<int>(to_long(c.d1p)), g.pn.poly});
    return w;
}

// V̄ᵢ⁺ = Vᵢ⁺ + 2∂_r φ₂ + R₁ + R₂
inline PotentialForm gen2_potential(const Gen2Family& g) {
    auto vplus = partner_potentials(catalog_superpotential(g.i, g.p), g.p).second;
    return {vplus.value + gen2_phi(g).derivative(g.p.omega) * 2 + YRatFun(g.parent.R1 + g.R2)};
}

struct TwoIndexEOP {
    int i = 1;
    int n = 0;
    int nprime = 0;
    YPoly poly;
};

// 𝒬: numerator of (d/dr + W̄) applied to the first-iteration state n, over r^ℓ e^{−y/2}.
inline TwoIndexEOP two_index_eop(const Gen2Family& g, int n) {
    if (n < 0) throw std::invalid_argument("negative state index");
    const YPoly y = YPoly::y();
    const YPoly Y = make_xm_eop(gen1_eop_kind(g.i), 1, n, g.parent.alpha, +1).poly;
    const YPoly& P = g.pn.poly;
    const Scalar l2 = 2 * g.p.ell + 1;
    YPoly wr = y * (P * Y.derivative() - Y * P.derivative()) * 2;
    YPoly q = g.i == 1 ? P * Y * l2 + wr : (YPoly(l2) - y * 2) * Y * P + wr;
    return {g.i, n, g.nprime, q};
}

// r^ℓ e^{−y/2} 𝒬 / (seed·P_N), reduced
inline WaveFunction gen2_eigenfunction(const Gen2Family& g, int n) {
    if (!g.valid) throw InvalidFamily(g.key() + ": P_N fails the zero-free certificate");
    return WaveFunction::make(1, g.p.ell, -1, two_index_eop(g, n).poly, g.parent.seed_poly * g.pn.poly);
}

// Displayed energy formula.
inline Scalar gen2_energy(const Gen2Family& g, int n) {
    const Scalar half = make_scalar(1, 2);
    const Scalar& l = g.p.ell;
    switch (g.i) {
        case 1: return 2 * g.p.omega * (n - g.nprime + l + half);
        case 2: return 2 * g.p.omega * (n + g.nprime - l + half);
        default: return 2 * g.p.omega * (n + g.nprime - l - half);
    }
}

inline int gen2_label_shift(const Gen2Family& g) { return gen1_label_shift(g.parent); }
inline Scalar gen2_reference_offset(const Gen2Family& g) { return gen1_reference_offset(g.parent); }

// Exact eigenvalue of gen2_eigenfunction(g, n) under gen2_potential(g).
inline Scalar gen2_eigenvalue(const Gen2Family& g, int n) { return gen1_eigenvalue(g.parent, n) + g.R2; }

struct Gen2Weight {
    WaveFunction effective;   // r^ℓ e^{−y/2} / P_N
    WaveFunction displayed;   // r^ℓ e^{−y/2} / (seed·P_N)
    int effective_roots = 0;
    int displayed_roots = 0;
    bool effective_certified = false;
    bool displayed_certified = false;
};

inline Gen2Weight gen2_weight(const Gen2Family& g) {
    Gen2Weight w;
    w.effective = WaveFunction::make(1, g.p.ell, -1, YPoly(1), g.pn.poly);
    w.displayed = WaveFunction::make(1, g.p.ell, -1, YPoly(1), g.parent.seed_poly * g.pn.poly);
    w.effective_roots = roots_in_domain(w.effective.den);
    w.displayed_roots = roots_in_domain(w.displayed.den);
    w.effective_certified = w.effective_roots == 0;
    w.displayed_certified = w.displayed_roots == 0;
    return w;
}

enum class ChoiceClass { Published, Conventional, Other };

inline const char* class_name(ChoiceClass c) {
    switch (c) {
        case ChoiceClass::Published: return "published";
        case ChoiceClass::Conventional: return "conventional";
        default: return "other";
    }
}

struct ChoiceReport {
    ResidueChoice choice;
    ChoiceClass cls = ChoiceClass::Other;
    std::string leading;        // leading-order balance as y → ∞
    bool r_dependent_R2 = false;
    std::optional<Scalar> R2;   // when the balance fixes a constant directly (d₁′ = 0)
};

namespace detail {
// deg num − deg den
inline int growth(const YRatFun& f) { return f.is_zero() ? -1000 : f.num().degree() - f.den().degree(); }

inline Scalar limit_coeff(const YRatFun& f, int power) {
    if (f.is_zero()) return 0;
    if (growth(f) != power) return 0;
    return f.num().lead() / f.den().lead();
}
}  // namespace detail

// All 16 root selections for the first-iteration family f (m ≥ 1).
inline std::vector<ChoiceReport> enumerate_other_choices(const Gen1Family& f) {
    if (f.m < 1) throw std::invalid_argument("residue enumeration needs a seed (m >= 1)");
    SuperpotentialForm wt = detail::deformed_superpotential_unchecked(f);
    ResidueSet rs = enumerate_residues(wt);
    SuperpotentialForm conv = conventional_superpotential_unchecked(f);
    std::optional<ResidueChoice> pub;
    if (f.m == 1) pub = published_residue_choice(f.i, f.p);
    std::vector<ChoiceReport> out;
    for (const auto& b1 : rs.b1.values)
        for (const auto& d1 : rs.d1.values)
            for (const auto& d1p : rs.d1p.values)
                for (const auto& c1 : rs.c1.values) {
                    ChoiceReport r;
                    r.choice = {b1, d1, d1p, c1, 0};
                    try {
                        r.choice.C = analytic_constant(wt, r.choice);
                    } catch (const std::domain_error&) {
                        r.leading = "C undetermined; ";
                    }
                    if (pub && r.choice == *pub) r.cls = ChoiceClass::Published;
                    else if (wt.invR + b1 == conv.invR && wt.linR + c1 == conv.linR && d1 == 0 && d1p == -1)
                        r.cls = ChoiceClass::Conventional;
                    if (d1p == 0) {
                        YRatFun f0 = riccati_source(wt, phi_base(wt, r.choice), f.p);
                        r.r_dependent_R2 = !f0.is_constant();
                        if (!r.r_dependent_R2) r.R2 = f0.constant_value();
                        r.leading += "F0 = " + f0.str();
                    } else {
                        LinearOde ode = pn_equation(wt, r.choice, f.p);
                        const int gb = detail::growth(ode.b), gc = detail::growth(ode.c);
                        r.r_dependent_R2 = gb > 1 || gc > 0;
                        r.leading += "B ~ " + to_string(detail::limit_coeff(ode.b, 1)) + "*y, C -> " +
                                     to_string(detail::limit_coeff(ode.c, 0));
                        if (r.r_dependent_R2) r.leading += " (growing)";
                    }
                    out.push_back(std::move(r));
                }
    return out;
}

}  // namespace xlag
