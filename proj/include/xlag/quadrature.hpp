#pragma once

#include "wave.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace xlag {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    double r_max = 0;  // 0: pick from the state data
    int panels = 16;

    void validate() const {
        if (!(rel_tol > 0) || !(abs_tol > 0)) throw std::invalid_argument("quadrature tolerances must be positive");
        if (panels < 1) throw std::invalid_argument("panel count must be positive");
        if (r_max < 0) throw std::invalid_argument("r_max must be nonnegative");
    }
};

struct TailUnattainable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

constexpr int kGaussOrder = 20;

struct GaussRule {
    std::array<double, kGaussOrder> x{}, w{};
};

// Legendre roots by Newton from the Chebyshev guess.
inline const GaussRule& gauss_legendre() {
    static const GaussRule rule = [] {
        GaussRule g;
        const int n = kGaussOrder;
        const double pi = std::acos(-1.0);
        for (int i = 0; i < n; ++i) {
            double x = std::cos(pi * (i + 0.75) / (n + 0.5));
            double dp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            g.x[i] = x;
            g.w[i] = 2 / ((1 - x * x) * dp * dp);
        }
        return g;
    }();
    return rule;
}

using VecFn = std::function<void(double, std::vector<double>&)>;

inline std::vector<double> gl_panel(const VecFn& f, double a, double b, size_t dim) {
    const auto& g = gauss_legendre();
    std::vector<double> acc(dim, 0.0), v(dim);
    const double c = (a + b) / 2, h = (b - a) / 2;
    for (int i = 0; i < kGaussOrder; ++i) {
        f(c + h * g.x[i], v);
        for (size_t k = 0; k < dim; ++k) acc[k] += g.w[i] * v[k];
    }
    for (auto& x : acc) x *= h;
    return acc;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

inline double max_abs(const std::vector<double>& a) {
    double m = 0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

inline void adapt(const VecFn& f, double a, double b, const std::vector<double>& whole, double tol, int depth,
                  std::vector<double>& out) {
    const double m = (a + b) / 2;
    auto l = gl_panel(f, a, m, whole.size());
    auto r = gl_panel(f, m, b, whole.size());
    std::vector<double> both(whole.size());
    for (size_t k = 0; k < both.size(); ++k) both[k] = l[k] + r[k];
    if (depth >= 40 || max_abs_diff(both, whole) <= tol) {
        for (size_t k = 0; k < both.size(); ++k) out[k] += both[k];
        return;
    }
    adapt(f, a, m, l, tol / 2, depth + 1, out);
    adapt(f, m, b, r, tol / 2, depth + 1, out);
}

}  // namespace detail

// ∫_a^b of a vector-valued integrand over `panels` equal panels, each refined adaptively.
inline std::vector<double> integrate(const detail::VecFn& f, size_t dim, double a, double b, int panels,
                                     double abs_tol, double rel_tol) {
    std::vector<double> out(dim, 0.0);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h, hi = (p + 1 == panels) ? b : a + (p + 1) * h;
        auto whole = detail::gl_panel(f, lo, hi, dim);
        double tol = std::max(abs_tol / panels, rel_tol * detail::max_abs(whole));
        detail::adapt(f, lo, hi, whole, tol, 0, out);
    }
    return out;
}

namespace detail {

// Γ(s, Y) ≤ Y^{s−1}e^{−Y}/(1 − (s−1)/Y) for Y > s − 1; plain Y^{s−1}e^{−Y} for s ≤ 1.
inline double upper_gamma_bound(double s, double Y) {
    if (s <= 1) return std::pow(Y, s - 1) * std::exp(-Y);
    if (Y <= s - 1) return INFINITY;
    return std::pow(Y, s - 1) * std::exp(-Y) / (1 - (s - 1) / Y);
}

// |p(y)| ≤ A y^d for y ≥ Y ≥ 1
inline double poly_upper(const YPoly& p, double Y, int& d) {
    d = std::max(p.degree(), 0);
    double a = 0;
    for (int k = 0; k <= p.degree(); ++k) a += std::abs(p.coeff(k).get_d()) * std::pow(Y, k - d);
    return a;
}

// |p(y)| ≥ B y^e for y ≥ Y; B ≤ 0 means no bound
inline double poly_lower(const YPoly& p, double Y, int& e) {
    e = std::max(p.degree(), 0);
    double b = std::abs(p.lead().get_d());
    for (int k = 0; k < p.degree(); ++k) b -= std::abs(p.coeff(k).get_d()) * std::pow(Y, k - e);
    return b;
}

}  // namespace detail

// Bound on ∫_R^∞ |ψ_j ψ_k| dr over all pairs; all states must decay (s = −1).
inline double gram_tail_bound(const std::vector<WaveFunction>& states, double omega, double R) {
    const double Y = std::max(1.0, omega * R * R / 2);
    double worst = 0;
    for (size_t j = 0; j < states.size(); ++j)
        for (size_t k = j; k < states.size(); ++k) {
            const auto& a = states[j];
            const auto& b = states[k];
            if (a.s != -1 || b.s != -1) return INFINITY;
            int dn = 0, de = 0;
            double A = detail::poly_upper(a.num * b.num, Y, dn);
            double B = detail::poly_lower(a.den * b.den, Y, de);
            if (B <= 0) return INFINITY;
            double c = std::abs(a.constant.get_d() * b.constant.get_d());
            double pw = a.a.get_d() + b.a.get_d();
            // r^{pw} = (2y/ω)^{pw/2}, dr = dy / sqrt(2ωy)
            double s = pw / 2 + dn - de + 0.5;
            double bound = c * A / B * std::pow(2 / omega, pw / 2) / std::sqrt(2 * omega) *
                           detail::upper_gamma_bound(s, Y);
            worst = std::max(worst, bound);
        }
    return worst;
}

struct GramResult {
    std::vector<std::vector<double>> G;
    double r_max = 0;
    double tail_bound = 0;
    double doubling_change = 0;  // max |ΔG_jk| / sqrt(G_jj G_kk) after doubling panels
};

inline double default_r_max(int n_max, double ell, int m, double omega) {
    return std::max(12.0, 3 * std::sqrt((2.0 * n_max + ell + 2.0 * m + 4) / omega));
}

// G[j][k] = ∫₀^R ψ_j ψ_k dr with the tail beyond R bounded analytically.
inline GramResult gram_matrix(const std::vector<WaveFunction>& states, const Scalar& omega, double r_max,
                              const QuadratureConfig& q) {
    q.validate();
    const size_t n = states.size();
    const double om = omega.get_d();
    GramResult res;
    res.r_max = r_max;
    res.tail_bound = gram_tail_bound(states, om, r_max);
    if (!(res.tail_bound < q.abs_tol / 10))
        throw TailUnattainable("Gaussian tail bound " + std::to_string(res.tail_bound) + " at r_max=" +
                               std::to_string(r_max) + " is not below abs_tol/10");
    const size_t dim = n * (n + 1) / 2;
    detail::VecFn f = [&](double r, std::vector<double>& out) {
        std::vector<double> v(n);
        for (size_t j = 0; j < n; ++j) v[j] = states[j].eval(r, om);
        size_t idx = 0;
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j; k < n; ++k) out[idx++] = v[j] * v[k];
    };
    auto unpack = [&](const std::vector<double>& flat) {
        std::vector<std::vector<double>> G(n, std::vector<double>(n));
        size_t idx = 0;
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j; k < n; ++k) G[j][k] = G[k][j] = flat[idx++];
        return G;
    };
    res.G = unpack(integrate(f, dim, 0.0, r_max, q.panels, q.abs_tol, q.rel_tol));
    auto G2 = unpack(integrate(f, dim, 0.0, r_max, 2 * q.panels, q.abs_tol, q.rel_tol));
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            double scale = std::sqrt(std::abs(res.G[j][j] * res.G[k][k]));
            if (scale > 0) res.doubling_change = std::max(res.doubling_change, std::abs(res.G[j][k] - G2[j][k]) / scale);
        }
    return res;
}

// Largest |G_jk| / sqrt(G_jj G_kk) over j ≠ k.
inline double max_offdiag_normalized(const std::vector<std::vector<double>>& G) {
    double m = 0;
    for (size_t j = 0; j < G.size(); ++j)
        for (size_t k = 0; k < G.size(); ++k)
            if (j != k) m = std::max(m, std::abs(G[j][k]) / std::sqrt(G[j][j] * G[k][k]));
    return m;
}

}  // namespace xlag
