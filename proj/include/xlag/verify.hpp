#pragma once

#include "published.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace xlag {

// ---------- orthogonality ----------

inline GramResult orthogonality_matrix(const std::vector<WaveFunction>& states, const Scalar& omega, int n_max,
                                       const Scalar& ell, int m, const QuadratureConfig& q) {
    double r = q.r_max > 0 ? q.r_max : default_r_max(n_max, ell.get_d(), m, omega.get_d());
    return gram_matrix(states, omega, r, q);
}

inline GramResult orthogonality_matrix(const OscParams& p, int n_max, const QuadratureConfig& q) {
    std::vector<WaveFunction> s;
    for (int n = 0; n <= n_max; ++n) s.push_back(classical_eigenfunction(n, p));
    return orthogonality_matrix(s, p.omega, n_max, p.ell, 0, q);
}

inline GramResult orthogonality_matrix(const Gen1Family& f, int n_max, const QuadratureConfig& q) {
    std::vector<WaveFunction> s;
    for (int n = 0; n <= n_max; ++n) s.push_back(gen1_eigenfunction(f, n));
    return orthogonality_matrix(s, f.p.omega, n_max, f.p.ell, f.m, q);
}

inline GramResult orthogonality_matrix(const Gen2Family& g, int n_max, const QuadratureConfig& q) {
    std::vector<WaveFunction> s;
    for (int n = 0; n <= n_max; ++n) s.push_back(gen2_eigenfunction(g, n));
    return orthogonality_matrix(s, g.p.omega, n_max + g.nprime, abs(g.p.ell), g.m, q);
}

// ---------- zero-free scan ----------

struct ScanRow {
    int i = 1;
    int nprime = 0;
    Scalar reparam = 0;
    Scalar R2 = 0;
    int roots_in_domain = 0;
    std::optional<bool> window_predicts_valid;  // nullopt: no claim at this point
    bool certificate_valid = false;
    bool agree = true;  // a claimed window must imply the certificate
};

inline std::vector<ScanRow> zero_free_scan(int i, const std::vector<int>& nprimes,
                                           const std::vector<Scalar>& reparams, const Scalar& omega = 1) {
    std::vector<ScanRow> rows;
    for (int np : nprimes)
        for (const auto& rp : reparams) {
            Gen2Family g = make_gen2(i, 1, np, rp, omega, true);
            ScanRow r;
            r.i = i;
            r.nprime = np;
            r.reparam = rp;
            r.R2 = g.R2;
            r.roots_in_domain = g.pn_roots;
            r.certificate_valid = g.valid;
            r.window_predicts_valid = published::window(i, np, g.p.ell, g.R2);
            r.agree = !(r.window_predicts_valid.value_or(false)) || r.certificate_valid;
            rows.push_back(std::move(r));
        }
    return rows;
}

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "i,nprime,reparam,R2,roots_in_domain,window_predicts_valid,certificate_valid,agree\n";
    for (const auto& r : rows) {
        os << r.i << ',' << r.nprime << ',' << to_string(r.reparam) << ',' << to_string(r.R2) << ','
           << r.roots_in_domain << ','
           << (r.window_predicts_valid ? (*r.window_predicts_valid ? "true" : "false") : "none") << ','
           << (r.certificate_valid ? "true" : "false") << ',' << (r.agree ? "true" : "false") << '\n';
    }
    return os.str();
}

inline std::vector<int> int_range(int lo, int hi) {
    std::vector<int> v;
    for (int k = lo; k <= hi; ++k) v.push_back(k);
    return v;
}

inline std::vector<Scalar> scalar_range(int lo, int hi) {
    std::vector<Scalar> v;
    for (int k = lo; k <= hi; ++k) v.emplace_back(k);
    return v;
}

// ---------- suite ----------

enum class Status { Pass, Fail, Flagged };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "flagged";
    }
}

struct CheckRecord {
    std::string group;
    std::string name;
    std::string key;
    Status status = Status::Pass;
    std::string witness;
};

struct SuiteReport {
    std::vector<CheckRecord> checks;

    int count(Status s) const {
        return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
    }
    bool ok() const { return count(Status::Fail) == 0; }

    std::string to_csv() const {
        auto q = [](const std::string& s) {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string o = "\"";
            for (char c : s) {
                if (c == '"') o += '"';
                o += c;
            }
            return o + "\"";
        };
        std::ostringstream os;
        os << "group,name,key,status,witness\n";
        for (const auto& c : checks)
            os << q(c.group) << ',' << q(c.name) << ',' << q(c.key) << ',' << status_name(c.status) << ','
               << q(c.witness) << '\n';
        return os.str();
    }
    std::string to_text() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << status_name(c.status) << "  " << c.group << "  " << c.name;
            if (!c.key.empty()) os << "  [" << c.key << "]";
            if (!c.witness.empty()) os << "  " << c.witness;
            os << '\n';
        }
        os << "total " << checks.size() << ", pass " << count(Status::Pass) << ", fail " << count(Status::Fail)
           << ", flagged " << count(Status::Flagged) << '\n';
        return os.str();
    }
};

struct SuiteConfig {
    std::set<std::string> only;       // empty: every group
    std::set<int> families;           // empty: i = 1..3
    QuadratureConfig quad;
    bool inject_wrong_eigenvalue = false;

    bool wants(const std::string& g) const { return only.empty() || only.count(g) > 0; }
    bool family(int i) const { return families.empty() || families.count(i) > 0; }
};

inline const std::vector<std::string>& suite_groups() {
    static const std::vector<std::string> g = {"ratcore",        "laguerre",     "catalog",        "gen1-residual",
                                               "conventional-rows",         "residues",     "gen2-riccati",  "gen2-residual",
                                               "operator-formula", "orthogonality", "scans"};
    return g;
}

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}
}  // namespace detail

// key=value lines; '#' starts a comment.
inline SuiteConfig parse_suite_config_text(const std::string& text) {
    SuiteConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        std::string k = detail::trim(line.substr(0, eq)), v = detail::trim(line.substr(eq + 1));
        try {
            if (k == "only") {
                for (auto& g : detail::split(v, ',')) {
                    if (std::find(suite_groups().begin(), suite_groups().end(), g) == suite_groups().end())
                        throw ConfigError("unknown group '" + g + "'");
                    c.only.insert(g);
                }
            } else if (k == "family") {
                for (auto& f : detail::split(v, ',')) {
                    int i = std::stoi(f);
                    if (i < 1 || i > 3) throw ConfigError("family must be 1..3");
                    c.families.insert(i);
                }
            } else if (k == "rel_tol") c.quad.rel_tol = std::stod(v);
            else if (k == "abs_tol") c.quad.abs_tol = std::stod(v);
            else if (k == "panels") c.quad.panels = std::stoi(v);
            else if (k == "r_max") c.quad.r_max = std::stod(v);
            else if (k == "inject_wrong_eigenvalue") {
                if (v != "true" && v != "false") throw ConfigError("expected true or false");
                c.inject_wrong_eigenvalue = v == "true";
            } else throw ConfigError("unknown key '" + k + "'");
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(lineno) + ": bad value for " + k);
        }
    }
    try {
        c.quad.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return c;
}

inline SuiteConfig parse_suite_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_suite_config_text(ss.str());
}

namespace detail {

struct Recorder {
    SuiteReport& rep;
    std::string group;
    void operator()(std::string name, std::string key, Status s, std::string witness = "") {
        rep.checks.push_back({group, std::move(name), std::move(key), s, std::move(witness)});
    }
    void expect(std::string name, std::string key, bool ok, std::string witness = "") {
        (*this)(std::move(name), std::move(key), ok ? Status::Pass : Status::Fail, std::move(witness));
    }
    void display(std::string name, std::string key, bool match, std::string witness = "") {
        (*this)(std::move(name), std::move(key), match ? Status::Pass : Status::Flagged, std::move(witness));
    }
};

inline std::string fmt(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3e", x);
    return b;
}

inline YPoly random_poly(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Scalar> c;
    for (int k = 0; k <= deg; ++k) c.push_back(make_scalar(num(rng), den(rng)));
    if (c.back() == 0) c.back() = 1;
    return YPoly(c);
}

inline void group_ratcore(Recorder& rec) {
    std::mt19937 rng(20240611u);
    int bad_prod = 0, bad_reduce = 0, bad_deg = 0, bad_sturm = 0;
    for (int t = 0; t < 40; ++t) {
        YPoly p = random_poly(rng, 1 + t % 4), q = random_poly(rng, 1 + (t / 4) % 4);
        if ((p * q).derivative() != p.derivative() * q + p * q.derivative()) ++bad_prod;
        if ((p * q).degree() != p.degree() + q.degree()) ++bad_deg;
        YRatFun f = p / q;
        if (ratfun_reduce(f.num(), f.den()) != f || (p * q) / (q * q) != f) ++bad_reduce;
        if (gcd(p, q).degree() == 0 && !p.is_constant() && !q.is_constant()) {
            Bound z = Bound::zero_plus(), inf = Bound::infinity();
            if (sturm_count(p * q, z, inf) != sturm_count(p, z, inf) + sturm_count(q, z, inf)) ++bad_sturm;
        }
    }
    rec.expect("product rule", "random/40", bad_prod == 0, "violations=" + std::to_string(bad_prod));
    rec.expect("degree additivity", "random/40", bad_deg == 0, "violations=" + std::to_string(bad_deg));
    rec.expect("reduce idempotent", "random/40", bad_reduce == 0, "violations=" + std::to_string(bad_reduce));
    rec.expect("sturm multiplicative", "random/40", bad_sturm == 0, "violations=" + std::to_string(bad_sturm));
    YPoly s{Scalar(2), Scalar(-3), Scalar(1)};
    rec.expect("sturm count", "y^2-3y+2", sturm_count(s, Bound::zero_plus(), Bound::infinity()) == 2);
}

inline void group_laguerre(Recorder& rec) {
    int bad_ode = 0, bad_der = 0;
    const std::vector<Scalar> alphas = {0, make_scalar(1, 2), make_scalar(-5, 2), make_scalar(7, 3), -4};
    for (const auto& a : alphas)
        for (int n = 0; n <= 10; ++n) {
            YPoly L = laguerre_poly(n, a);
            YPoly y = YPoly::y();
            if (!(y * L.derivative().derivative() + (YPoly(a + 1) - y) * L.derivative() + L * n).is_zero()) ++bad_ode;
            if (n >= 1 && L.derivative() != -laguerre_poly(n - 1, a + 1)) ++bad_der;
        }
    rec.expect("laguerre ODE", "n<=10", bad_ode == 0, "violations=" + std::to_string(bad_ode));
    rec.expect("derivative lowers degree", "n<=10", bad_der == 0, "violations=" + std::to_string(bad_der));
    for (int l = 0; l <= 3; ++l) {
        OscParams p(2, l);
        auto v = partner_potentials(catalog_superpotential(1, p), p).first;
        std::string bad;
        for (int n = 0; n <= 8; ++n)
            if (!schrodinger_residual(v, classical_eigenfunction(n, p), classical_energy(n, p), p).is_zero())
                bad += " n=" + std::to_string(n);
        rec.expect("classical residual", "ell=" + std::to_string(l) + "/omega=2", bad.empty(), bad);
    }
}

inline void group_catalog(Recorder& rec) {
    for (int i = 1; i <= 4; ++i) {
        int mism = 0;
        std::set<std::string> shifts;
        for (int l = 0; l <= 5; ++l)
            for (const auto& w : {Scalar(1), Scalar(2), make_scalar(1, 2)}) {
                OscParams p(w, l);
                auto pr = partner_potentials(catalog_superpotential(i, p), p);
                if (pr.first.value != published::catalog_vminus(i, p) || pr.second.value != published::catalog_vplus(i, p))
                    ++mism;
                shifts.insert(to_string(shape_invariance_shift(i, p) / w));
            }
        rec.expect("partners match catalog", "row=" + std::to_string(i), mism == 0, "mismatches=" + std::to_string(mism));
        std::string ws;
        for (auto& s : shifts) ws += s + "*omega ";
        rec.expect("shape invariance shift constant", "row=" + std::to_string(i), shifts.size() == 1, ws);
    }
}

inline void group_gen1(Recorder& rec, const SuiteConfig& cfg) {
    for (int i = 1; i <= 3; ++i) {
        if (!cfg.family(i)) continue;
        for (int m = 0; m <= 3; ++m)
            for (int l = 0; l <= 5; ++l) {
                Gen1Family f = make_gen1(i, m, OscParams(1, l), true);
                if (!f.valid) {
                    rec("seed certificate", f.key(), Status::Pass,
                        "invalid, roots=" + std::to_string(f.seed_roots) + " (not constructed)");
                    continue;
                }
                PotentialForm v = gen1_potential(f);
                std::string bad;
                for (int n = 0; n <= 5; ++n) {
                    YRatFun r = schrodinger_residual(v, gen1_eigenfunction(f, n), gen1_eigenvalue(f, n), f.p);
                    if (!r.is_zero()) bad += " n=" + std::to_string(n) + ":" + r.str();
                }
                rec.expect("residual n<=5", f.key(), bad.empty(), bad);
                YRatFun dplus = gen1_potential_plus(f).value -
                                partner_potentials(catalog_superpotential(i, f.p), f.p).second.value;
                rec.expect("isospectral shift R1", f.key(), dplus == YRatFun(f.R1), "diff=" + dplus.str());
            }
    }
    int bad = 0;
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 5; ++n)
            for (int l = 0; l <= 5; ++l) {
                Scalar a = gen1_alpha(2, l);
                if (!type_i_eop_operator(m, n, a).apply(make_xm_eop(EopKind::I, m, n, a).poly).is_zero()) ++bad;
            }
    rec.expect("type I X_m equation", "m<=3/n<=5/ell<=5", bad == 0, "violations=" + std::to_string(bad));
    {
        int nprime = 2;
        Scalar g = 1;
        YRatFun r = published::l1_operator(nprime, g).apply(make_xm_eop(EopKind::I, 1, nprime, g - make_scalar(1, 2)).poly);
        rec.display("displayed X_1 type I equation", "g=1/nprime=2", r.is_zero(), "residual=" + r.str());
    }
    if (cfg.inject_wrong_eigenvalue) {
        Gen1Family f = make_gen1(2, 1, OscParams(2, 1));
        YRatFun r = schrodinger_residual(gen1_potential(f), gen1_eigenfunction(f, 0), gen1_eigenvalue(f, 0) + 1, f.p);
        rec.expect("injected wrong eigenvalue", f.key(), r.is_zero(), "residual=" + r.str());
    }
}

inline void group_conventional_rows(Recorder& rec, const SuiteConfig& cfg) {
    for (int i = 1; i <= 3; ++i) {
        if (!cfg.family(i)) continue;
        for (int m = 1; m <= 3; ++m) {
            int checked = 0, row_mismatch = 0;
            std::string fail, first_mismatch;
            for (int l = 0; l <= 5; ++l) {
                Gen1Family f = make_gen1(i, m, OscParams(1, l), true);
                if (!f.valid) continue;
                ++checked;
                try {
                    SuperpotentialForm w = conventional_superpotential(f);
                    if (PoleForm::of(w) != published::conventional_row(i, m, f.p)) {
                        if (row_mismatch++ == 0) first_mismatch = "ell=" + std::to_string(l);
                    }
                } catch (const std::logic_error& e) {
                    fail += e.what();
                }
            }
            std::string key = "row=" + std::to_string(i) + "/m=" + std::to_string(m);
            rec.expect("conventional identity", key, fail.empty(), fail.empty() ? "families=" + std::to_string(checked) : fail);
            rec.display("displayed row", key, row_mismatch == 0,
                        row_mismatch ? "differs at " + first_mismatch + " (" + std::to_string(row_mismatch) + " families)" : "");
        }
    }
}

inline std::string pair_str(const std::array<Scalar, 2>& v) { return "{" + to_string(v[0]) + "," + to_string(v[1]) + "}"; }

inline void group_residues(Recorder& rec, const SuiteConfig& cfg) {
    for (int i = 1; i <= 3; ++i) {
        if (!cfg.family(i)) continue;
        for (int l = 0; l <= 3; ++l) {
            OscParams p(1, l);
            Gen1Family f = make_gen1(i, 1, p, true);
            ResidueSet rs = enumerate_residues(detail::deformed_superpotential_unchecked(f));
            auto pr = published::residues(i, p);
            const std::string key = "i=" + std::to_string(i) + "/ell=" + std::to_string(l);
            bool vieta = true;
            for (const ResiduePair* r : {&rs.b1, &rs.d1, &rs.d1p, &rs.c1})
                vieta = vieta && r->values[0] + r->values[1] == -r->linear && r->values[0] * r->values[1] == 0;
            rec.expect("vieta", key, vieta);
            auto cmp = [&](const char* nm, const ResiduePair& got, const std::array<Scalar, 2>& want) {
                rec.display(std::string("displayed ") + nm, key, got.values == want,
                            "derived=" + pair_str(got.values) + " displayed=" + pair_str(want));
            };
            cmp("b1", rs.b1, pr.b1);
            cmp("d1", rs.d1, pr.d1);
            cmp("d1p", rs.d1p, pr.d1p);
            cmp("c1/omega", rs.c1, pr.c1);
            auto choices = enumerate_other_choices(f);
            int pub = 0;
            for (auto& c : choices) pub += c.cls == ChoiceClass::Published;
            rec.expect("selections", key, choices.size() == 16 && pub == 1,
                       std::to_string(choices.size()) + " selections, " + std::to_string(pub) + " published");
        }
    }
}

struct Gen2Grid {
    std::vector<int> nprimes = int_range(1, 5);
    std::vector<Scalar> reparams = scalar_range(-7, 5);
};

inline void group_gen2_riccati(Recorder& rec, const SuiteConfig& cfg) {
    Gen2Grid grid;
    for (int i = 1; i <= 3; ++i) {
        if (!cfg.family(i)) continue;
        int total = 0, zero = 0, printed_zero = 0, indep = 0;
        std::string bad, printed_witness;
        for (int np : grid.nprimes)
            for (const auto& rp : grid.reparams) {
                Gen2Family g = make_gen2(i, 1, np, rp, 1, true);
                ++total;
                indep += g.independent_solve;
                auto wt = gen2_parent_superpotential(g);
                auto phi = gen2_phi(g);
                YRatFun r = riccati_residual(wt, phi, g.R2, g.p);
                if (r.is_zero()) ++zero;
                else if (bad.empty()) bad = g.key() + ": " + r.str();
                Scalar pr = published::r2(i, np, rp, 1);
                YRatFun rp2 = riccati_residual(wt, phi, pr, g.p);
                if (rp2.is_zero()) ++printed_zero;
                else if (printed_witness.empty())
                    printed_witness = g.key() + " displayed R2=" + to_string(pr) + " derived R2=" + to_string(g.R2) +
                                      " residual=" + rp2.str();
            }
        const std::string key = "i=" + std::to_string(i);
        rec.expect("riccati residual", key, zero == total,
                   bad.empty() ? std::to_string(total) + " families, nullspace agreed on " + std::to_string(indep) : bad);
        rec.display("displayed R2", key, printed_zero == total,
                    printed_zero == total ? "" : std::to_string(total - printed_zero) + "/" + std::to_string(total) +
                                                     " differ; e.g. " + printed_witness);
        Gen2Family g = make_gen2(i, 1, 1, grid.reparams.front(), 1, true);
        YRatFun shifted = riccati_residual(gen2_parent_superpotential(g), gen2_phi(g), g.R2 + 1, g.p);
        rec.expect("residual detects R2 perturbation", g.key(), shifted == YRatFun(-1), shifted.str());
    }
}

inline void group_gen2_residual(Recorder& rec, const SuiteConfig& cfg, bool operator_only) {
    Gen2Grid grid;
    for (int i = 1; i <= 3; ++i) {
        if (!cfg.family(i)) continue;
        for (int np : grid.nprimes)
            for (const auto& rp : grid.reparams) {
                Gen2Family g = make_gen2(i, 1, np, rp, 1, true);
                if (!g.valid) continue;
                if (operator_only) {
                    SuperpotentialForm wb = gen2_superpotential(g);
                    std::string bad, consts;
                    bool printed_q = true;
                    for (int n = 0; n <= 3; ++n) {
                        WaveFunction img = apply_intertwiner(wb, false, detail::gen1_eigenfunction_unchecked(g.parent, n), g.p);
                        auto k = proportionality(img, gen2_eigenfunction(g, n));
                        if (!k) bad += " n=" + std::to_string(n);
                        else consts += " " + to_string(*k);
                        printed_q = printed_q && published::q(g, n) == two_index_eop(g, n).poly;
                    }
                    rec.expect("intertwiner vs closed form", g.key(), bad.empty(), bad.empty() ? "k=" + consts : bad);
                    rec.display("displayed Q", g.key(), printed_q);
                    continue;
                }
                PotentialForm v = gen2_potential(g);
                std::string bad, energy;
                for (int n = 0; n <= 4; ++n) {
                    YRatFun r = schrodinger_residual(v, gen2_eigenfunction(g, n), gen2_eigenvalue(g, n), g.p);
                    if (!r.is_zero()) bad += " n=" + std::to_string(n);
                    if (gen2_eigenvalue(g, n) != gen2_energy(g, n + gen2_label_shift(g)) + gen2_reference_offset(g))
                        energy += " n=" + std::to_string(n);
                }
                rec.expect("residual n<=4", g.key(), bad.empty(), bad);
                rec.display("displayed energies", g.key(), energy.empty(), energy);
                rec.expect("partner identity", g.key(),
                           partner_potentials(gen2_superpotential(g), g.p).second.value == v.value);
                YRatFun dv = published::vbar(g) - v.value;
                rec.display("displayed potential", g.key(), dv.is_zero(), dv.is_zero() ? "" : "displayed-derived=" + dv.str());
                rec.display("displayed superpotential", g.key(),
                            published::wbar(g) == PoleForm::of(gen2_superpotential(g)));
                if (i == 2) {
                    bool prop = proportionality(WaveFunction::make(1, 0, -1, published::pn(i, np, rp), YPoly(1)),
                                                WaveFunction::make(1, 0, -1, g.pn.poly, YPoly(1)))
                                    .has_value();
                    rec.display("displayed P_N", g.key(), prop);
                }
            }
    }
}

inline void group_orthogonality(Recorder& rec, const SuiteConfig& cfg) {
    auto report = [&](const std::string& key, const std::function<GramResult()>& run) {
        try {
            GramResult g = run();
            double off = 0, diag_min = INFINITY;
            for (size_t j = 0; j < g.G.size(); ++j)
                for (size_t k = 0; k < g.G.size(); ++k) {
                    if (j == k) diag_min = std::min(diag_min, g.G[j][j]);
                    else off = std::max(off, std::abs(g.G[j][k]));
                }
            rec.expect("offdiagonal", key, off < 1e-8, "max=" + fmt(off));
            rec.expect("diagonal positive", key, diag_min > 0, "min=" + fmt(diag_min));
            rec.expect("panel doubling", key, g.doubling_change < cfg.quad.rel_tol, "change=" + fmt(g.doubling_change));
        } catch (const std::exception& e) {
            rec.expect("gram", key, false, e.what());
        }
    };
    OscParams p(2, 1);
    report("classical/ell=1/omega=2", [&] { return orthogonality_matrix(p, 4, cfg.quad); });
    if (cfg.family(2))
        report(make_gen1(2, 1, p).key(), [&] { return orthogonality_matrix(make_gen1(2, 1, p), 4, cfg.quad); });
}

inline void group_scans(Recorder& rec, const SuiteConfig& cfg) {
    Gen2Grid grid;
    for (int i = 1; i <= 3; ++i) {
        if (!cfg.family(i)) continue;
        auto rows = zero_free_scan(i, grid.nprimes, grid.reparams);
        int claimed = 0, dis = 0;
        std::string wit;
        for (auto& r : rows) {
            claimed += r.window_predicts_valid.has_value();
            if (!r.agree) {
                ++dis;
                if (wit.size() < 200)
                    wit += " (nprime=" + std::to_string(r.nprime) + ",reparam=" + to_string(r.reparam) +
                           ",R2=" + to_string(r.R2) + ",roots=" + std::to_string(r.roots_in_domain) + ")";
            }
        }
        rec.display("window vs certificate", "i=" + std::to_string(i), dis == 0,
                    std::to_string(rows.size()) + " points, " + std::to_string(claimed) + " claimed, " +
                        std::to_string(dis) + " disagree" + wit);
    }
}

}  // namespace detail

inline SuiteReport run_suite(const SuiteConfig& cfg) {
    SuiteReport rep;
    for (const auto& g : suite_groups()) {
        if (!cfg.wants(g)) continue;
        detail::Recorder rec{rep, g};
        try {
            if (g == "ratcore") detail::group_ratcore(rec);
            else if (g == "laguerre") detail::group_laguerre(rec);
            else if (g == "catalog") detail::group_catalog(rec);
            else if (g == "gen1-residual") detail::group_gen1(rec, cfg);
            else if (g == "conventional-rows") detail::group_conventional_rows(rec, cfg);
            else if (g == "residues") detail::group_residues(rec, cfg);
            else if (g == "gen2-riccati") detail::group_gen2_riccati(rec, cfg);
            else if (g == "gen2-residual") detail::group_gen2_residual(rec, cfg, false);
            else if (g == "operator-formula") detail::group_gen2_residual(rec, cfg, true);
            else if (g == "orthogonality") detail::group_orthogonality(rec, cfg);
            else if (g == "scans") detail::group_scans(rec, cfg);
        } catch (const std::exception& e) {
            rec.expect("group aborted", "", false, e.what());
        }
    }
    return rep;
}

}  // namespace xlag
