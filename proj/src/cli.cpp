#include "cli.hpp"

#include "xlag/xlag.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace xlag::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Selectors {
    int iter = 1;
    int family = 1;
    int m = -1;  // unset
    std::string n = "0";
    int nprime = 1;
    std::string ell, d, a, b;
    std::string omega = "1";
    bool allow_invalid = false;
    std::string out;
    std::string format;
};

Scalar rational(const std::string& text, const char* what) {
    try {
        return parse_scalar(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

// "k" or "lo..hi"
std::pair<Scalar, Scalar> range(const std::string& text, const char* what) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        Scalar v = rational(text, what);
        return {v, v};
    }
    Scalar lo = rational(text.substr(0, dots), what), hi = rational(text.substr(dots + 2), what);
    if (lo > hi) throw UsageError(std::string(what) + ": empty range " + text);
    return {lo, hi};
}

std::vector<Scalar> scalar_steps(const std::string& text, const char* what) {
    auto [lo, hi] = range(text, what);
    std::vector<Scalar> v;
    for (Scalar x = lo; x <= hi; x += 1) v.push_back(x);
    return v;
}

std::vector<int> int_steps(const std::string& text, const char* what, int min_value) {
    std::vector<int> v;
    for (const auto& x : scalar_steps(text, what)) {
        if (!is_integer(x)) throw UsageError(std::string(what) + " must be integers");
        if (x < min_value) throw UsageError(std::string(what) + " must be >= " + std::to_string(min_value));
        v.push_back(static_cast<int>(to_long(x)));
    }
    return v;
}

Scalar omega_of(const Selectors& s) {
    Scalar w = rational(s.omega, "--omega");
    if (w <= 0) throw UsageError("--omega must be positive");
    return w;
}

const char* reparam_flag(int i) { return i == 1 ? "d" : i == 2 ? "a" : "b"; }

void check_family(int i) {
    if (i < 1 || i > 3) throw UsageError("--family must be 1..3");
}

// ℓ for iterations 0 and 1
Scalar plain_ell(const Selectors& s) {
    if (!s.d.empty() || !s.a.empty() || !s.b.empty())
        throw UsageError("--d/--a/--b are second-iteration parameters; use --ell");
    return s.ell.empty() ? Scalar(0) : rational(s.ell, "--ell");
}

// reparam text for iteration 2 (range allowed)
std::string reparam_text(const Selectors& s) {
    const std::string* given[3] = {&s.d, &s.a, &s.b};
    int count = !s.ell.empty();
    std::string text;
    for (int k = 0; k < 3; ++k) {
        if (given[k]->empty()) continue;
        ++count;
        if (k + 1 != s.family)
            throw UsageError(std::string("--") + reparam_flag(k + 1) + " belongs to family " + std::to_string(k + 1) +
                             "; family " + std::to_string(s.family) + " takes --" + reparam_flag(s.family));
        text = *given[k];
    }
    if (count > 1) throw UsageError("give exactly one of --ell or --" + std::string(reparam_flag(s.family)));
    if (count == 0) throw UsageError("second iteration needs --" + std::string(reparam_flag(s.family)) + " or --ell");
    if (!s.ell.empty()) {
        // ℓ = −reparam − 1
        auto [lo, hi] = range(s.ell, "--ell");
        Scalar rlo = -hi - 1, rhi = -lo - 1;
        return lo == hi ? to_string(rlo) : to_string(rlo) + ".." + to_string(rhi);
    }
    return text;
}

Gen2Family build_gen2(const Selectors& s, const Scalar& reparam) {
    check_family(s.family);
    if (s.m != -1 && s.m != 1)
        throw UsageError("second iteration requires m=1 (R2 is constant only for m=1), got --m " + std::to_string(s.m));
    if (s.nprime < 0) throw UsageError("--nprime must be nonnegative");
    return make_gen2(s.family, 1, s.nprime, reparam, omega_of(s), s.allow_invalid);
}

Gen1Family build_gen1(const Selectors& s) {
    check_family(s.family);
    int m = s.m == -1 ? 1 : s.m;
    if (m < 0) throw UsageError("--m must be nonnegative");
    return make_gen1(s.family, m, OscParams(omega_of(s), plain_ell(s)), s.allow_invalid);
}

std::ostream& sink(const std::string& path, std::ofstream& file, std::ostream& out) {
    if (path.empty()) return out;
    file.open(path);
    if (!file) throw UsageError("cannot write " + path);
    return file;
}

json state_json(int n, const YPoly& poly, const WaveFunction& psi, const Scalar& formula, const Scalar& exact) {
    return json{{"n", n}, {"poly", poly}, {"eigenfunction", psi}, {"energy_formula", scalar_to_json(formula)},
                {"eigenvalue", scalar_to_json(exact)}};
}

json gen_json(const Selectors& s) {
    json j;
    const std::vector<int> ns = int_steps(s.n, "--n", 0);
    if (s.iter == 0) {
        OscParams p(omega_of(s), plain_ell(s));
        SuperpotentialForm w = catalog_superpotential(1, p);
        j["family"] = "gen0/ell=" + to_string(p.ell) + "/omega=" + to_string(p.omega);
        j["iter"] = 0;
        j["valid"] = true;
        j["params"] = {{"omega", scalar_to_json(p.omega)}, {"ell", scalar_to_json(p.ell)}};
        j["superpotential"] = w;
        j["potential"] = partner_potentials(w, p).first.value;
        for (int n : ns) {
            auto psi = classical_eigenfunction(n, p);
            j["states"].push_back(state_json(n, psi.num, psi, classical_energy(n, p), classical_energy(n, p)));
        }
        return j;
    }
    if (s.iter == 1) {
        Gen1Family f = build_gen1(s);
        j["family"] = f.key();
        j["iter"] = 1;
        j["valid"] = f.valid;
        j["params"] = {{"omega", scalar_to_json(f.p.omega)}, {"ell", scalar_to_json(f.p.ell)}, {"i", f.i}, {"m", f.m},
                       {"alpha", scalar_to_json(f.alpha)}};
        j["R1"] = scalar_to_json(f.R1);
        j["seed"] = f.seed_poly;
        j["seed_roots_in_domain"] = f.seed_roots;
        j["eop_kind"] = kind_name(gen1_eop_kind(f.i));
        j["superpotential"] = detail::deformed_superpotential_unchecked(f);
        j["potential"] = detail::gen1_potential_unchecked(f).value;
        j["energy_offset"] = scalar_to_json(gen1_reference_offset(f));
        j["label_shift"] = gen1_label_shift(f);
        for (int n : ns) {
            auto psi = detail::gen1_eigenfunction_unchecked(f, n);
            j["states"].push_back(state_json(n, make_xm_eop(gen1_eop_kind(f.i), f.m, n, f.alpha).poly, psi,
                                             gen1_energy(f, n + gen1_label_shift(f)), gen1_eigenvalue(f, n)));
        }
        return j;
    }
    if (s.iter == 2) {
        std::string rt = reparam_text(s);
        if (rt.find("..") != std::string::npos) throw UsageError("gen takes a single parameter value, not a range");
        Gen2Family g = build_gen2(s, rational(rt, "reparam"));
        j["family"] = g.key();
        j["iter"] = 2;
        j["valid"] = g.valid;
        j["params"] = {{"omega", scalar_to_json(g.p.omega)}, {"ell", scalar_to_json(g.p.ell)}, {"i", g.i}, {"m", 1},
                       {"nprime", g.nprime}, {reparam_flag(g.i), scalar_to_json(g.reparam)}};
        j["R1"] = scalar_to_json(g.parent.R1);
        j["R2"] = scalar_to_json(g.R2);
        j["R2_displayed"] = scalar_to_json(published::r2(g.i, g.nprime, g.reparam, g.p.omega));
        j["seed"] = g.parent.seed_poly;
        j["pn"] = g.pn.poly;
        j["pn_roots_in_domain"] = g.pn_roots;
        j["residue_choice"] = {{"b1", scalar_to_json(g.choice.b1)}, {"d1", scalar_to_json(g.choice.d1)},
                               {"d1p", scalar_to_json(g.choice.d1p)}, {"c1", scalar_to_json(g.choice.c1)},
                               {"C", scalar_to_json(g.choice.C)}};
        j["superpotential"] = gen2_superpotential(g);
        j["potential"] = gen2_potential(g).value;
        for (int n : ns) {
            auto psi = WaveFunction::make(1, g.p.ell, -1, two_index_eop(g, n).poly, g.parent.seed_poly * g.pn.poly);
            j["states"].push_back(state_json(n, two_index_eop(g, n).poly, psi,
                                             gen2_energy(g, n + gen2_label_shift(g)), gen2_eigenvalue(g, n)));
        }
        return j;
    }
    throw UsageError("--iter must be 0, 1 or 2");
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void add_selectors(CLI::App* c, Selectors& s, bool with_n) {
    c->add_option("--iter", s.iter, "iteration 0, 1 or 2")->capture_default_str();
    c->add_option("--family", s.family, "family index i = 1..3")->capture_default_str();
    c->add_option("--m", s.m, "codimension (first iteration; must be 1 for the second)");
    if (with_n) c->add_option("--n", s.n, "state index or range lo..hi")->capture_default_str();
    c->add_option("--nprime", s.nprime, "second index n'")->capture_default_str();
    c->add_option("--ell", s.ell, "angular parameter, rational p/q");
    c->add_option("--d", s.d, "family-1 second-iteration parameter (ell = -d-1)");
    c->add_option("--a", s.a, "family-2 second-iteration parameter (ell = -a-1)");
    c->add_option("--b", s.b, "family-3 second-iteration parameter (ell = -b-1)");
    c->add_option("--omega", s.omega, "frequency, rational p/q")->capture_default_str();
    c->add_flag("--allow-invalid", s.allow_invalid, "construct families that fail the zero-free certificate");
}

int cmd_gen(const Selectors& s, std::ostream& out) {
    std::string fmt_ = s.format.empty() ? "json" : s.format;
    if (fmt_ != "json" && fmt_ != "text") throw UsageError("gen supports --format json or text");
    json j = gen_json(s);
    std::ofstream file;
    std::ostream& o = sink(s.out, file, out);
    if (fmt_ == "json") {
        o << j.dump(2) << '\n';
    } else {
        o << j["family"].get<std::string>() << (j["valid"].get<bool>() ? "" : "  (INVALID)") << '\n';
        o << "potential: " << j["potential"].get<YRatFun>().str() << '\n';
        for (const auto& st : j["states"])
            o << "n=" << st["n"] << "  E=" << to_string(scalar_from_json(st["eigenvalue"]))
              << "  poly=" << st["poly"].get<YPoly>().str() << '\n';
    }
    return kOk;
}

int cmd_verify(const std::string& config, const std::string& only, const std::string& family, const Selectors& s,
               std::ostream& out) {
    SuiteConfig c;
    std::string text;
    if (!config.empty()) {
        std::ifstream f(config);
        if (!f) throw UsageError("cannot read config " + config);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    if (!only.empty()) text += "\nonly=" + only;
    if (!family.empty()) text += "\nfamily=" + family;
    try {
        c = parse_suite_config_text(text);
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
    std::string fmt_ = s.format.empty() ? "text" : s.format;
    if (fmt_ != "text" && fmt_ != "csv") throw UsageError("verify supports --format text or csv");
    SuiteReport r = run_suite(c);
    std::ofstream file;
    std::ostream& o = sink(s.out, file, out);
    o << (fmt_ == "csv" ? r.to_csv() : r.to_text());
    return r.ok() ? kOk : kCheckFailure;
}

int cmd_scan(const Selectors& s, const std::string& nprimes, std::ostream& out) {
    check_family(s.family);
    if (!s.format.empty() && s.format != "csv") throw UsageError("scan writes csv");
    auto nps = int_steps(nprimes, "--nprime", 0);
    auto rps = scalar_steps(reparam_text(s), "reparam");
    auto rows = zero_free_scan(s.family, nps, rps, omega_of(s));
    std::ofstream file;
    sink(s.out, file, out) << scan_csv(rows);
    return kOk;
}

int cmd_plot(const Selectors& s, double rmin, double rmax, double step, std::ostream& out) {
    if (!(step > 0)) throw UsageError("--step must be positive");
    if (rmin == 0 || std::isnan(rmin)) rmin = step;
    if (rmin <= 0) throw UsageError("plot grid must stay in r > 0 (centrifugal singularity at r = 0)");
    if (!(rmax >= rmin)) throw UsageError("--rmax must be >= --rmin");
    const std::vector<int> ns = int_steps(s.n, "--n", 0);
    PotentialForm v;
    WaveFunction weight;
    std::vector<WaveFunction> states;
    Scalar omega = omega_of(s);
    if (s.iter == 0) {
        OscParams p(omega, plain_ell(s));
        v = partner_potentials(catalog_superpotential(1, p), p).first;
        weight = ground_state(catalog_superpotential(1, p));
        for (int n : ns) states.push_back(classical_eigenfunction(n, p));
    } else if (s.iter == 1) {
        Gen1Family f = build_gen1(s);
        v = detail::gen1_potential_unchecked(f);
        weight = gen1_weight(f);
        for (int n : ns) states.push_back(detail::gen1_eigenfunction_unchecked(f, n));
    } else if (s.iter == 2) {
        std::string rt = reparam_text(s);
        if (rt.find("..") != std::string::npos) throw UsageError("plot-data takes a single parameter value");
        Gen2Family g = build_gen2(s, rational(rt, "reparam"));
        v = gen2_potential(g);
        weight = gen2_weight(g).effective;
        for (int n : ns)
            states.push_back(WaveFunction::make(1, g.p.ell, -1, two_index_eop(g, n).poly, g.parent.seed_poly * g.pn.poly));
    } else {
        throw UsageError("--iter must be 0, 1 or 2");
    }
    const double om = omega.get_d();
    const long rows = static_cast<long>(std::floor((rmax - rmin) / step + 1e-9)) + 1;
    std::ofstream file;
    std::ostream& o = sink(s.out, file, out);
    o << "r,V,w";
    for (int n : ns) o << ",psi_" << n;
    o << '\n';
    for (long k = 0; k < rows; ++k) {
        double r = rmin + k * step;
        o << fmt(r) << ',' << fmt(v.eval(r, om)) << ',' << fmt(weight.eval(r, om));
        for (const auto& psi : states) o << ',' << fmt(psi.eval(r, om));
        o << '\n';
    }
    return kOk;
}

int cmd_list(const Selectors& s, const std::string& families, const std::string& ms, const std::string& ells,
             std::ostream& out) {
    if (!s.format.empty() && s.format != "csv") throw UsageError("list writes csv");
    Scalar omega = omega_of(s);
    std::ofstream file;
    std::ostream& o = sink(s.out, file, out);
    o << "i,m,ell,omega,alpha_i,R1,valid,seed_roots_in_domain\n";
    for (int i : int_steps(families, "--families", 1)) {
        check_family(i);
        for (int m : int_steps(ms, "--ms", 0))
            for (const auto& l : scalar_steps(ells, "--ells")) {
                Gen1Family f = make_gen1(i, m, OscParams(omega, l), true);
                o << i << ',' << m << ',' << to_string(l) << ',' << to_string(omega) << ',' << to_string(f.alpha) << ','
                  << to_string(f.R1) << ',' << (f.valid ? "true" : "false") << ',' << f.seed_roots << '\n';
            }
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational extensions of the radial oscillator and exceptional Laguerre polynomials", "xlag"};
    app.require_subcommand(1);
    Selectors s;

    auto* gen = app.add_subcommand("gen", "emit exact polynomials, potentials and eigenpairs as JSON");
    add_selectors(gen, s, true);
    gen->add_option("--format", s.format, "json (default) or text");
    gen->add_option("--out", s.out, "output file");

    std::string config, only, fam_filter;
    auto* ver = app.add_subcommand("verify", "run the verification suite");
    ver->add_option("--config", config, "key=value config file");
    ver->add_option("--only", only, "comma-separated check groups");
    ver->add_option("--family", fam_filter, "comma-separated family filter");
    ver->add_option("--format", s.format, "text (default) or csv");
    ver->add_option("--out", s.out, "output file");

    std::string scan_np = "1..5";
    auto* scan = app.add_subcommand("scan", "zero-free scan of P_N against the parameter windows");
    scan->add_option("--family", s.family, "family index i = 1..3")->capture_default_str();
    scan->add_option("--nprime", scan_np, "n' range lo..hi")->capture_default_str();
    scan->add_option("--ell", s.ell, "ell range");
    scan->add_option("--d", s.d, "d range (family 1)");
    scan->add_option("--a", s.a, "a range (family 2)");
    scan->add_option("--b", s.b, "b range (family 3)");
    scan->add_option("--omega", s.omega, "frequency p/q")->capture_default_str();
    scan->add_option("--format", s.format, "csv");
    scan->add_option("--out", s.out, "output file");

    double rmin = 0, rmax = 8, step = 0.01;
    bool rmin_given = false;
    auto* plot = app.add_subcommand("plot-data", "sample V(r), w(r) and psi_n(r) on a grid");
    add_selectors(plot, s, true);
    auto* rmin_opt = plot->add_option("--rmin", rmin, "first grid point (default: step)");
    plot->add_option("--rmax", rmax, "last grid point")->capture_default_str();
    plot->add_option("--step", step, "grid spacing")->capture_default_str();
    plot->add_option("--out", s.out, "output file");

    std::string list_f = "1..3", list_m = "0..3", list_l = "0..5";
    auto* list = app.add_subcommand("list", "first-iteration catalog with certificate results");
    list->add_option("--families", list_f, "family range")->capture_default_str();
    list->add_option("--ms", list_m, "m range")->capture_default_str();
    list->add_option("--ells", list_l, "ell range")->capture_default_str();
    list->add_option("--omega", s.omega, "frequency p/q")->capture_default_str();
    list->add_option("--format", s.format, "csv");
    list->add_option("--out", s.out, "output file");

    std::vector<std::string> argv_store{"xlag"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    rmin_given = rmin_opt->count() > 0;

    try {
        if (*gen) return cmd_gen(s, out);
        if (*ver) return cmd_verify(config, only, fam_filter, s, out);
        if (*scan) return cmd_scan(s, scan_np, out);
        if (*plot) {
            if (rmin_given && rmin <= 0)
                throw UsageError("plot grid must stay in r > 0 (centrifugal singularity at r = 0)");
            return cmd_plot(s, rmin_given ? rmin : 0, rmax, step, out);
        }
        if (*list) return cmd_list(s, list_f, list_m, list_l, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedIteration& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidFamily& e) {
        err << "error: " << e.what() << " (use --allow-invalid to inspect it)\n";
        return kCheckFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailure;
    }
    return kUsage;
}

}  // namespace xlag::cli
