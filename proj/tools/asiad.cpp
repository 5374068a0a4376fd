// asiad: command line front end for the density library.
//
// Subcommands:
//   density        tabulate the density over a w grid (CSV)
//   compare        cross-check the two integral representations (JSON report)
//   mc-validate    Monte Carlo goodness-of-fit against the density (JSON)
//   laplace-check  numeric Laplace transform vs closed-form right side (JSON)
//   special        evaluate one special function at a point
//
// Exit codes: 0 ok, 1 validation failed, 2 bad arguments / empty grid,
// 3 underpowered run (sample size too small for the requested check).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asiad/density.hpp"
#include "asiad/errors.hpp"
#include "asiad/laplace.hpp"
#include "asiad/mc.hpp"
#include "asiad/specialfn.hpp"

using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// "start:stop:count" -> grid, log spaced when log_spaced is set.
std::vector<double> parse_grid(const std::string& s, bool log_spaced) {
    double a = 0.0, b = 0.0;
    long n = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    in >> a >> c1 >> b >> c2 >> n;
    if (!in || c1 != ':' || c2 != ':' || n < 1)
        throw asiad::BadParameter("grid spec must be start:stop:count");
    if (log_spaced && (a <= 0.0 || b <= 0.0))
        throw asiad::BadParameter("log grid needs positive endpoints");
    std::vector<double> g(static_cast<std::size_t>(n));
    if (n == 1) {
        g[0] = a;
        return g;
    }
    if (log_spaced) {
        double la = std::log(a), lb = std::log(b);
        for (long i = 0; i < n; ++i)
            g[i] = std::exp(la + (lb - la) * double(i) / double(n - 1));
    } else {
        for (long i = 0; i < n; ++i)
            g[i] = a + (b - a) * double(i) / double(n - 1);
    }
    return g;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(std::stod(tok));
    return out;
}

asiad::Complex parse_complex(const std::string& s) {
    auto pos = s.find(',');
    if (pos == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, pos)), std::stod(s.substr(pos + 1))};
}

// Config file handling: a JSON object keyed by subcommand name, each block
// holding option values under the long option names. The file only sets
// defaults; it is applied to the option variables before parsing, so any
// flag given on the command line overwrites it.
json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw asiad::BadParameter("cannot open config file: " + path);
    json j = json::parse(in, nullptr, true, true);
    if (!j.is_object())
        throw asiad::BadParameter("config root must be a JSON object");
    return j;
}

template <typename T>
void pick(const json& o, const char* key, T& dst) {
    if (auto it = o.find(key); it != o.end()) it->get_to(dst);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ASIA_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw asiad::BadParameter("ASIA_SEED must be a decimal integer");
    }
    return 20260815ull;
}

struct DensityArgs {
    double nu = 0.0, eps = 1.0, t = 1.0;
    std::string w_grid = "0.5:2:12";
    bool log_spaced = true;
    std::string route = "auto";
    std::string out;
};

struct CompareArgs {
    std::string nu_list = "0,0.5,1.5";
    std::string eps_list = "1,-1";
    std::string t_list = "1";
    std::string w_grid = "0.5:2:8";
    double tol = 1e-6;
};

struct McArgs {
    double nu = 0.0, eps = 1.0, t = 1.0;
    long long paths = 100000;
    int steps = 4096;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double threshold = 0.01;
    int knots = 1400;
    bool richardson = false;
};

struct LaplaceArgs {
    double nu = 0.5, eps = 1.0, w = 1.0;
    std::string z = "5";
    double tol = 1e-3;
};

struct SpecialArgs {
    std::string fn;
    std::string mu = "0", z = "0", rho = "0", eta = "0", a = "0", b = "1";
};

int cmd_density(const DensityArgs& d) {
    std::vector<double> ws = parse_grid(d.w_grid, d.log_spaced);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!d.out.empty()) {
        file.open(d.out);
        if (!file) throw asiad::BadParameter("cannot open output: " + d.out);
        os = &file;
    }
    bool both = d.route == "both";
    *os << "nu,eps,t,w,value,abs_error,route";
    if (both) *os << ",delta";
    *os << "\n";
    for (double w : ws) {
        asiad::ModelParams p{d.nu, d.eps, d.t, w};
        asiad::EvalResult r;
        double delta = 0.0;
        if (d.route == "auto") {
            r = asiad::density(p);
        } else if (d.route == "hermite") {
            r = asiad::density_hermite(p);
        } else if (d.route == "yor") {
            r = asiad::density_yor(p);
        } else if (both) {
            r = asiad::density_yor(p);
            try {
                asiad::EvalResult h = asiad::density_hermite(p);
                delta = std::abs(r.value - h.value);
            } catch (const asiad::NegativeIntegerDegree&) {
                delta = 0.0;  // Hermite side undefined here; Yor row stands
            }
        } else {
            throw asiad::BadParameter("route must be auto|hermite|yor|both");
        }
        *os << fmt17(d.nu) << ',' << fmt17(d.eps) << ',' << fmt17(d.t) << ','
            << fmt17(w) << ',' << fmt17(r.value) << ',' << fmt17(r.abs_error)
            << ',' << asiad::route_name(r.route);
        if (both) *os << ',' << fmt17(delta);
        *os << "\n";
    }
    return 0;
}

int cmd_compare(const CompareArgs& c) {
    std::vector<double> nus = parse_list(c.nu_list);
    std::vector<double> epss = parse_list(c.eps_list);
    std::vector<double> ts = parse_list(c.t_list);
    std::vector<double> ws = parse_grid(c.w_grid, true);
    json rep;
    rep["grid"] = {{"nu", nus}, {"eps", epss}, {"t", ts}, {"w", ws}};
    rep["tolerance"] = c.tol;
    if (nus.empty() || epss.empty() || ts.empty() || ws.empty()) {
        rep["error"] = "empty grid";
        std::cout << rep.dump(2) << "\n";
        return 2;
    }
    double max_rel = 0.0;
    json worst, yor_only = json::array();
    long points = 0;
    bool pass = true;
    for (double nu : nus)
        for (double eps : epss)
            for (double t : ts)
                for (double w : ws) {
                    asiad::ModelParams p{nu, eps, t, w};
                    asiad::EvalResult y = asiad::density_yor(p);
                    asiad::EvalResult h;
                    try {
                        h = asiad::density_hermite(p);
                    } catch (const asiad::NegativeIntegerDegree&) {
                        yor_only.push_back(
                            {{"nu", nu}, {"eps", eps}, {"t", t}, {"w", w}});
                        continue;
                    }
                    ++points;
                    double scale = std::max(std::abs(h.value), 1e-12);
                    double rel = std::abs(y.value - h.value) / scale;
                    double allow =
                        c.tol + (y.abs_error + h.abs_error) / scale;
                    if (rel > allow) pass = false;
                    if (rel > max_rel) {
                        max_rel = rel;
                        worst = {{"nu", nu},       {"eps", eps}, {"t", t},
                                 {"w", w},         {"rel", rel}, {"allow", allow}};
                    }
                }
    rep["points"] = points;
    rep["max_rel_dev"] = max_rel;
    if (!worst.is_null()) rep["worst"] = worst;
    rep["yor_only"] = yor_only;
    rep["pass"] = pass;
    std::cout << rep.dump(2) << "\n";
    if (points == 0 && yor_only.empty()) return 2;
    return pass ? 0 : 1;
}

int cmd_mc_validate(const McArgs& m) {
    asiad::MCConfig cfg;
    cfg.nu = m.nu;
    cfg.eps = m.eps;
    cfg.t = m.t;
    cfg.paths = m.paths;
    cfg.steps = m.steps;
    cfg.seed = m.seed_set ? m.seed : default_seed();
    cfg.validate();
    json rep;
    rep["params"] = {{"nu", cfg.nu},     {"eps", cfg.eps},
                     {"t", cfg.t},       {"paths", cfg.paths},
                     {"steps", cfg.steps}, {"seed", cfg.seed}};
    rep["threshold"] = m.threshold;
    if (cfg.paths < 10000) {
        rep["insufficient_for_ks_threshold"] = true;
        std::cout << rep.dump(2) << "\n";
        return 3;
    }
    asiad::DensityCdf cdf =
        asiad::build_density_cdf(cfg.nu, cfg.eps, cfg.t, m.knots);
    std::vector<double> samples = asiad::simulate(cfg);
    asiad::ModelParams p{cfg.nu, cfg.eps, cfg.t, 1.0};
    asiad::MCReport r = asiad::ks_compare(samples, p, cdf);
    bool pass = r.ks_stat <= m.threshold;
    rep["ks"] = r.ks_stat;
    rep["mean"] = r.mean;
    rep["mean_ci_halfwidth"] = r.mean_ci_halfwidth;
    if (cfg.eps == 1.0 && cfg.nu > -1.0) {
        double ex = (std::exp((2.0 * cfg.nu + 2.0) * cfg.t) - 1.0) /
                    (2.0 * cfg.nu + 2.0);
        rep["mean_exact"] = ex;
        bool mean_ok = std::abs(r.mean - ex) <= r.mean_ci_halfwidth;
        rep["mean_ok"] = mean_ok;
        pass = pass && mean_ok;
    }
    if (m.richardson) {
        asiad::RichardsonReport rr = asiad::richardson_bias_check(cfg, cdf);
        rep["richardson"] = {{"steps", rr.steps},
                             {"ks", rr.ks},
                             {"noise_allowance", rr.noise_allowance},
                             {"nonincreasing", rr.nonincreasing_within_noise}};
        pass = pass && rr.nonincreasing_within_noise;
    }
    rep["pass"] = pass;
    rep["elapsed_seconds"] = r.elapsed;
    std::cout << rep.dump(2) << "\n";
    return pass ? 0 : 1;
}

int cmd_laplace_check(const LaplaceArgs& l) {
    asiad::Complex z = parse_complex(l.z);
    asiad::Complex rhs = asiad::laplace_rhs(z, l.nu, l.eps, l.w);
    asiad::TransformResult lhs = asiad::laplace_numeric(z, l.nu, l.eps, l.w);
    double rel = std::abs(lhs.value - rhs) /
                 std::max(std::abs(rhs), 1e-300);
    bool pass = rel <= l.tol;
    json rep;
    rep["params"] = {{"nu", l.nu},
                     {"eps", l.eps},
                     {"w", l.w},
                     {"z", {z.real(), z.imag()}}};
    rep["lhs"] = {lhs.value.real(), lhs.value.imag()};
    rep["lhs_abs_error"] = lhs.abs_error;
    rep["rhs"] = {rhs.real(), rhs.imag()};
    rep["rel_dev"] = rel;
    rep["tolerance"] = l.tol;
    rep["pass"] = pass;
    std::cout << rep.dump(2) << "\n";
    return pass ? 0 : 1;
}

int cmd_special(const SpecialArgs& s) {
    asiad::Complex v;
    if (s.fn == "hermite") {
        v = asiad::hermite_h(parse_complex(s.mu), parse_complex(s.z));
    } else if (s.fn == "besseli") {
        v = asiad::bessel_i_series(parse_complex(s.rho), parse_complex(s.eta));
    } else if (s.fn == "kummer") {
        v = asiad::kummer_phi(parse_complex(s.a), parse_complex(s.b),
                              parse_complex(s.z));
    } else if (s.fn == "gamma") {
        v = asiad::gamma_complex(parse_complex(s.z));
    } else {
        throw asiad::BadParameter(
            "function must be hermite|besseli|kummer|gamma");
    }
    if (std::abs(v.imag()) < 1e-300)
        std::cout << fmt17(v.real()) << "\n";
    else
        std::cout << fmt17(v.real()) << (v.imag() < 0 ? "" : "+")
                  << fmt17(v.imag()) << "i\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integrated geometric Brownian motion density toolkit"};
    app.require_subcommand(0, 1);
    bool dump_config = false;
    std::string config_path;
    app.add_flag("--dump-config", dump_config,
                 "print the effective configuration as JSON and exit");
    app.add_option("--config", config_path, "JSON file with option defaults");

    DensityArgs d;
    CompareArgs c;
    McArgs m;
    LaplaceArgs l;
    SpecialArgs s;

    auto opt = [](CLI::Option* o) {
        o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        return o;
    };
    app.fallthrough(); // --config / --dump-config work after the subcommand

    CLI::App* cd = app.add_subcommand("density", "tabulate density as CSV");
    opt(cd->add_option("--nu", d.nu, "drift parameter"));
    opt(cd->add_option("--eps", d.eps, "power exponent (nonzero)"));
    opt(cd->add_option("--t", d.t, "time horizon"));
    opt(cd->add_option("--w-grid", d.w_grid, "w grid start:stop:count"));
    opt(cd->add_flag("--log,!--no-log", d.log_spaced, "log spaced w grid"));
    opt(cd->add_option("--route", d.route, "auto|hermite|yor|both"));
    opt(cd->add_option("--out", d.out, "output CSV path (default stdout)"));

    CLI::App* cc = app.add_subcommand("compare", "cross-check representations");
    opt(cc->add_option("--nu-list", c.nu_list, "comma separated nu values"));
    opt(cc->add_option("--eps-list", c.eps_list, "comma separated eps values"));
    opt(cc->add_option("--t-list", c.t_list, "comma separated t values"));
    opt(cc->add_option("--w-grid", c.w_grid, "w grid start:stop:count"));
    opt(cc->add_option("--tol", c.tol, "relative tolerance"));

    CLI::App* cm = app.add_subcommand("mc-validate", "Monte Carlo KS check");
    opt(cm->add_option("--nu", m.nu, "drift parameter"));
    opt(cm->add_option("--eps", m.eps, "power exponent (nonzero)"));
    opt(cm->add_option("--t", m.t, "time horizon"));
    opt(cm->add_option("--paths", m.paths, "number of simulated paths"));
    opt(cm->add_option("--steps", m.steps, "time steps per path"));
    opt(cm->add_option("--seed", m.seed, "RNG seed"))->each([&](auto) {
        m.seed_set = true;
    });
    opt(cm->add_option("--threshold", m.threshold, "KS pass threshold"));
    opt(cm->add_option("--knots", m.knots, "CDF table knots"));
    opt(cm->add_flag("--richardson", m.richardson, "add step-bias check"));

    CLI::App* cl = app.add_subcommand("laplace-check",
                                      "transform identity check");
    opt(cl->add_option("--nu", l.nu, "drift parameter (>= 0)"));
    opt(cl->add_option("--eps", l.eps, "power exponent (nonzero)"));
    opt(cl->add_option("--w", l.w, "density argument"));
    opt(cl->add_option("--z", l.z, "transform variable, re or re,im"));
    opt(cl->add_option("--tol", l.tol, "relative tolerance"));

    CLI::App* cs = app.add_subcommand("special", "evaluate special function");
    cs->add_option("function", s.fn, "hermite|besseli|kummer|gamma")
        ->required();
    opt(cs->add_option("--mu", s.mu, "degree, re or re,im"));
    opt(cs->add_option("--z", s.z, "argument, re or re,im"));
    opt(cs->add_option("--rho", s.rho, "order, re or re,im"));
    opt(cs->add_option("--eta", s.eta, "argument, re or re,im"));
    opt(cs->add_option("--a", s.a, "numerator parameter"));
    opt(cs->add_option("--b", s.b, "denominator parameter"));

    // Pre-scan for --config so file values become defaults before the real
    // parse; explicit flags then overwrite them.
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        std::string cfg_file;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--config" && i + 1 < args.size())
                cfg_file = args[i + 1];
            else if (args[i].rfind("--config=", 0) == 0)
                cfg_file = args[i].substr(9);
        }
        if (!cfg_file.empty()) {
            json cfg = load_config(cfg_file);
            if (auto it = cfg.find("density"); it != cfg.end()) {
                pick(*it, "nu", d.nu);
                pick(*it, "eps", d.eps);
                pick(*it, "t", d.t);
                pick(*it, "w-grid", d.w_grid);
                pick(*it, "log", d.log_spaced);
                pick(*it, "route", d.route);
            }
            if (auto it = cfg.find("compare"); it != cfg.end()) {
                pick(*it, "nu-list", c.nu_list);
                pick(*it, "eps-list", c.eps_list);
                pick(*it, "t-list", c.t_list);
                pick(*it, "w-grid", c.w_grid);
                pick(*it, "tol", c.tol);
            }
            if (auto it = cfg.find("mc-validate"); it != cfg.end()) {
                pick(*it, "nu", m.nu);
                pick(*it, "eps", m.eps);
                pick(*it, "t", m.t);
                pick(*it, "paths", m.paths);
                pick(*it, "steps", m.steps);
                if (it->contains("seed")) {
                    it->at("seed").get_to(m.seed);
                    m.seed_set = true;
                }
                pick(*it, "threshold", m.threshold);
                pick(*it, "knots", m.knots);
            }
            if (auto it = cfg.find("laplace-check"); it != cfg.end()) {
                pick(*it, "nu", l.nu);
                pick(*it, "eps", l.eps);
                pick(*it, "w", l.w);
                pick(*it, "z", l.z);
                pick(*it, "tol", l.tol);
            }
        }

        std::vector<const char*> cargv;
        cargv.push_back(argv[0]);
        for (const std::string& a : args) cargv.push_back(a.c_str());
        app.parse(int(cargv.size()), const_cast<char**>(cargv.data()));

        if (dump_config) {
            json eff;
            eff["density"] = {{"nu", d.nu},
                              {"eps", d.eps},
                              {"t", d.t},
                              {"w-grid", d.w_grid},
                              {"log", d.log_spaced},
                              {"route", d.route}};
            eff["compare"] = {{"nu-list", c.nu_list},
                              {"eps-list", c.eps_list},
                              {"t-list", c.t_list},
                              {"w-grid", c.w_grid},
                              {"tol", c.tol}};
            eff["mc-validate"] = {{"nu", m.nu},
                                  {"eps", m.eps},
                                  {"t", m.t},
                                  {"paths", m.paths},
                                  {"steps", m.steps},
                                  {"seed", m.seed_set ? m.seed
                                                      : default_seed()},
                                  {"threshold", m.threshold},
                                  {"knots", m.knots}};
            eff["laplace-check"] = {{"nu", l.nu},
                                    {"eps", l.eps},
                                    {"w", l.w},
                                    {"z", l.z},
                                    {"tol", l.tol}};
            std::cout << eff.dump(2) << "\n";
            return 0;
        }

        if (cd->parsed()) return cmd_density(d);
        if (cc->parsed()) return cmd_compare(c);
        if (cm->parsed()) return cmd_mc_validate(m);
        if (cl->parsed()) return cmd_laplace_check(l);
        if (cs->parsed()) return cmd_special(s);
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const asiad::BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const asiad::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const asiad::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
