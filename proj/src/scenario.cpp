#include "airyevolve/scenario.hpp"

#include "airyevolve/checks.hpp"
#include "airyevolve/evolution.hpp"
#include "airyevolve/oracle.hpp"
#include "airyevolve/wei_norman.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace airyevolve::scenario {

namespace {

namespace ev = airyevolve::evolution;
namespace tr = airyevolve::transforms;
namespace sf = airyevolve::special_fn;
namespace wn = airyevolve::weinorman;
namespace ap = airyevolve::poly;
namespace orc = airyevolve::oracle;
namespace fs = std::filesystem;
using json = nlohmann::json;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

struct Outcome {
    std::vector<checks::SubCheck> checks;
    std::vector<std::string> outputs;
    std::string error; // nonempty on hard failure
    bool ok() const {
        if (!error.empty()) return false;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

double get_double(const Scenario& sc, const std::string& key, double def) {
    auto it = sc.params.find(key);
    if (it == sc.params.end()) return def;
    std::size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size())
        throw std::runtime_error("scenario '" + sc.name + "': bad number for " + key);
    return v;
}

long get_long(const Scenario& sc, const std::string& key, long def) {
    auto it = sc.params.find(key);
    if (it == sc.params.end()) return def;
    return std::stol(it->second);
}

std::string get_string(const Scenario& sc, const std::string& key, const std::string& def) {
    auto it = sc.params.find(key);
    return it == sc.params.end() ? def : it->second;
}

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')
                   ? c
                   : '-';
    return out.empty() ? std::string("scenario") : out;
}

// --- CSV ----------------------------------------------------------------

class Csv {
  public:
    Csv(const std::string& path, const std::string& header) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open output file " + path);
        out_ << header << "\n";
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ",";
            out_ << cells[i];
        }
        out_ << "\n";
    }

  private:
    std::ofstream out_;
};

void write_field_csv(const std::string& path, const GridFunction& f) {
    Csv csv(path, "x,re,im,abs2");
    for (std::size_t i = 0; i < f.size(); ++i)
        csv.row({format_double(f.x(i)), format_double(f[i].real()),
                 format_double(f[i].imag()), format_double(std::norm(f[i]))});
}

// --- initial data -------------------------------------------------------

GridFunction make_initial(const Scenario& sc, double x_min, double x_max, std::size_t n) {
    const std::string init = get_string(sc, "init", "gaussian");
    if (init == "gaussian") {
        const double sigma = get_double(sc, "sigma", 1.0);
        return sample(x_min, x_max, n,
                      [sigma](double x) { return std::exp(-x * x / (sigma * sigma)); });
    }
    if (init == "airy" || init == "x2") {
        // airy: window shifted toward the oscillatory (left) tail;
        // x2: symmetric window narrow enough to die out before the edges
        const double def_c = init == "airy" ? 0.25 * (3.0 * x_min + x_max)
                                            : 0.5 * (x_min + x_max);
        const double def_w = init == "airy" ? 0.4 * (x_max - x_min)
                                            : (x_max - x_min) / 4.2;
        const Window w{get_double(sc, "window-center", def_c),
                       get_double(sc, "window-width", def_w)};
        if (init == "airy")
            return sample(x_min, x_max, n,
                          [&](double x) { return sf::airy_ai(x) * w(x); });
        return sample(x_min, x_max, n, [&](double x) { return x * x * w(x); });
    }
    throw std::runtime_error("scenario '" + sc.name + "': unknown init '" + init + "'");
}

// --- scenario executors ---------------------------------------------------

Outcome run_heat(const Scenario& sc, const std::string& out_dir) {
    Outcome o;
    const double x_min = get_double(sc, "x-min", -24.0);
    const double x_max = get_double(sc, "x-max", 24.0);
    const auto n = static_cast<std::size_t>(get_long(sc, "n", 2401));
    const double beta = get_double(sc, "beta", 0.5);
    const double t = get_double(sc, "t", 0.4);
    auto f0 = make_initial(sc, x_min, x_max, n);
    auto F = ev::solve_heat_linear(f0, beta, t);

    const std::string path = out_dir + "/" + sanitize(sc.name) + "_field.csv";
    write_field_csv(path, F);
    o.outputs.push_back(path);

    if (get_string(sc, "init", "gaussian") == "gaussian" &&
        get_double(sc, "sigma", 1.0) == 1.0) {
        GridFunction ref = F;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            double x = ref.x(i);
            double s = x + beta * t * t;
            ref.values[i] = std::exp(ev::phase_phi(x, t, beta)) *
                            std::exp(-s * s / (1.0 + 4.0 * t)) /
                            std::sqrt(1.0 + 4.0 * t);
        }
        double err = linf_rel_error(F, ref);
        o.checks.push_back({"gaussian-closed-form-linf", err, 1e-6, err <= 1e-6});
    }
    return o;
}

Outcome run_schrodinger(const Scenario& sc, const std::string& out_dir) {
    Outcome o;
    const double x_min = get_double(sc, "x-min", -24.0);
    const double x_max = get_double(sc, "x-max", 24.0);
    const auto n = static_cast<std::size_t>(get_long(sc, "n", 2048));
    const double b = get_double(sc, "b", 0.5);
    const double tau = get_double(sc, "tau", 0.5);
    auto f0 = make_initial(sc, x_min, x_max, n);
    auto psi = ev::solve_schrodinger_linear(f0, b, tau);

    const std::string path = out_dir + "/" + sanitize(sc.name) + "_field.csv";
    write_field_csv(path, psi);
    o.outputs.push_back(path);

    const double drift = std::abs(l2_norm(psi) - l2_norm(f0)) / l2_norm(f0);
    o.checks.push_back({"norm-conservation", drift, 1e-6, drift <= 1e-6});
    return o;
}

Outcome run_airy_packet(const Scenario& sc, const std::string& out_dir) {
    Outcome o;
    const double b = get_double(sc, "b", 1.0);
    const double A = get_double(sc, "A", 1.0);
    const double tau_max = get_double(sc, "tau-max", 2.0);
    const auto snapshots = static_cast<std::size_t>(get_long(sc, "snapshots", 9));
    const ev::GridSpec gs{get_double(sc, "x-min", -30.0), get_double(sc, "x-max", 10.0),
                          static_cast<std::size_t>(get_long(sc, "n", 2048))};
    const sf::AiryScale scale{A};

    const std::string base = out_dir + "/" + sanitize(sc.name);
    Csv snap(base + "_snapshots.csv", "tau,x,re,im,abs2");
    Csv traj(base + "_trajectory.csv", "tau,x_peak,max_density");
    o.outputs.push_back(base + "_snapshots.csv");
    o.outputs.push_back(base + "_trajectory.csv");

    double x_peak0 = 0.0, dx = 0.0, worst_cells = 0.0;
    for (std::size_t k = 0; k < snapshots; ++k) {
        double tau = snapshots > 1 ? tau_max * static_cast<double>(k) /
                                         static_cast<double>(snapshots - 1)
                                   : 0.0;
        auto st = ev::solve_schrodinger_airy(b, tau, scale, gs);
        dx = st.psi.dx;
        if (k == 0) x_peak0 = st.x_peak;
        const double law = ev::airy_peak_trajectory(x_peak0, b, tau, scale);
        worst_cells = std::max(worst_cells, std::abs(st.x_peak - law) / dx);
        traj.row({format_double(tau), format_double(st.x_peak),
                  format_double(st.max_density)});
        for (std::size_t i = 0; i < st.psi.size(); ++i)
            snap.row({format_double(tau), format_double(st.psi.x(i)),
                      format_double(st.psi[i].real()), format_double(st.psi[i].imag()),
                      format_double(std::norm(st.psi[i]))});
    }
    o.checks.push_back(
        {"peak-trajectory-law-cells", worst_cells, 2.0, worst_cells <= 2.0});
    return o;
}

Outcome run_transform(const Scenario& sc, const std::string& out_dir) {
    Outcome o;
    const std::string kind = get_string(sc, "transform", "gw");
    const bool wide = get_string(sc, "init", "gaussian") == "x2";
    const double x_min = get_double(sc, "x-min", wide ? -42.0 : -24.0);
    const double x_max = get_double(sc, "x-max", wide ? 42.0 : 24.0);
    const auto n = static_cast<std::size_t>(get_long(sc, "n", wide ? 4201 : 2401));
    auto f = make_initial(sc, x_min, x_max, n);

    tr::TransformParams tp;
    tp.diffusion_time_b = get_double(sc, "b", 0.5);
    tp.airy_scale_alpha = get_double(sc, "alpha", 1.0);
    tp.cubic_time_t = get_double(sc, "t", 0.2);
    tr::validate(tp);

    GridFunction out = f;
    if (kind == "gw") {
        out = tr::gauss_weierstrass(
            f, cplx(tp.diffusion_time_b, get_double(sc, "b-imag", 0.0)));
    } else if (kind == "airy") {
        out = tr::airy_transform(f, tp.airy_scale_alpha);
    } else if (kind == "cubic") {
        out = tr::cubic_evolution(f, tp.cubic_time_t);
    } else {
        throw std::runtime_error("scenario '" + sc.name + "': unknown transform '" +
                                 kind + "'");
    }

    const std::string path = out_dir + "/" + sanitize(sc.name) + "_out.csv";
    write_field_csv(path, out);
    o.outputs.push_back(path);

    const Window w{0.0, 0.3 * (x_max - x_min)};
    if (kind == "gw" && get_string(sc, "init", "gaussian") == "gaussian" &&
        get_double(sc, "b-imag", 0.0) == 0.0 && get_double(sc, "sigma", 1.0) == 1.0) {
        const double t = get_double(sc, "b", 0.5);
        GridFunction ref = out;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            double x = ref.x(i);
            ref.values[i] =
                std::exp(-x * x / (1.0 + 4.0 * t)) / std::sqrt(1.0 + 4.0 * t);
        }
        double err = linf_rel_error(out, ref);
        o.checks.push_back({"gw-gaussian-closed-form", err, 1e-6, err <= 1e-6});
    } else if (kind == "airy") {
        double res = tr::ait_derivative_identity_residual(
            f, get_double(sc, "alpha", 1.0), w);
        o.checks.push_back({"ait-derivative-identity", res, 1e-4, res <= 1e-4});
    } else if (kind == "cubic" && get_string(sc, "init", "gaussian") == "x2") {
        const double t = get_double(sc, "t", 0.2);
        auto exact = tr::cubic_evolution(ap::monomial(2), ap::rational_from_double(t));
        double worst = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            double x = out.x(i);
            if (std::abs(x) > 2.0) continue;
            worst = std::max(worst, std::abs(out[i].real() - ap::eval(exact, x)));
            scale = std::max(scale, std::abs(ap::eval(exact, x)));
        }
        double rel = worst / scale;
        o.checks.push_back({"cubic-vs-exact-polynomial", rel, 1e-4, rel <= 1e-4});
    }
    return o;
}

Outcome run_poly(const Scenario& sc, const std::string& out_dir) {
    Outcome o;
    const std::string family = get_string(sc, "family", "airy");
    unsigned p = static_cast<unsigned>(get_long(sc, "p", family == "heat" ? 2 : 3));
    if (family == "heat") p = 2;
    if (family == "airy") p = 3;
    const auto n_max = static_cast<unsigned>(get_long(sc, "n-max", 12));
    const ap::Rational lambda = ap::rational_from_double(get_double(sc, "lambda", 1.0));

    const std::string path = out_dir + "/" + sanitize(sc.name) + "_coeffs.csv";
    Csv csv(path, "n,degree,coefficient-numerator,coefficient-denominator");
    for (unsigned n = 0; n <= n_max; ++n) {
        auto h = ap::hermite_higher(n, p, lambda);
        for (int k = 0; k <= h.degree(); ++k) {
            const ap::Rational& c = h.coeffs[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            csv.row({std::to_string(n), std::to_string(k),
                     boost::multiprecision::numerator(c).str(),
                     boost::multiprecision::denominator(c).str()});
        }
    }
    o.outputs.push_back(path);

    bool rec_ok = ap::verify_recurrences(n_max, p, lambda).all_ok;
    o.checks.push_back({"recurrences-exact", rec_ok ? 0.0 : 1.0, 0.0, rec_ok});
    return o;
}

Outcome run_wei_norman(const Scenario& sc, const std::string& out_dir) {
    Outcome o;
    auto parse_preset = [&](const std::string& key, const std::string& def,
                            std::vector<double>& breakpoints) {
        std::string spec = get_string(sc, key, def);
        std::string name = spec;
        double p0 = 1.0, p1 = 0.0;
        if (auto c1 = spec.find(':'); c1 != std::string::npos) {
            name = spec.substr(0, c1);
            std::string rest = spec.substr(c1 + 1);
            if (auto c2 = rest.find(':'); c2 != std::string::npos) {
                p0 = std::stod(rest.substr(0, c2));
                p1 = std::stod(rest.substr(c2 + 1));
            } else {
                p0 = std::stod(rest);
            }
        }
        if (name == "step") breakpoints.push_back(p1);
        return wn::coeff_preset(name, p0, p1);
    };
    wn::CoeffFunctions cf;
    cf.alpha = parse_preset("alpha", "constant:1.0", cf.breakpoints);
    cf.beta = parse_preset("beta", "sin:1.0", cf.breakpoints);
    const double t_max = get_double(sc, "t-max", 1.0);
    const auto samples = static_cast<std::size_t>(get_long(sc, "samples", 101));

    const std::string path = out_dir + "/" + sanitize(sc.name) + "_coeffs.csv";
    Csv csv(path, "t,a,b,c,d");
    for (std::size_t k = 1; k <= samples; ++k) {
        double t = t_max * static_cast<double>(k) / static_cast<double>(samples);
        auto w = wn::wei_norman_coeffs(cf, t, wn::Method::nested_quadrature);
        csv.row({format_double(t), format_double(w.a), format_double(w.b),
                 format_double(w.c), format_double(w.d)});
    }
    o.outputs.push_back(path);

    auto wo = wn::wei_norman_coeffs(cf, t_max, wn::Method::ode);
    auto wq = wn::wei_norman_coeffs(cf, t_max, wn::Method::nested_quadrature);
    auto rel = [](double a, double b) {
        return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-3});
    };
    double worst =
        std::max({rel(wo.a, wq.a), rel(wo.b, wq.b), rel(wo.c, wq.c), rel(wo.d, wq.d)});
    o.checks.push_back({"ode-vs-nested-quadrature", worst, 1e-6, worst <= 1e-6});
    return o;
}

Outcome run_centroid(const Scenario& sc, const std::string& out_dir) {
    Outcome o;
    const std::string preset = get_string(sc, "phi", "sin");
    const double p0 = get_double(sc, "phi-arg", 1.0);
    std::function<double(double)> phi;
    if (preset == "zero")
        phi = [](double) { return 0.0; };
    else if (preset == "constant")
        phi = [p0](double) { return p0; };
    else if (preset == "sin")
        phi = [p0](double t) { return std::sin(p0 * t); };
    else
        throw std::runtime_error("scenario '" + sc.name + "': unknown phi preset");

    const double B = get_double(sc, "B", 1.0);
    const double m = get_double(sc, "m", 1.0);
    const double t_max = get_double(sc, "t-max", 2.0);
    const auto samples = static_cast<std::size_t>(get_long(sc, "samples", 201));
    std::vector<double> t_grid(samples);
    for (std::size_t i = 0; i < samples; ++i)
        t_grid[i] = t_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    auto xc = ev::centroid_trajectory(phi, B, m, t_grid);

    const std::string path = out_dir + "/" + sanitize(sc.name) + "_trajectory.csv";
    Csv csv(path, "t,X_c");
    for (std::size_t i = 0; i < samples; ++i)
        csv.row({format_double(t_grid[i]), format_double(xc[i])});
    o.outputs.push_back(path);

    const double h = t_grid[1] - t_grid[0];
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < samples; ++i) {
        double acc = (xc[i + 1] - 2.0 * xc[i] + xc[i - 1]) / (h * h);
        double expect = B * B * B / (2.0 * m * m) + phi(t_grid[i]) / m;
        worst = std::max(worst, std::abs(acc - expect) /
                                    std::max(std::abs(expect), 1e-6));
    }
    o.checks.push_back({"acceleration-law", worst, 1e-4, worst <= 1e-4});
    return o;
}

Outcome run_validate(const Scenario& sc, const std::string&) {
    Outcome o;
    const std::string which = get_string(sc, "check", "all");
    std::vector<checks::CheckResult> results;
    if (which == "all")
        results = checks::run_all_checks();
    else if (checks::is_check_name(which))
        results.push_back(checks::run_check(which));
    else
        throw std::runtime_error("scenario '" + sc.name + "': unknown check '" + which +
                                 "'");
    for (const auto& r : results)
        for (const auto& s : r.subchecks)
            o.checks.push_back({r.name + ": " + s.name, s.value, s.tolerance, s.pass});
    return o;
}

Outcome run_one(const Scenario& sc, const std::string& out_dir) {
    try {
        if (sc.kind == "heat") return run_heat(sc, out_dir);
        if (sc.kind == "schrodinger") return run_schrodinger(sc, out_dir);
        if (sc.kind == "airy-packet") return run_airy_packet(sc, out_dir);
        if (sc.kind == "transform") return run_transform(sc, out_dir);
        if (sc.kind == "poly") return run_poly(sc, out_dir);
        if (sc.kind == "wei-norman") return run_wei_norman(sc, out_dir);
        if (sc.kind == "centroid") return run_centroid(sc, out_dir);
        if (sc.kind == "validate") return run_validate(sc, out_dir);
        Outcome o;
        o.error = "unknown scenario kind '" + sc.kind + "'";
        return o;
    } catch (const std::exception& e) {
        Outcome o;
        o.error = e.what();
        return o;
    }
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<Scenario> parse_config_text(const std::string& text) {
    std::vector<Scenario> scenarios;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Scenario* current = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw std::runtime_error("config line " + std::to_string(lineno) +
                                         ": unterminated section header");
            scenarios.push_back(Scenario{trim(s.substr(1, s.size() - 2)), "", {}});
            current = &scenarios.back();
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        if (!current)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": key outside of a [section]");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": empty key");
        if (key == "kind")
            current->kind = value;
        else
            current->params[key] = value;
    }
    for (const auto& sc : scenarios)
        if (sc.kind.empty())
            throw std::runtime_error("scenario '" + sc.name + "': missing kind");
    return scenarios;
}

std::vector<Scenario> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string resolve_output_dir(const std::string& requested) {
    if (const char* env = std::getenv("AIRY_EVOLVE_OUT"); env && *env) return env;
    return requested.empty() ? std::string(".") : requested;
}

int run_scenarios(const std::vector<Scenario>& scenarios, const std::string& out_dir,
                  bool parallel) {
    fs::create_directories(out_dir);
    std::vector<Outcome> outcomes(scenarios.size());

    if (parallel && scenarios.size() > 1) {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= scenarios.size()) return;
                outcomes[i] = run_one(scenarios[i], out_dir);
            }
        };
        unsigned count = std::min<unsigned>(std::thread::hardware_concurrency(),
                                            static_cast<unsigned>(scenarios.size()));
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < std::max(1u, count); ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < scenarios.size(); ++i)
            outcomes[i] = run_one(scenarios[i], out_dir);
    }

    json manifest;
    bool all_ok = true;
    bool hard_error = false;
    manifest["scenarios"] = json::array();
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const auto& sc = scenarios[i];
        const auto& oc = outcomes[i];
        json entry;
        entry["name"] = sc.name;
        entry["kind"] = sc.kind;
        entry["parameters"] = json(sc.params);
        entry["outputs"] = oc.outputs;
        json jchecks = json::array();
        for (const auto& c : oc.checks)
            jchecks.push_back({{"name", c.name},
                               {"value", c.value},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass}});
        entry["checks"] = jchecks;
        if (!oc.error.empty()) {
            entry["error"] = oc.error;
            hard_error = true;
        }
        entry["ok"] = oc.ok();
        all_ok = all_ok && oc.ok();
        manifest["scenarios"].push_back(entry);
    }
    manifest["ok"] = all_ok;

    std::ofstream mf(out_dir + "/manifest.json", std::ios::binary);
    mf << manifest.dump(2) << "\n";

    if (hard_error) return 2;
    return all_ok ? 0 : 1;
}

} // namespace airyevolve::scenario
