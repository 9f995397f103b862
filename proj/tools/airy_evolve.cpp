#include "airyevolve/checks.hpp"
#include "airyevolve/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace sc = airyevolve::scenario;

namespace {

struct SubState {
    CLI::App* cmd = nullptr;
    std::string config;
    std::map<std::string, std::string> params;
};

// register a pass-through option: only explicitly set flags reach the scenario
void passthrough(CLI::App* cmd, SubState& st, const std::string& flag,
                 const std::string& key, const std::string& help) {
    cmd->add_option_function<std::string>(
        flag, [&st, key](const std::string& v) { st.params[key] = v; }, help);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"airy-evolve: operational-calculus solvers for evolution equations "
                 "with linear potentials, Airy/Gauss-Weierstrass transforms and "
                 "quasi-monomial polynomial families"};
    app.require_subcommand(1);

    std::string out_dir;
    bool parallel = false;
    app.add_option("--out", out_dir,
                   "output directory (AIRY_EVOLVE_OUT overrides; default .)");

    std::map<std::string, SubState> subs;
    auto add_scenario_cmd = [&](const std::string& name, const std::string& desc) {
        SubState& st = subs[name];
        st.cmd = app.add_subcommand(name, desc);
        st.cmd->fallthrough();
        st.cmd->add_option("--config", st.config,
                           "run every scenario of this kind from an INI config file");
        return st.cmd;
    };

    {
        auto* c = add_scenario_cmd("heat", "solve d_t F = d_x^2 F + beta x F");
        auto& st = subs["heat"];
        passthrough(c, st, "--beta", "beta", "linear-term coefficient");
        passthrough(c, st, "--t", "t", "evolution time (> 0)");
        passthrough(c, st, "--x-min", "x-min", "grid left endpoint");
        passthrough(c, st, "--x-max", "x-max", "grid right endpoint");
        passthrough(c, st, "--n", "n", "grid samples");
        passthrough(c, st, "--init", "init", "gaussian | airy | x2");
        passthrough(c, st, "--sigma", "sigma", "gaussian width");
    }
    {
        auto* c = add_scenario_cmd("schrodinger",
                                   "solve i d_tau Psi = -d_x^2 Psi + b x Psi");
        auto& st = subs["schrodinger"];
        passthrough(c, st, "--b", "b", "linear-potential coefficient");
        passthrough(c, st, "--tau", "tau", "rescaled evolution time");
        passthrough(c, st, "--x-min", "x-min", "grid left endpoint");
        passthrough(c, st, "--x-max", "x-max", "grid right endpoint");
        passthrough(c, st, "--n", "n", "grid samples");
        passthrough(c, st, "--init", "init", "gaussian | airy | x2");
        passthrough(c, st, "--sigma", "sigma", "gaussian width");
    }
    {
        auto* c = add_scenario_cmd("airy-packet",
                                   "closed-form Airy packet snapshots and peak trajectory");
        auto& st = subs["airy-packet"];
        passthrough(c, st, "--b", "b", "linear-potential coefficient");
        passthrough(c, st, "--A", "A", "Airy length scale (> 0)");
        passthrough(c, st, "--tau-max", "tau-max", "final time");
        passthrough(c, st, "--snapshots", "snapshots", "number of snapshots");
        passthrough(c, st, "--x-min", "x-min", "grid left endpoint");
        passthrough(c, st, "--x-max", "x-max", "grid right endpoint");
        passthrough(c, st, "--n", "n", "grid samples");
    }
    {
        auto* c = add_scenario_cmd("transform",
                                   "apply a Gauss-Weierstrass, Airy or cubic transform");
        auto& st = subs["transform"];
        passthrough(c, st, "--transform", "transform", "gw | airy | cubic");
        passthrough(c, st, "--b", "b", "GW diffusion time (real part)");
        passthrough(c, st, "--b-imag", "b-imag", "GW diffusion time (imaginary part)");
        passthrough(c, st, "--alpha", "alpha", "Airy-transform scale (nonzero)");
        passthrough(c, st, "--t", "t", "cubic evolution time");
        passthrough(c, st, "--init", "init", "gaussian | airy | x2");
        passthrough(c, st, "--x-min", "x-min", "grid left endpoint");
        passthrough(c, st, "--x-max", "x-max", "grid right endpoint");
        passthrough(c, st, "--n", "n", "grid samples");
    }
    {
        auto* c = add_scenario_cmd("poly",
                                   "emit exact coefficients of the quasi-monomial families");
        auto& st = subs["poly"];
        passthrough(c, st, "--family", "family", "hermite | heat | airy");
        passthrough(c, st, "--p", "p", "derivative order (hermite family)");
        passthrough(c, st, "--n-max", "n-max", "highest polynomial index");
        passthrough(c, st, "--lambda", "lambda", "evolution parameter");
    }
    {
        auto* c = add_scenario_cmd("wei-norman",
                                   "ordering functions for time-dependent coefficients");
        auto& st = subs["wei-norman"];
        passthrough(c, st, "--alpha", "alpha",
                    "diffusion preset: constant:V | linear:V | sin:W | step:V:T");
        passthrough(c, st, "--beta", "beta", "potential preset (same syntax)");
        passthrough(c, st, "--t-max", "t-max", "final time");
        passthrough(c, st, "--samples", "samples", "table rows");
    }
    {
        auto* c = add_scenario_cmd("centroid", "Airy-packet centroid trajectory");
        auto& st = subs["centroid"];
        passthrough(c, st, "--phi", "phi", "drive preset: zero | constant | sin");
        passthrough(c, st, "--phi-arg", "phi-arg", "preset parameter");
        passthrough(c, st, "--B", "B", "field normalization (> 0)");
        passthrough(c, st, "--m", "m", "mass (> 0)");
        passthrough(c, st, "--t-max", "t-max", "final time");
        passthrough(c, st, "--samples", "samples", "table rows");
    }
    {
        auto* c = add_scenario_cmd("validate", "run named verification checks");
        auto& st = subs["validate"];
        std::string help = "check name or 'all' (names:";
        for (const auto& n : airyevolve::checks::check_names()) help += " " + n;
        help += ")";
        passthrough(c, st, "--check", "check", help);
    }

    CLI::App* run_cmd = app.add_subcommand("run", "run all scenarios from a config file");
    run_cmd->fallthrough();
    std::string run_config;
    run_cmd->add_option("--config", run_config, "INI config file")->required();
    run_cmd->add_flag("--parallel", parallel, "run independent scenarios concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const std::string dir = sc::resolve_output_dir(out_dir);
        std::vector<sc::Scenario> scenarios;

        if (run_cmd->parsed()) {
            scenarios = sc::parse_config_file(run_config);
        } else {
            for (auto& [kind, st] : subs) {
                if (!st.cmd->parsed()) continue;
                if (!st.config.empty()) {
                    for (auto& s : sc::parse_config_file(st.config))
                        if (s.kind == kind) scenarios.push_back(std::move(s));
                } else {
                    scenarios.push_back(sc::Scenario{kind, kind, st.params});
                }
            }
        }
        return sc::run_scenarios(scenarios, dir, parallel);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "airy-evolve: %s\n", e.what());
        return 2;
    }
}
