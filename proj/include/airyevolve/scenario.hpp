#pragma once

#include <map>
#include <string>
#include <vector>

// Declarative scenario runner behind the CLI: flat INI-style configs, CSV
// emission with fixed 17-significant-digit formatting (byte-identical
// reruns), and a JSON manifest recording parameters and pass/fail of every
// built-in check.

namespace airyevolve::scenario {

struct Scenario {
    std::string name;                         // section name (or CLI-assigned)
    std::string kind;                         // heat | schrodinger | airy-packet |
                                              // transform | poly | wei-norman |
                                              // centroid | validate
    std::map<std::string, std::string> params;
};

/// Parse an INI-style config: [section] headers open scenarios, `key = value`
/// lines fill them, `#`/`;` start comments. Throws std::runtime_error with a
/// description on malformed input.
std::vector<Scenario> parse_config_file(const std::string& path);
std::vector<Scenario> parse_config_text(const std::string& text);

/// Output directory resolution: AIRY_EVOLVE_OUT env var overrides `requested`;
/// falls back to "." when both are empty.
std::string resolve_output_dir(const std::string& requested);

/// Execute scenarios (sequentially or in parallel), write their CSV outputs
/// and <out_dir>/manifest.json. Returns the process exit code: 0 when all
/// built-in checks pass, 1 on check failure, 2 on bad configuration.
int run_scenarios(const std::vector<Scenario>& scenarios, const std::string& out_dir,
                  bool parallel = false);

/// Deterministic float formatting used for all CSV payloads (17 significant
/// digits, shortest-round-trip not used on purpose: fixed %.17g).
std::string format_double(double v);

} // namespace airyevolve::scenario
