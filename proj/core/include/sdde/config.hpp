#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sdde {

/// Effective configuration of one CLI run. Parsed from a flat
/// `key = value` document; defaults depend on the command. to_kv()
/// serializes exactly the keys relevant to the command, and
/// parse_config(to_kv()) reproduces the struct.
struct RunConfig {
    std::string command;

    std::string model = "bounded2d";  // linear1d | additive | bounded2d
    double model_a = -1.0;            // linear1d f(x) = a x
    double model_b = 0.5;             // linear1d sigma(x) = b x + c
    double model_c = 1.0;
    int m = 2;                        // additive dimensions
    int n = 2;
    std::vector<double> model_sigma;  // additive, row-major m x n
    std::vector<double> model_A;      // bounded2d, row-major 2 x 2
    std::vector<double> model_B;

    std::vector<double> c;
    std::vector<double> k;
    double eps = 0.05;
    std::vector<double> eps_list;
    double h_ratio = 100.0;
    double T = 1.0;
    int trials = 200;
    double a = 0.1;
    std::uint64_t seed = 42;
    std::string out;
    std::vector<double> x0;
    double t_minus = 0.0;  // 0 = derive from the delays
    bool emit_noise = true;

    int j = 0, l = 0, p = 0;  // gstat indices

    std::string noise = "ou";  // spectrum input: ou | white
    double tau = 5.0;
    double h = 0.1;  // direct step for spectrum / fig1
    int segments = 100;
    int segment_length = 4096;

    std::vector<double> ratios;  // drift-table

    /// Canonical `key = value` serialization of the relevant keys.
    std::vector<std::pair<std::string, std::string>> to_kv() const;
    std::string to_text() const;
};

/// Parses a flat key-value document, applies per-command defaults, and
/// validates every guard that can be checked before computation.
/// fallback_command fills in when the document has no `command` key; a
/// conflicting pair is rejected.
RunConfig parse_config(const std::string& text, const std::string& fallback_command = "");

/// Guard validation shared by parse_config and the CLI layer.
void validate_config(const RunConfig& config);

const std::vector<std::string>& known_commands();

}  // namespace sdde
