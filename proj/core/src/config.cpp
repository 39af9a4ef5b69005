#include "sdde/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "sdde/errors.hpp"

namespace sdde {

namespace {

const std::vector<std::string> kCommands = {"simulate", "converge",    "falsify", "gstat",
                                            "ydiag",    "spectrum",    "drift-table", "fig1"};

const std::vector<std::string> kKnownKeys = {
    "command", "model",   "model.a",  "model.b",  "model.c", "model.sigma", "model.A", "model.B",
    "m",       "n",       "c",        "k",        "eps",     "eps_list",    "h_ratio", "T",
    "trials",  "a",       "seed",     "out",      "x0",      "t_minus",     "emit_noise",
    "j",       "l",       "p",        "noise",    "tau",     "h",           "segments",
    "segment_length",     "ratios"};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_vector(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_double(v[i]);
    }
    return out;
}

double parse_double_value(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("key '" + key + "': cannot parse '" + value + "' as a number");
    }
}

long long parse_int_value(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("key '" + key + "': cannot parse '" + value + "' as an integer");
    }
}

bool parse_bool_value(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ParseError("key '" + key + "': cannot parse '" + value + "' as a boolean");
}

std::vector<double> parse_vector_value(const std::string& key, std::string value) {
    if (!value.empty() && value.front() == '[' && value.back() == ']')
        value = trim(value.substr(1, value.size() - 2));
    std::vector<double> out;
    if (value.empty()) return out;
    std::string item;
    std::stringstream ss(value);
    while (std::getline(ss, item, ',')) out.push_back(parse_double_value(key, trim(item)));
    return out;
}

using KvMap = std::map<std::string, std::string>;

KvMap defaults_for(const std::string& command) {
    KvMap d;
    d["seed"] = "42";
    if (command == "simulate") {
        d["model"] = "bounded2d";
        d["eps"] = "0.05";
        d["h_ratio"] = "100";
        d["T"] = "10";
        d["t_minus"] = "0";
        d["emit_noise"] = "true";
        d["out"] = "simulate.csv";
    } else if (command == "converge") {
        d["model"] = "bounded2d";
        d["eps_list"] = "0.2, 0.1, 0.05, 0.025";
        d["h_ratio"] = "100";
        d["T"] = "1";
        d["trials"] = "200";
        d["a"] = "0.1";
        d["out"] = "converge.csv";
    } else if (command == "falsify") {
        d["model"] = "bounded2d";
        d["eps_list"] = "0.02";
        d["h_ratio"] = "100";
        d["T"] = "4";
        d["trials"] = "200";
        d["out"] = "falsify.csv";
    } else if (command == "gstat") {
        d["c"] = "1";
        d["k"] = "1, 1.5";
        d["eps_list"] = "0.08, 0.04, 0.02, 0.01";
        d["h_ratio"] = "100";
        d["T"] = "1";
        d["trials"] = "200";
        d["j"] = "0";
        d["l"] = "0";
        d["p"] = "0";
        d["out"] = "gstat.csv";
    } else if (command == "ydiag") {
        d["c"] = "";
        d["k"] = "1";
        d["eps_list"] = "0.1, 0.05, 0.025, 0.0125";
        d["h_ratio"] = "100";
        d["T"] = "1";
        d["trials"] = "200";
        d["out"] = "ydiag.csv";
    } else if (command == "spectrum") {
        d["noise"] = "ou";
        d["tau"] = "5";
        d["h"] = "0.1";
        d["segments"] = "100";
        d["segment_length"] = "4096";
        d["out"] = "spectrum.csv";
    } else if (command == "drift-table") {
        d["ratios"] = "0, 0.5, 1, 2";
        d["out"] = "drift_table.csv";
    } else if (command == "fig1") {
        d["model.a"] = "-1";
        d["model.b"] = "0.5";
        d["model.c"] = "1";
        d["tau"] = "5";
        d["T"] = "50";
        d["h"] = "0.01";
        d["out"] = "fig1.csv";
    }
    return d;
}

std::string repeated(const std::string& value, int count) {
    std::string out;
    for (int i = 0; i < count; ++i) {
        if (i > 0) out += ", ";
        out += value;
    }
    return out;
}

KvMap model_defaults(const std::string& command, const std::string& model, const KvMap& doc) {
    KvMap d;
    int m = 2, n = 2;
    if (model == "linear1d") {
        m = n = 1;
        d["model.a"] = "-1";
        d["model.b"] = "0.5";
        d["model.c"] = "1";
    } else if (model == "bounded2d") {
        d["model.A"] = "0.25, 0.05, -0.05, 0.2";
        d["model.B"] = "0.21, -0.14, 0.105, 0.175";
    } else if (model == "additive") {
        const auto mi = doc.find("m");
        const auto ni = doc.find("n");
        m = mi != doc.end() ? static_cast<int>(parse_int_value("m", mi->second)) : 2;
        n = ni != doc.end() ? static_cast<int>(parse_int_value("n", ni->second)) : 2;
        d["m"] = std::to_string(m);
        d["n"] = std::to_string(n);
        std::vector<double> identity(static_cast<std::size_t>(std::max(m, 0)) * std::max(n, 0), 0.0);
        for (int i = 0; i < std::min(m, n); ++i) identity[static_cast<std::size_t>(i) * n + i] = 1.0;
        d["model.sigma"] = format_vector(identity);
    }
    if (m >= 1 && n >= 1) {
        // Delay coefficients sized to the model. falsify defaults to the
        // ratio c/k = 2, where the exact and Taylor drifts differ clearly;
        // converge defaults to short correlation times so the coupling
        // error decays visibly across the eps schedule.
        d["c"] = repeated(command == "falsify" ? "2" : "1", m);
        d["k"] = repeated(command == "converge" ? "0.2" : "1", n);
        d["x0"] = repeated("0", m);
    }
    return d;
}

void assign(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "command") config.command = value;
    else if (key == "model") config.model = value;
    else if (key == "model.a") config.model_a = parse_double_value(key, value);
    else if (key == "model.b") config.model_b = parse_double_value(key, value);
    else if (key == "model.c") config.model_c = parse_double_value(key, value);
    else if (key == "model.sigma") config.model_sigma = parse_vector_value(key, value);
    else if (key == "model.A") config.model_A = parse_vector_value(key, value);
    else if (key == "model.B") config.model_B = parse_vector_value(key, value);
    else if (key == "m") config.m = static_cast<int>(parse_int_value(key, value));
    else if (key == "n") config.n = static_cast<int>(parse_int_value(key, value));
    else if (key == "c") config.c = parse_vector_value(key, value);
    else if (key == "k") config.k = parse_vector_value(key, value);
    else if (key == "eps") config.eps = parse_double_value(key, value);
    else if (key == "eps_list") config.eps_list = parse_vector_value(key, value);
    else if (key == "h_ratio") config.h_ratio = parse_double_value(key, value);
    else if (key == "T") config.T = parse_double_value(key, value);
    else if (key == "trials") config.trials = static_cast<int>(parse_int_value(key, value));
    else if (key == "a") config.a = parse_double_value(key, value);
    else if (key == "seed") config.seed = static_cast<std::uint64_t>(parse_int_value(key, value));
    else if (key == "out") config.out = value;
    else if (key == "x0") config.x0 = parse_vector_value(key, value);
    else if (key == "t_minus") config.t_minus = parse_double_value(key, value);
    else if (key == "emit_noise") config.emit_noise = parse_bool_value(key, value);
    else if (key == "j") config.j = static_cast<int>(parse_int_value(key, value));
    else if (key == "l") config.l = static_cast<int>(parse_int_value(key, value));
    else if (key == "p") config.p = static_cast<int>(parse_int_value(key, value));
    else if (key == "noise") config.noise = value;
    else if (key == "tau") config.tau = parse_double_value(key, value);
    else if (key == "h") config.h = parse_double_value(key, value);
    else if (key == "segments") config.segments = static_cast<int>(parse_int_value(key, value));
    else if (key == "segment_length")
        config.segment_length = static_cast<int>(parse_int_value(key, value));
    else if (key == "ratios") config.ratios = parse_vector_value(key, value);
    else throw ParseError("unknown key '" + key + "'");
}

std::vector<std::string> relevant_keys(const std::string& command, const std::string& model) {
    std::vector<std::string> keys = {"command", "seed", "out"};
    auto add_model = [&] {
        keys.push_back("model");
        if (model == "linear1d") {
            keys.insert(keys.end(), {"model.a", "model.b", "model.c"});
        } else if (model == "bounded2d") {
            keys.insert(keys.end(), {"model.A", "model.B"});
        } else if (model == "additive") {
            keys.insert(keys.end(), {"m", "n", "model.sigma"});
        }
    };
    if (command == "simulate") {
        add_model();
        keys.insert(keys.end(),
                    {"c", "k", "eps", "h_ratio", "T", "x0", "t_minus", "emit_noise"});
    } else if (command == "converge") {
        add_model();
        keys.insert(keys.end(), {"c", "k", "eps_list", "h_ratio", "T", "trials", "a", "x0"});
    } else if (command == "falsify") {
        add_model();
        keys.insert(keys.end(), {"c", "k", "eps_list", "h_ratio", "T", "trials", "x0"});
    } else if (command == "gstat") {
        keys.insert(keys.end(), {"c", "k", "eps_list", "h_ratio", "T", "trials", "j", "l", "p"});
    } else if (command == "ydiag") {
        keys.insert(keys.end(), {"c", "k", "eps_list", "h_ratio", "T", "trials"});
    } else if (command == "spectrum") {
        keys.insert(keys.end(), {"noise", "tau", "h", "segments", "segment_length"});
    } else if (command == "drift-table") {
        keys.push_back("ratios");
    } else if (command == "fig1") {
        keys.insert(keys.end(), {"model.a", "model.b", "model.c", "tau", "T", "h"});
    }
    return keys;
}

std::string value_of(const RunConfig& c, const std::string& key) {
    if (key == "command") return c.command;
    if (key == "model") return c.model;
    if (key == "model.a") return format_double(c.model_a);
    if (key == "model.b") return format_double(c.model_b);
    if (key == "model.c") return format_double(c.model_c);
    if (key == "model.sigma") return format_vector(c.model_sigma);
    if (key == "model.A") return format_vector(c.model_A);
    if (key == "model.B") return format_vector(c.model_B);
    if (key == "m") return std::to_string(c.m);
    if (key == "n") return std::to_string(c.n);
    if (key == "c") return format_vector(c.c);
    if (key == "k") return format_vector(c.k);
    if (key == "eps") return format_double(c.eps);
    if (key == "eps_list") return format_vector(c.eps_list);
    if (key == "h_ratio") return format_double(c.h_ratio);
    if (key == "T") return format_double(c.T);
    if (key == "trials") return std::to_string(c.trials);
    if (key == "a") return format_double(c.a);
    if (key == "seed") return std::to_string(c.seed);
    if (key == "out") return c.out;
    if (key == "x0") return format_vector(c.x0);
    if (key == "t_minus") return format_double(c.t_minus);
    if (key == "emit_noise") return c.emit_noise ? "true" : "false";
    if (key == "j") return std::to_string(c.j);
    if (key == "l") return std::to_string(c.l);
    if (key == "p") return std::to_string(c.p);
    if (key == "noise") return c.noise;
    if (key == "tau") return format_double(c.tau);
    if (key == "h") return format_double(c.h);
    if (key == "segments") return std::to_string(c.segments);
    if (key == "segment_length") return std::to_string(c.segment_length);
    if (key == "ratios") return format_vector(c.ratios);
    return "";
}

int model_dim_m(const RunConfig& c) {
    if (c.model == "linear1d") return 1;
    if (c.model == "bounded2d") return 2;
    return c.m;
}

int model_dim_n(const RunConfig& c) {
    if (c.model == "linear1d") return 1;
    if (c.model == "bounded2d") return 2;
    return c.n;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ValidationError(message);
}

void check_eps_list(const std::vector<double>& eps_list) {
    require(!eps_list.empty(), "eps_list must not be empty");
    for (double e : eps_list) require(e > 0.0, "eps_list entries must be positive");
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        require(eps_list[i] < eps_list[i - 1], "eps_list must be strictly decreasing");
}

}  // namespace

const std::vector<std::string>& known_commands() { return kCommands; }

std::vector<std::pair<std::string, std::string>> RunConfig::to_kv() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const std::string& key : relevant_keys(command, model))
        out.emplace_back(key, value_of(*this, key));
    return out;
}

std::string RunConfig::to_text() const {
    std::string out;
    for (const auto& [key, value] : to_kv()) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
    return out;
}

RunConfig parse_config(const std::string& text, const std::string& fallback_command) {
    KvMap doc;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty key");
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (doc.count(key))
            throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        doc[key] = value;
    }

    std::string command = fallback_command;
    if (doc.count("command")) {
        if (!fallback_command.empty() && doc["command"] != fallback_command)
            throw ValidationError("config command '" + doc["command"] +
                                  "' conflicts with CLI command '" + fallback_command + "'");
        command = doc["command"];
    }
    require(!command.empty(), "no command given (config key 'command' or CLI subcommand)");
    require(std::find(kCommands.begin(), kCommands.end(), command) != kCommands.end(),
            "unknown command '" + command + "'");

    KvMap effective = defaults_for(command);
    effective["command"] = command;
    const std::string model =
        doc.count("model") ? doc["model"] : (effective.count("model") ? effective["model"] : "");
    if (!model.empty())
        for (auto& [key, value] : model_defaults(command, model, doc)) effective.emplace(key, value);
    for (const auto& [key, value] : doc) effective[key] = value;

    RunConfig config;
    for (const auto& [key, value] : effective) assign(config, key, value);
    validate_config(config);
    return config;
}

void validate_config(const RunConfig& config) {
    require(std::find(kCommands.begin(), kCommands.end(), config.command) != kCommands.end(),
            "unknown command '" + config.command + "'");
    require(!config.out.empty(), "output path must not be empty");

    const bool uses_model = config.command == "simulate" || config.command == "converge" ||
                            config.command == "falsify";
    if (uses_model) {
        require(config.model == "linear1d" || config.model == "additive" ||
                    config.model == "bounded2d",
                "unknown model '" + config.model + "'");
        const int m = model_dim_m(config);
        const int n = model_dim_n(config);
        require(m >= 1 && n >= 1, "model dimensions must be positive");
        if (config.model == "additive")
            require(static_cast<int>(config.model_sigma.size()) == m * n,
                    "DimensionMismatch: model.sigma needs m*n entries");
        if (config.model == "bounded2d") {
            require(config.model_A.size() == 4, "DimensionMismatch: model.A needs 4 entries");
            require(config.model_B.size() == 4, "DimensionMismatch: model.B needs 4 entries");
        }
        require(static_cast<int>(config.c.size()) == m,
                "DimensionMismatch: c vector length != model state dimension m");
        require(static_cast<int>(config.k.size()) == n,
                "DimensionMismatch: k vector length != model noise dimension n");
        for (double ci : config.c) require(ci >= 0.0, "c entries must be nonnegative");
        for (double kj : config.k) require(kj > 0.0, "k entries must be positive");
        require(!config.x0.empty() ? static_cast<int>(config.x0.size()) == m : true,
                "DimensionMismatch: x0 length != model state dimension m");
    }

    if (config.command == "simulate") {
        require(config.eps > 0.0, "eps must be positive");
        require(config.h_ratio >= 10.0, "h_ratio must be >= 10 (integrator guard h <= tau/10)");
        require(config.T > 0.0, "T must be positive");
        if (config.t_minus != 0.0) {
            require(config.t_minus < 0.0, "t_minus must be negative");
            double max_delta = 0.0;
            for (double ci : config.c) max_delta = std::max(max_delta, ci * config.eps);
            require(max_delta < std::abs(config.t_minus) / 2.0,
                    "max delta >= |t_minus|/2: past window too short for the delays");
        }
    }
    if (config.command == "converge" || config.command == "falsify" || config.command == "gstat" ||
        config.command == "ydiag") {
        check_eps_list(config.eps_list);
        require(config.trials >= 1, "trials must be >= 1");
        require(config.h_ratio >= 10.0, "h_ratio must be >= 10 (integrator guard h <= tau/10)");
        require(config.T > 0.0, "T must be positive");
    }
    if (config.command == "converge") require(config.a > 0.0, "threshold a must be positive");
    if (config.command == "gstat") {
        require(!config.k.empty() && !config.c.empty(), "gstat needs c and k vectors");
        for (double kj : config.k) require(kj > 0.0, "k entries must be positive");
        for (double ci : config.c) require(ci >= 0.0, "c entries must be nonnegative");
        require(config.j >= 0 && config.j < static_cast<int>(config.k.size()),
                "index j out of range");
        require(config.l >= 0 && config.l < static_cast<int>(config.k.size()),
                "index l out of range");
        require(config.p >= 0 && config.p < static_cast<int>(config.c.size()),
                "index p out of range");
    }
    if (config.command == "ydiag") {
        require(!config.k.empty(), "ydiag needs a k vector");
        for (double kj : config.k) require(kj > 0.0, "k entries must be positive");
    }
    if (config.command == "spectrum") {
        require(config.noise == "ou" || config.noise == "white",
                "noise must be 'ou' or 'white'");
        require(config.tau > 0.0, "tau must be positive");
        require(config.h > 0.0, "h must be positive");
        require(config.segments >= 1, "segments must be >= 1");
        require(config.segment_length >= 8 &&
                    (config.segment_length & (config.segment_length - 1)) == 0,
                "segment_length must be a power of two >= 8");
    }
    if (config.command == "drift-table") {
        require(!config.ratios.empty(), "ratios must not be empty");
        for (double r : config.ratios) require(r >= 0.0, "ratios must be nonnegative");
    }
    if (config.command == "fig1") {
        require(config.tau > 0.0, "tau must be positive");
        require(config.T > 0.0, "T must be positive");
        require(config.h > 0.0 && config.h <= config.tau / 10.0,
                "h must satisfy the guard h <= tau/10");
    }
}

}  // namespace sdde
