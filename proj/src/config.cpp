#include "chlod/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "chlod/domain.hpp"

namespace chlod {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<int> parse_int_list(const std::string& value) {
    std::vector<int> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("config key 'ms': malformed integer '" + item + "'");
        }
    }
    return out;
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("config key '" + key + "': malformed number '" +
                              value + "'");
    }
}

}  // namespace

OperatorKind parse_operator(const std::string& name) {
    if (name == "classical1d") return OperatorKind::Classical1D;
    if (name == "shifted1d") return OperatorKind::Shifted1D;
    if (name == "stancu") return OperatorKind::Stancu;
    if (name == "shifted_stancu") return OperatorKind::ShiftedStancu;
    if (name == "triangle") return OperatorKind::Triangle;
    if (name == "disk_global") return OperatorKind::DiskGlobal;
    if (name == "disk_piecewise") return OperatorKind::DiskPiecewise;
    throw ValidationError(
        "unknown operator '" + name +
        "' (valid: classical1d, shifted1d, stancu, shifted_stancu, triangle, "
        "disk_global, disk_piecewise)");
}

std::string operator_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Classical1D: return "classical1d";
        case OperatorKind::Shifted1D: return "shifted1d";
        case OperatorKind::Stancu: return "stancu";
        case OperatorKind::ShiftedStancu: return "shifted_stancu";
        case OperatorKind::Triangle: return "triangle";
        case OperatorKind::DiskGlobal: return "disk_global";
        case OperatorKind::DiskPiecewise: return "disk_piecewise";
    }
    return "?";
}

bool operator_is_bivariate(OperatorKind kind) {
    return kind != OperatorKind::Classical1D && kind != OperatorKind::Shifted1D;
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    bool has_operator = false;
    bool has_g = false;
    bool has_ms = false;

    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("config line without '=': '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        cfg.echo_lines.push_back(key + "=" + value);

        if (key == "operator") {
            cfg.op = parse_operator(value);
            has_operator = true;
        } else if (key == "b_sequence") {
            cfg.b_sequence = ChlodowskySequence::parse(value);
        } else if (key == "alpha") {
            cfg.alpha = parse_real(key, value);
        } else if (key == "beta") {
            cfg.beta = parse_real(key, value);
        } else if (key == "phi1") {
            cfg.phi1_source = value;
        } else if (key == "phi2") {
            cfg.phi2_source = value;
        } else if (key == "g") {
            cfg.g_source = value;
            has_g = true;
        } else if (key == "scheme") {
            cfg.scheme_name_raw = value;
        } else if (key == "ms") {
            cfg.ms = parse_int_list(value);
            has_ms = true;
        } else if (key == "grid") {
            cfg.grid = static_cast<int>(parse_real(key, value));
        } else if (key == "output") {
            cfg.output = value;
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_real(key, value));
        } else {
            throw ValidationError("unknown config key '" + key + "'");
        }
    }

    if (!has_operator) throw ValidationError("config key 'operator' is required");
    if (!has_g) throw ValidationError("config key 'g' is required");
    if (!has_ms) throw ValidationError("config key 'ms' is required");

    if (!(cfg.alpha < cfg.beta)) {
        throw ValidationError("config requires alpha < beta");
    }
    if (cfg.ms.empty()) {
        throw ValidationError("config key 'ms' must be nonempty");
    }
    for (std::size_t i = 0; i < cfg.ms.size(); ++i) {
        if (cfg.ms[i] < 1) {
            throw ValidationError("config key 'ms': degrees must be >= 1");
        }
        if (i > 0 && cfg.ms[i] <= cfg.ms[i - 1]) {
            throw ValidationError("config key 'ms' must be strictly ascending");
        }
    }
    if (cfg.grid < 2) {
        throw ValidationError("config key 'grid' must be >= 2");
    }
    parse_scheme(cfg.scheme_name_raw);  // validates the name
    cfg.b_sequence.validate();

    try {
        cfg.phi1_expr = expr::parse(cfg.phi1_source, {"x"});
        cfg.phi2_expr = expr::parse(cfg.phi2_source, {"x"});
    } catch (const ParseError& e) {
        throw ValidationError(std::string("boundary curve expression: ") + e.what());
    }
    try {
        if (operator_is_bivariate(cfg.op)) {
            cfg.g_expr = expr::parse(cfg.g_source, {"x", "y"});
        } else {
            cfg.g_expr = expr::parse(cfg.g_source, {"x"});
        }
    } catch (const ParseError& e) {
        throw ValidationError(std::string("config key 'g': ") + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

}  // namespace chlod
