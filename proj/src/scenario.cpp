#include "relaysched/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace relaysched {

const char* to_string(RelayStrategy s) {
    switch (s) {
        case RelayStrategy::Af: return "af";
        case RelayStrategy::DfXor: return "df-xor";
        case RelayStrategy::DfSup: return "df-sup";
    }
    return "?";
}

const char* to_string(GeometryMode m) {
    return m == GeometryMode::Cell ? "cell" : "normalized-plane";
}

RelayStrategy parse_relay_strategy(const std::string& s) {
    if (s == "af") return RelayStrategy::Af;
    if (s == "df-xor" || s == "xor") return RelayStrategy::DfXor;
    if (s == "df-sup" || s == "sup") return RelayStrategy::DfSup;
    throw std::invalid_argument("unknown relay strategy: " + s);
}

void ScenarioConfig::set_bs_power_db(double bs_db) {
    power_bs_db = bs_db;
    power_rs_db = bs_db - 3.0;
    power_ms_db = bs_db - 5.0;
}

void ScenarioConfig::validate() const {
    if (num_ms < 1) throw std::invalid_argument("num_ms must be >= 1");
    if (num_rs < 0) throw std::invalid_argument("num_rs must be >= 0");
    if (num_subcarriers < 1) throw std::invalid_argument("num_subcarriers must be >= 1");
    if (cell_radius <= 0.0) throw std::invalid_argument("cell_radius must be positive");
    if (rs_circle_ratio < 0.0 || rs_circle_ratio > 1.0)
        throw std::invalid_argument("rs_circle_ratio must lie in [0,1]");
    if (path_loss_exponent <= 0.0) throw std::invalid_argument("path_loss_exponent must be positive");
    if (shadowing_sigma_db < 0.0) throw std::invalid_argument("shadowing_sigma_db must be >= 0");
    if (max_delay_spread_s < 0.0) throw std::invalid_argument("max_delay_spread must be >= 0");
    if (num_taps < 1) throw std::invalid_argument("num_taps must be >= 1");
    if (path_loss_ref_gain <= 0.0) throw std::invalid_argument("path_loss_ref_gain must be positive");
    if (path_loss_max_gain <= 0.0) throw std::invalid_argument("path_loss_max_gain must be positive");
    if (xi < 0.0 || xi > 1.0) throw std::invalid_argument("xi must lie in [0,1]");
    if (theta < 0.0 || theta > 1.0) throw std::invalid_argument("theta must lie in [0,1]");
    if (exact_vertex_cap < 1) throw std::invalid_argument("exact_vertex_cap must be >= 1");
    if (geometry_mode == GeometryMode::NormalizedPlane) {
        if (static_cast<int>(fixed_rs_positions.size()) != num_rs)
            throw std::invalid_argument("normalized-plane mode needs num_rs RS positions");
        if (static_cast<int>(fixed_ms_positions.size()) != num_ms)
            throw std::invalid_argument("normalized-plane mode needs num_ms MS positions");
    }
}

ScenarioConfig ScenarioConfig::toy_example() {
    ScenarioConfig cfg;
    cfg.num_ms = 1;
    cfg.num_rs = 2;
    cfg.num_subcarriers = 4;
    cfg.cell_radius = 10.0;
    cfg.relay_strategy = RelayStrategy::DfXor;
    cfg.set_bs_power_db(10.0);
    // Power-law reference at plane distance 2: a link of plane length L has
    // mean gain (L/2)^-4, which puts the walkthrough weights in the
    // 0.01..0.2 bits/s/Hz range.
    cfg.path_loss_ref_distance = 2.0;
    cfg.geometry_mode = GeometryMode::NormalizedPlane;
    cfg.bs_position = {0.0, 0.0};
    cfg.fixed_rs_positions = {{4.0, 3.0}, {4.0, -3.0}};
    cfg.fixed_ms_positions = {{10.0, 0.0}};
    return cfg;
}

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<Vec2> parse_positions(const std::string& value) {
    // "x,y; x,y; ..."
    std::vector<Vec2> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        Vec2 p;
        char comma = 0;
        std::stringstream ps(item);
        if (!(ps >> p.x >> comma >> p.y) || comma != ',')
            throw std::invalid_argument("bad position: '" + item + "'");
        out.push_back(p);
    }
    return out;
}

}  // namespace

ScenarioConfig ScenarioConfig::from_string(const std::string& text) {
    ScenarioConfig cfg;
    bool have_rs_power = false;
    bool have_ms_power = false;

    std::stringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        auto as_double = [&] {
            std::size_t pos = 0;
            double v = std::stod(value, &pos);
            if (pos != value.size())
                throw std::invalid_argument("bad number for " + key + ": '" + value + "'");
            return v;
        };
        auto as_int = [&] { return static_cast<int>(as_double()); };

        if (key == "num_ms") cfg.num_ms = as_int();
        else if (key == "num_rs") cfg.num_rs = as_int();
        else if (key == "num_subcarriers") cfg.num_subcarriers = as_int();
        else if (key == "cell_radius") cfg.cell_radius = as_double();
        else if (key == "rs_circle_ratio") cfg.rs_circle_ratio = as_double();
        else if (key == "path_loss_exponent") cfg.path_loss_exponent = as_double();
        else if (key == "shadowing_sigma_db") cfg.shadowing_sigma_db = as_double();
        else if (key == "path_loss_ref_distance") cfg.path_loss_ref_distance = as_double();
        else if (key == "path_loss_ref_gain") cfg.path_loss_ref_gain = as_double();
        else if (key == "path_loss_max_gain") cfg.path_loss_max_gain = as_double();
        else if (key == "max_delay_spread") cfg.max_delay_spread_s = as_double();
        else if (key == "subcarrier_spacing_hz") cfg.subcarrier_spacing_hz = as_double();
        else if (key == "num_taps") cfg.num_taps = as_int();
        else if (key == "power_bs_db") cfg.power_bs_db = as_double();
        else if (key == "power_rs_db") { cfg.power_rs_db = as_double(); have_rs_power = true; }
        else if (key == "power_ms_db") { cfg.power_ms_db = as_double(); have_ms_power = true; }
        else if (key == "relay_strategy") cfg.relay_strategy = parse_relay_strategy(value);
        else if (key == "xi") cfg.xi = as_double();
        else if (key == "theta") cfg.theta = as_double();
        else if (key == "rng_seed") cfg.rng_seed = static_cast<std::uint64_t>(std::stoull(value));
        else if (key == "twoway_balance_band_db") cfg.twoway_balance_band_db = as_double();
        else if (key == "exact_vertex_cap") cfg.exact_vertex_cap = as_int();
        else if (key == "geometry_mode") {
            if (value == "cell") cfg.geometry_mode = GeometryMode::Cell;
            else if (value == "normalized-plane") cfg.geometry_mode = GeometryMode::NormalizedPlane;
            else throw std::invalid_argument("unknown geometry_mode: " + value);
        } else if (key == "bs_position") {
            auto p = parse_positions(value);
            if (p.size() != 1) throw std::invalid_argument("bs_position needs one point");
            cfg.bs_position = p[0];
        } else if (key == "rs_positions") cfg.fixed_rs_positions = parse_positions(value);
        else if (key == "ms_positions") cfg.fixed_ms_positions = parse_positions(value);
        else throw std::invalid_argument("unknown config key: " + key);
    }

    // RS/MS powers follow the BS power with the default 3/5 dB offsets
    // unless set explicitly.
    if (!have_rs_power) cfg.power_rs_db = cfg.power_bs_db - 3.0;
    if (!have_ms_power) cfg.power_ms_db = cfg.power_bs_db - 5.0;

    cfg.validate();
    return cfg;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

}  // namespace relaysched
