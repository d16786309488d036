#include "quotnef/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quotnef {

std::string tprov_name(TProv p) {
    switch (p) {
        case TProv::Known: return "known";
        case TProv::Conjectural: return "conjectural";
        case TProv::User: return "user";
    }
    throw std::logic_error("tprov_name: unreachable");
}

std::optional<TProv> tprov_from_name(const std::string& s) {
    for (TProv p : {TProv::Known, TProv::Conjectural, TProv::User})
        if (tprov_name(p) == s) return p;
    return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

bool parse_bool(const std::string& raw, const std::string& key) {
    std::string v = raw;
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw std::runtime_error("config: " + key + " wants a boolean, got \"" + raw + "\"");
}

TValue parse_t_value(const std::string& raw, const std::string& key) {
    size_t colon = raw.rfind(':');
    if (colon == std::string::npos)
        throw std::runtime_error("config: " + key +
                                 " needs \"p/q:provenance\", got \"" + raw + "\"");
    std::string prov_str = trim(raw.substr(colon + 1));
    auto prov = tprov_from_name(prov_str);
    if (!prov)
        throw std::runtime_error("config: " + key + " has unknown provenance \"" +
                                 prov_str + "\" (known, conjectural, or user)");
    TValue tv;
    try {
        tv.value = rat_parse(trim(raw.substr(0, colon)));
    } catch (const std::exception& e) {
        throw std::runtime_error("config: " + key + ": " + e.what());
    }
    if (tv.value <= 0)
        throw std::runtime_error("config: " + key + " must be positive");
    tv.prov = *prov;
    return tv;
}

}  // namespace

void apply_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: " + path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string value = unquote(trim(s.substr(eq + 1)));
        if (key == "allow_conjectural_t") {
            cfg.allow_conjectural_t = parse_bool(value, key);
        } else if (key == "format") {
            if (value != "json" && value != "table" && value != "tikz" && value != "svg")
                throw std::runtime_error("config: format must be json, table, tikz, or svg");
            cfg.format = value;
        } else if (key.rfind("t.", 0) == 0) {
            std::string gs = key.substr(2);
            if (gs.empty() || !std::all_of(gs.begin(), gs.end(), [](unsigned char c) {
                    return std::isdigit(c);
                }))
                throw std::runtime_error("config: bad genus in key \"" + key + "\"");
            long g = std::stol(gs);
            cfg.t_overrides[g] = parse_t_value(value, key);
        } else {
            throw std::runtime_error("config: " + path + ":" + std::to_string(lineno) +
                                     ": unknown key \"" + key + "\"");
        }
    }
}

Config load_config(const std::string& cli_config_path) {
    Config cfg;
    std::string path = cli_config_path;
    if (path.empty())
        if (const char* env_path = std::getenv("QUOTNEF_CONFIG"); env_path && *env_path)
            path = env_path;
    if (!path.empty()) apply_config_file(cfg, path);
    if (const char* allow = std::getenv("QUOTNEF_ALLOW_CONJECTURAL_T"); allow && *allow)
        cfg.allow_conjectural_t = parse_bool(allow, "QUOTNEF_ALLOW_CONJECTURAL_T");
    return cfg;
}

TResolution resolve_t(const Config& cfg, long g) {
    TResolution res;
    auto it = cfg.t_overrides.find(g);
    if (it != cfg.t_overrides.end()) {
        if (it->second.prov == TProv::Conjectural && !cfg.allow_conjectural_t) {
            res.flags.push_back("conjectural-t-refused");
        } else {
            res.t = it->second;
            if (it->second.prov == TProv::Conjectural)
                res.flags.push_back("conjectural-t");
            return res;
        }
    }
    res.t = builtin_t(g);
    return res;
}

}  // namespace quotnef
