#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quotnef/symprod.hpp"

namespace quotnef {

// Runtime settings shared by all subcommands. Precedence is CLI flag over
// environment over config file over these defaults; the CLI layer applies
// its flags last.
struct Config {
    bool allow_conjectural_t = false;
    std::map<long, TValue> t_overrides;
    std::string format = "json";
};

std::string tprov_name(TProv p);
std::optional<TProv> tprov_from_name(const std::string& s);

// Parses a flat key = value file. Recognized keys: allow_conjectural_t,
// format, and t.<genus> whose value is "p/q:provenance". Lines starting
// with # and blank lines are skipped. Unknown keys or malformed values
// throw std::runtime_error so typos never pass silently.
void apply_config_file(Config& cfg, const std::string& path);

// Defaults, then the config file (cli_config_path when nonempty, otherwise
// $QUOTNEF_CONFIG), then $QUOTNEF_ALLOW_CONJECTURAL_T (truthy: 1/true/yes/on).
// CLI flags land on top; the caller applies them after this returns.
Config load_config(const std::string& cli_config_path = "");

struct TResolution {
    std::optional<TValue> t;
    std::vector<std::string> flags;
};

// Picks the Nagata parameter for a genus: a user override when present
// (conjectural ones only with the opt-in, otherwise refused and recorded),
// falling back to the built-in table.
TResolution resolve_t(const Config& cfg, long g);

}  // namespace quotnef
