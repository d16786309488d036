#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quotnef/config.hpp"
#include "quotnef/json_io.hpp"
#include "quotnef/render.hpp"

using namespace quotnef;

namespace {

struct CellOpts {
    long g = -1;
    long d = -1;
    long n = -1;
    std::string splitting;
};

std::vector<long> parse_splitting(const std::string& s) {
    std::vector<long> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::runtime_error("bad splitting entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::runtime_error("empty splitting");
    return out;
}

struct BuiltParams {
    CurveParams p;
    std::vector<std::string> flags;
};

BuiltParams build_params(const Config& cfg, CellOpts o) {
    std::vector<long> split;
    if (!o.splitting.empty()) {
        split = parse_splitting(o.splitting);
        if (o.g > 0) throw std::runtime_error("--splitting implies genus 0");
        o.g = 0;
        if (o.n >= 0 && o.n != static_cast<long>(split.size()))
            throw std::runtime_error("--n disagrees with the splitting length");
        o.n = static_cast<long>(split.size());
    }
    if (o.g < 0) throw std::runtime_error("missing --g (or --splitting)");
    if (o.d < 1) throw std::runtime_error("missing or invalid --d");
    if (o.g == 0 && split.empty()) {
        if (o.n < 1) throw std::runtime_error("genus 0 needs --splitting or --n");
        split.assign(static_cast<size_t>(o.n), 0);  // the trivial bundle O^n
    }
    if (o.n < 1) throw std::runtime_error("missing or invalid --n");

    BuiltParams bp;
    bp.p.g = o.g;
    bp.p.d = o.d;
    bp.p.n = o.n;
    bp.p.very_general = (o.g >= 2);
    if (o.g == 0) {
        std::sort(split.begin(), split.end());
        bp.p.splitting = split;
    } else {
        TResolution tr = resolve_t(cfg, o.g);
        bp.p.t = tr.t;
        bp.flags = tr.flags;
    }
    validate_params(bp.p);
    return bp;
}

std::string cone_text(const std::string& label, const std::optional<Cone>& c) {
    std::string out = label + ":";
    if (!c) return out + " none\n";
    out += "\n";
    for (const RatVec& g : c->generators()) {
        out += "  (";
        for (size_t i = 0; i < g.size(); ++i)
            out += (i ? ", " : "") + rat_str(g[i]);
        out += ")\n";
    }
    return out;
}

int report_exit_code(const ReportData& r) {
    bool weak = std::find(r.flags.begin(), r.flags.end(), "weak-upper-no-tilde-delta") !=
                r.flags.end();
    return (!r.exact || !r.upper || weak) ? 2 : 0;
}

int run_cone(const Config& cfg, const CellOpts& cell) {
    BuiltParams bp = build_params(cfg, cell);
    ReportData r = make_report(bp.p, bp.flags);
    if (cfg.format == "table") {
        std::cout << "Q(E, d): g=" << bp.p.g << " d=" << bp.p.d << " n=" << bp.p.n
                  << "  gonality=" << gonality(bp.p.g) << "\n";
        std::cout << cone_text("exact" + (r.theorem ? " [" + *r.theorem + "]" : ""),
                               r.exact);
        std::cout << cone_text("lower", r.lower);
        std::cout << cone_text("upper", r.upper);
        std::cout << "flags:";
        for (const std::string& f : r.flags) std::cout << " " << f;
        std::cout << "\n";
    } else if (cfg.format == "json") {
        std::cout << report_to_json(r).dump(2) << "\n";
    } else {
        throw std::runtime_error("cone emits json or table, not " + cfg.format);
    }
    return report_exit_code(r);
}

int run_check(const Config& cfg, const CellOpts& cell, const std::string& wire,
              std::string basis_tag) {
    BuiltParams bp = build_params(cfg, cell);
    size_t semi = wire.find(';');
    if (semi == std::string::npos)
        throw std::runtime_error("class syntax is \"a;bx,btheta\"");
    Rat a = rat_parse(wire.substr(0, semi));
    RatVec coords;
    std::stringstream rest(wire.substr(semi + 1));
    std::string item;
    while (std::getline(rest, item, ',')) coords.push_back(rat_parse(item));
    if (coords.size() != static_cast<size_t>(sym_dim(bp.p)))
        throw std::runtime_error("class has " + std::to_string(coords.size()) +
                                 " pullback coordinates, expected " +
                                 std::to_string(sym_dim(bp.p)));
    std::transform(basis_tag.begin(), basis_tag.end(), basis_tag.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    auto basis = basis_from_name(basis_tag);
    if (!basis) throw std::runtime_error("unknown basis tag " + basis_tag);
    DivClassQuot cls = quot_class(bp.p, a, sym_class(bp.p, *basis, coords));
    NefVerdict v = check_nef(cls);
    if (cfg.format == "table") {
        std::cout << nefness_name(v.verdict) << ": " << v.cert.detail << "\n";
    } else if (cfg.format == "json") {
        std::cout << verdict_to_json(bp.p, cls, v, bp.flags).dump(2) << "\n";
    } else {
        throw std::runtime_error("check emits json or table, not " + cfg.format);
    }
    return 0;
}

int run_render(const Config& cfg, const CellOpts& cell, const std::string& out_path) {
    BuiltParams bp = build_params(cfg, cell);
    std::string format = cfg.format;
    if (format != "svg" && format != "tikz" && format != "table") format = "svg";
    std::string text;
    try {
        if (format == "svg")
            text = render_svg(bp.p);
        else if (format == "tikz")
            text = render_tikz(bp.p);
        else
            text = render_table(bp.p);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << text;
        if (!out) throw std::runtime_error("write failed for " + out_path);
    }
    return 0;
}

std::pair<long, long> parse_range(const std::string& s, const std::string& name) {
    size_t colon = s.find(':');
    auto to_long = [&](const std::string& part) {
        size_t used = 0;
        long v = std::stol(part, &used);
        if (used != part.size()) throw std::runtime_error("bad " + name + " range: " + s);
        return v;
    };
    long lo = to_long(colon == std::string::npos ? s : s.substr(0, colon));
    long hi = colon == std::string::npos ? lo : to_long(s.substr(colon + 1));
    if (lo > hi) throw std::runtime_error(name + " range has lo > hi: " + s);
    return {lo, hi};
}

int run_grid(const Config& cfg, const std::string& gr, const std::string& dr,
             const std::string& nr) {
    auto [g_lo, g_hi] = parse_range(gr, "--g");
    auto [d_lo, d_hi] = parse_range(dr, "--d");
    auto [n_lo, n_hi] = parse_range(nr, "--n");
    if (g_lo < 0 || d_lo < 1 || n_lo < 1) throw std::runtime_error("grid range out of domain");
    for (long g = g_lo; g <= g_hi; ++g)
        for (long d = d_lo; d <= d_hi; ++d)
            for (long n = n_lo; n <= n_hi; ++n) {
                CellOpts cell;
                cell.g = g;
                cell.d = d;
                cell.n = n;
                BuiltParams bp = build_params(cfg, cell);
                std::cout << report_to_json(make_report(bp.p, bp.flags)).dump() << "\n";
            }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quotnef: nef cones of Quot schemes of torsion quotients on curves"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_path;
    std::string format_flag;
    bool allow_conj = false;
    app.add_option("--config", config_path, "key = value config file");
    app.add_flag("--allow-conjectural-t", allow_conj,
                 "accept conjectural Nagata-parameter overrides");
    app.add_option("--format", format_flag, "json | table | tikz | svg");

    CellOpts cell;
    auto add_cell = [&cell](CLI::App* cmd, bool with_splitting) {
        cmd->add_option("--g", cell.g, "genus of the curve");
        cmd->add_option("--d", cell.d, "length of the torsion quotients");
        cmd->add_option("--n", cell.n, "rank of the bundle E");
        if (with_splitting)
            cmd->add_option("--splitting", cell.splitting,
                            "degrees a1,a2,... of E over P^1 (implies --g 0)");
    };

    CLI::App* cone_cmd = app.add_subcommand("cone", "nef-cone bounds for one parameter cell");
    add_cell(cone_cmd, true);

    CLI::App* check_cmd = app.add_subcommand("check", "nefness verdict for one divisor class");
    add_cell(check_cmd, true);
    std::string wire, basis_tag = "X_THETA";
    check_cmd->add_option("--class", wire, "divisor class \"a;bx,btheta\"")->required();
    check_cmd->add_option("--basis", basis_tag,
                          "coordinate basis of the pullback part (default X_THETA)");

    CLI::App* render_cmd = app.add_subcommand("render", "cross-section figure (svg, tikz, table)");
    add_cell(render_cmd, true);
    std::string out_path;
    render_cmd->add_option("--out", out_path, "output file (stdout when absent)");

    CLI::App* grid_cmd = app.add_subcommand("grid", "reports over ranges, one JSON line per cell");
    std::string g_range, d_range, n_range;
    grid_cmd->add_option("--g", g_range, "genus range lo[:hi]")->required();
    grid_cmd->add_option("--d", d_range, "length range lo[:hi]")->required();
    grid_cmd->add_option("--n", n_range, "rank range lo[:hi]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        Config cfg = load_config(config_path);
        if (allow_conj) cfg.allow_conjectural_t = true;
        if (!format_flag.empty()) {
            if (format_flag != "json" && format_flag != "table" && format_flag != "tikz" &&
                format_flag != "svg")
                throw std::runtime_error("unknown format " + format_flag);
            cfg.format = format_flag;
        }
        if (cone_cmd->parsed()) return run_cone(cfg, cell);
        if (check_cmd->parsed()) return run_check(cfg, cell, wire, basis_tag);
        if (render_cmd->parsed()) return run_render(cfg, cell, out_path);
        if (grid_cmd->parsed()) return run_grid(cfg, g_range, d_range, n_range);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
