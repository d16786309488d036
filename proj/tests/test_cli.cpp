#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "quotnef/json_io.hpp"

using namespace quotnef;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the built binary through the shell; stderr is dropped so usage errors
// don't pollute the test log.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(QUOTNEF_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("cone reports the d=2 theorem at g=2") {
    RunResult r = run_cli("cone --g 2 --d 2 --n 2");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("theorem") == "d2-nagata-slope");
    CHECK(j.at("params").at("mu0") == "3/4");
    CHECK(j.at("params").at("t").at("value") == "2");
    // All three cones coincide here.
    CHECK(j.at("exact") == j.at("lower"));
    CHECK(j.at("exact") == j.at("upper"));
    CHECK(j.at("flags").empty());
}

TEST_CASE("cone over P^1 with a split bundle") {
    RunResult r = run_cli("cone --g 0 --splitting -1,2 --d 3");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("theorem") == "genus0-split-bundle");
    Json gens = Json::array({Json::array({"0", "1"}), Json::array({"1", "3"})});
    CHECK(j.at("exact").at("generators") == gens);
    CHECK(j.at("boundary").empty());
    CHECK(j.at("picture").is_null());
    CHECK(j.at("params").at("mu0").is_null());
    CHECK(j.at("params").at("n") == 2);
}

TEST_CASE("plain genus 0 means the trivial bundle") {
    RunResult r = run_cli("cone --g 0 --n 3 --d 4");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("params").at("splitting") == Json::array({0, 0, 0}));
    // a_1 = 0: cone <(1, 3), (0, 1)>.
    Json gens = Json::array({Json::array({"0", "1"}), Json::array({"1", "3"})});
    CHECK(j.at("exact").at("generators") == gens);
}

TEST_CASE("unknown Nagata parameter surfaces as a flag and exit 2") {
    RunResult r = run_cli("cone --g 7 --d 2 --n 3");
    CHECK(r.exit_code == 2);
    Json j = Json::parse(r.out);
    CHECK(j.at("exact").is_null());
    CHECK(j.at("params").at("t").is_null());
    const auto& flags = j.at("flags");
    CHECK(std::find(flags.begin(), flags.end(), Json("t-unknown")) != flags.end());
}

TEST_CASE("open range keeps both bounds and exits 2") {
    // g=5, d=4 >= gon(5)=4, n=4 >= d: full upper bound, no exact statement.
    RunResult r = run_cli("cone --g 5 --d 4 --n 4");
    CHECK(r.exit_code == 2);
    Json j = Json::parse(r.out);
    CHECK(j.at("exact").is_null());
    CHECK(!j.at("upper").is_null());
    CHECK(!j.at("lower").is_null());
    const auto& flags = j.at("flags");
    CHECK(std::find(flags.begin(), flags.end(), Json("weak-upper-no-tilde-delta")) ==
          flags.end());
}

TEST_CASE("reports round-trip through the parser") {
    for (const char* args : {"cone --g 2 --d 2 --n 2", "cone --g 5 --d 4 --n 4",
                             "cone --g 1 --d 4 --n 2", "cone --g 0 --splitting -1,2 --d 3",
                             "cone --g 3 --d 3 --n 3", "cone --g 7 --d 2 --n 3"}) {
        RunResult r = run_cli(args);
        Json j = Json::parse(r.out);
        CHECK(report_to_json(report_from_json(j)) == j);
    }
}

TEST_CASE("check certifies the spec'd verdicts") {
    // kappa_2 at g=3, d=4, n=2.
    RunResult nef = run_cli("check --g 3 --d 4 --n 2 --class \"1;8,-2/3\"");
    CHECK(nef.exit_code == 0);
    Json jn = Json::parse(nef.out);
    CHECK(jn.at("verdict") == "Nef");
    CHECK(jn.at("certificate").at("kind") == "cone-membership");

    // b_class(3) at g=2, d=4, n=4: killed by the full-length partition.
    RunResult bad = run_cli("check --g 2 --d 4 --n 4 --class \"1;3,0\"");
    CHECK(bad.exit_code == 0);
    Json jb = Json::parse(bad.out);
    CHECK(jb.at("verdict") == "NotNef");
    CHECK(jb.at("certificate").at("kind") == "partition-factor");
    CHECK(jb.at("certificate").at("partition") == Json::array({4}));

    // Pure theta_d.
    Json jt = Json::parse(run_cli("check --g 2 --d 4 --n 4 --class \"0;0,1\"").out);
    CHECK(jt.at("verdict") == "Nef");

    // Scaling does not change verdicts.
    Json js = Json::parse(run_cli("check --g 2 --d 4 --n 4 --class \"3;9,0\"").out);
    CHECK(js.at("verdict") == "NotNef");
}

TEST_CASE("check converts --basis coordinates before deciding") {
    Json a = Json::parse(
        run_cli("check --g 2 --d 2 --n 2 --class \"0;1,0\" --basis theta_l0").out);
    CHECK(a.at("class").at("beta").at("basis") == "X_THETA");
    CHECK(a.at("class").at("beta").at("coords") == Json::array({"0", "1"}));
    CHECK(a.at("verdict") == "Nef");
}

TEST_CASE("usage and parse failures exit 1") {
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("cone").exit_code == 1);
    CHECK(run_cli("cone --g 2 --d 2").exit_code == 1);                  // no --n
    CHECK(run_cli("check --g 2 --d 2 --n 2 --class \"zz\"").exit_code == 1);
    CHECK(run_cli("check --g 2 --d 2 --n 2 --class \"1;2\"").exit_code == 1);  // wrong arity
    CHECK(run_cli("cone --g 3 --splitting 1,2 --d 2").exit_code == 1);  // g != 0
    CHECK(run_cli("cone --g 2 --d 2 --n 2 --format svg").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("render output is deterministic and format-complete") {
    RunResult svg1 = run_cli("render --g 3 --d 4 --n 2");
    RunResult svg2 = run_cli("render --g 3 --d 4 --n 2");
    CHECK(svg1.exit_code == 0);
    CHECK(svg1.out == svg2.out);
    CHECK(svg1.out.rfind("<svg ", 0) == 0);
    CHECK(svg1.out.find("tau-rho-discrepancy") != std::string::npos);

    RunResult tikz = run_cli("render --g 2 --d 2 --n 2 --format tikz");
    CHECK(tikz.exit_code == 0);
    CHECK(tikz.out.find("\\begin{tikzpicture}") != std::string::npos);
    CHECK(tikz.out.find("$A = E$") != std::string::npos);

    RunResult table = run_cli("render --g 1 --d 3 --n 2 --format table");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("Delta_d/2 = L_0") != std::string::npos);

    // --out writes the same bytes to a file.
    auto path = temp_file("quotnef_render_test.svg");
    RunResult to_file =
        run_cli("render --g 3 --d 4 --n 2 --out " + path.string());
    CHECK(to_file.exit_code == 0);
    std::ifstream in(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == svg1.out);
    std::filesystem::remove(path);
}

TEST_CASE("render without a picture exits 2") {
    CHECK(run_cli("render --g 2 --d 1 --n 3").exit_code == 2);
    CHECK(run_cli("render --g 0 --n 2 --d 3").exit_code == 2);
}

TEST_CASE("grid emits one JSON line per cell") {
    RunResult r = run_cli("grid --g 1:2 --d 2:3 --n 2");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    long last_g = 0, last_d = 0;
    while (std::getline(lines, line)) {
        Json j = Json::parse(line);
        ++count;
        long g = j.at("params").at("g").get<long>();
        long d = j.at("params").at("d").get<long>();
        // Ordered iteration: g outermost, then d.
        CHECK((g > last_g || (g == last_g && d >= last_d)));
        last_g = g;
        last_d = d;
        CHECK(report_to_json(report_from_json(j)) == j);
    }
    CHECK(count == 4);
}

TEST_CASE("config file and environment drive the Nagata override") {
    auto conf = temp_file("quotnef_cli_test_t7.conf");
    {
        std::ofstream out(conf);
        out << "# test override\n";
        out << "t.7 = \"8/3:conjectural\"\n";
    }
    std::string cfg = " --config " + conf.string();

    Json refused = Json::parse(run_cli("cone --g 7 --d 2 --n 3" + cfg).out);
    const auto& rf = refused.at("flags");
    CHECK(std::find(rf.begin(), rf.end(), Json("conjectural-t-refused")) != rf.end());
    CHECK(refused.at("exact").is_null());

    Json allowed =
        Json::parse(run_cli("cone --g 7 --d 2 --n 3 --allow-conjectural-t" + cfg).out);
    CHECK(allowed.at("params").at("t").at("value") == "8/3");
    CHECK(allowed.at("theorem") == "d2-nagata-slope");
    const auto& af = allowed.at("flags");
    CHECK(std::find(af.begin(), af.end(), Json("conjectural-t")) != af.end());

    // The same settings through the environment give byte-identical output.
    RunResult env = run_cli("cone --g 7 --d 2 --n 3",
                            "QUOTNEF_CONFIG=" + conf.string() +
                                " QUOTNEF_ALLOW_CONJECTURAL_T=1 ");
    CHECK(Json::parse(env.out) == allowed);

    // Built-in values are not shadowed for other genera.
    Json g2 = Json::parse(run_cli("cone --g 2 --d 2 --n 2" + cfg).out);
    CHECK(g2.at("params").at("t").at("provenance") == "known");

    std::filesystem::remove(conf);
}

TEST_CASE("malformed config is a usage error") {
    auto conf = temp_file("quotnef_cli_test_bad.conf");
    {
        std::ofstream out(conf);
        out << "t.7 = \"8/3\"\n";  // missing provenance tag
    }
    CHECK(run_cli("cone --g 7 --d 2 --n 3 --config " + conf.string()).exit_code == 1);
    {
        std::ofstream out(conf);
        out << "mystery_key = 1\n";
    }
    CHECK(run_cli("cone --g 7 --d 2 --n 3 --config " + conf.string()).exit_code == 1);
    std::filesystem::remove(conf);
}

TEST_CASE("table format summarizes the cone report") {
    RunResult r = run_cli("cone --g 2 --d 2 --n 2 --format table");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("d2-nagata-slope") != std::string::npos);
    CHECK(r.out.find("exact") != std::string::npos);
}
