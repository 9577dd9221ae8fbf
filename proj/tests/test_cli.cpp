#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cqed/errors.hpp"
#include "cqed/presets.hpp"
#include "cqed/scenario.hpp"

using namespace cqed;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(CQED_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int st = pclose(pipe);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

fs::path scratch(const std::string& name) {
    const auto d = fs::temp_directory_path() / ("cqed_test_cli_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

fs::path write_config(const fs::path& dir, const std::string& body) {
    const auto p = dir / "config.json";
    std::ofstream(p) << body;
    return p;
}

} // namespace

TEST_CASE("presets match the caption table") {
    std::ifstream f(std::string(CQED_SOURCE_DIR) + "/presets/captions.csv");
    REQUIRE(f.good());
    std::string line;
    std::vector<std::string> header;
    std::vector<std::string> names;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split(line, ',');
        if (header.empty()) {
            header = cells;
            continue;
        }
        REQUIRE(cells.size() == header.size());
        names.push_back(cells[0]);
        CAPTURE(cells[0]);
        const auto c = preset_config(cells[0]);
        CHECK(scenario_kind_name(c.kind) == cells[1]);
        CHECK(c.focus == cells[2]);
        auto params = c.params;
        for (std::size_t k = 3; k <= 11; ++k) {
            CAPTURE(header[k]);
            if (cells[k] == "*") CHECK(c.series.parameter == header[k]);
            else CHECK(param_field(params, header[k]) == std::stod(cells[k]));
        }
        if (cells[12].empty()) {
            CHECK(c.series.parameter.empty());
        } else {
            const auto eq = cells[12].find('=');
            CHECK(c.series.parameter == cells[12].substr(0, eq));
            std::vector<double> vals;
            for (const auto& v : split(cells[12].substr(eq + 1), ';')) vals.push_back(std::stod(v));
            CHECK(c.series.values == vals);
        }
        if (!cells[13].empty()) CHECK(c.pulse.excitation_detuning == std::stod(cells[13]));
        if (!cells[14].empty()) CHECK(c.pulse.duration == doctest::Approx(std::stod(cells[14])).epsilon(1e-15));
        CHECK_NOTHROW(validate_config(c));
    }
    REQUIRE(names.size() == preset_catalog().size());
    for (std::size_t i = 0; i < names.size(); ++i) CHECK(names[i] == preset_catalog()[i].name);
}

TEST_CASE("config text round trip") {
    for (const auto& info : preset_catalog()) {
        auto c = preset_config(info.name);
        c.stem = "x";
        c.oracle_check = true;
        CHECK(config_from_text(config_to_text(c)) == c);
    }
}

TEST_CASE("config errors name the offending key") {
    try {
        config_from_text(R"({"scenario": "fig3b", "params": {"g13": 1}})");
        FAIL("expected ConfigInvalid");
    } catch (const ConfigInvalid& e) {
        CHECK(std::string(e.what()).find("/params/g13: unknown key") != std::string::npos);
    }
    try {
        config_from_text("   ", "empty.json");
        FAIL("expected ConfigInvalid");
    } catch (const ConfigInvalid& e) {
        CHECK(std::string(e.what()) == "empty.json: missing required field 'scenario'");
    }
    CHECK_THROWS_AS(config_from_text(R"({"scenario": "custom"})"), ConfigInvalid);
    CHECK_THROWS_AS(config_from_text(R"({"scenario": "nope"})"), ConfigInvalid);
    CHECK_THROWS_AS(config_from_text(R"({"scenario": "fig3b", "params": {"gamma1": 0}})"), ConfigInvalid);
}

TEST_CASE("list prints the catalog") {
    const auto r = cli("list");
    CHECK(r.code == 0);
    CHECK(split(r.out, '\n').size() == preset_catalog().size() + 1);
}

TEST_CASE("runs are byte-identical") {
    const auto a = scratch("a"), b = scratch("b");
    REQUIRE(cli("run fig3b --out " + a.string()).code == 0);
    REQUIRE(cli("run fig3b --out " + b.string() + " --threads 2").code == 0);
    const auto ta = slurp(a / "fig3b.csv");
    CHECK(!ta.empty());
    CHECK(ta == slurp(b / "fig3b.csv"));
    CHECK(ta.find("p_surv") != std::string::npos);
}

TEST_CASE("gap map carries the optimal gamma2") {
    const auto d = scratch("gap");
    const auto cfg = write_config(d, R"({"scenario": "fig3a", "scan_x": {"min": 0.1, "max": 10, "points": 8},
                                         "scan_y": {"min": 0.1, "max": 10, "points": 6}})");
    REQUIRE(cli("run " + cfg.string() + " --out " + d.string()).code == 0);
    const auto text = slurp(d / "fig3a.csv");
    CHECK(text.find("optimal_gamma2") != std::string::npos);
}

TEST_CASE("exit codes") {
    const auto d = scratch("codes");
    CHECK(cli("run no_such_preset").code == 1);
    CHECK(cli("frobnicate").code == 1);
    const auto bad = write_config(d, R"({"scenario": "fig3b", "tmie": {}})");
    CHECK(cli("validate " + bad.string()).code == 1);
    CHECK(cli("validate fig6a").code == 0);

    // Qubit 2 never decays when it is lossless and uncoupled.
    const auto zero = write_config(d, R"({"scenario": "custom", "kind": "dominance_map",
        "scan_x": {"min": 0, "max": 1, "points": 2}, "scan_y": {"min": 0, "max": 1, "points": 2}})");
    CHECK(cli("run " + zero.string() + " --out " + d.string()).code == 2);

    const auto strict = write_config(d, R"({"scenario": "fig3b", "time": {"min": 0, "max": 2, "points": 5},
        "oracle_tolerance": 1e-12})");
    CHECK(cli("run " + strict.string() + " --oracle-check --out " + d.string()).code == 3);
}
