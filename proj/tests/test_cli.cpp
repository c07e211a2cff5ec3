#include "hhset/cli.hpp"
#include "hhset/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hhset;

namespace {

const std::filesystem::path kConfigs = HHSET_CONFIG_DIR;

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    const auto p = std::filesystem::temp_directory_path() / ("hhset_cli_" + name);
    std::ofstream(p) << text;
    return p;
}

std::size_t count_lines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

const ReportEntry& find(const RunReport& r, const std::string& theorem)
{
    for (const auto& e : r.entries) {
        if (e.theorem == theorem) {
            return e;
        }
    }
    FAIL("missing entry " << theorem);
    return r.entries.front();
}

} // namespace

TEST_CASE("config documents round-trip")
{
    auto cfg = load_config(kConfigs / "default.json");
    CHECK(cfg.families.size() == 1);
    CHECK(cfg.theorems.empty());
    CHECK(parse_config(render_config(cfg)) == cfg);

    cfg = load_config(kConfigs / "search_uncertified.json");
    CHECK(cfg.search.has_value());
    CHECK(parse_config(render_config(cfg)) == cfg);
}

TEST_CASE("malformed configs are rejected")
{
    CHECK_THROWS_AS(parse_config(R"({"families": [{"family": "quadratic"}]})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"domain": {"a": 1, "b": 2}, "families": [{"family": "cube"}]})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"domain": {"a": 1, "b": 2}, "familes": []})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"domain": {"a": 1, "b": 2}, "families": [{"family": "quadratic"}],
                                     "theorems": ["thm99"]})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"domain": {"a": 2, "b": 1}, "families": [{"family": "quadratic"}]})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"domain": {"a": 1, "b": 2}, "mode": "search"})"), ConfigError);
    CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"domain": {"a": 1, "b": 2}, "families": [{"family": "quadratic"}],
                                     "quadrature": {"rule": "composite-simpson", "order": 3}})"),
                    ConfigError);
}

TEST_CASE("bundled default config")
{
    const auto report = run(load_config(kConfigs / "default.json"));
    CHECK(report.summary.total == 13);
    for (const char* id : {"hh_left", "hh_right", "nikodem_left", "nikodem_right"}) {
        const auto& e = find(report, id);
        CHECK(e.report->verdict.holds);
        CHECK(std::abs(e.report->verdict.slack) <= 1e-10);
    }
    // The product inclusions fail at c = 1 on this family.
    CHECK_FALSE(find(report, "thm33").report->verdict.holds);
    CHECK(report.summary.failed == 4);
    CHECK(exit_code(report) == 1);
}

TEST_CASE("core config holds everywhere")
{
    const auto report = run(load_config(kConfigs / "core.json"));
    CHECK(report.summary.held == report.summary.total);
    CHECK(exit_code(report) == 0);
}

TEST_CASE("under-modulus family fails the definition")
{
    const auto cfg = parse_config(R"({
        "domain": {"a": 1, "b": 2}, "c": 1, "theorems": ["def_shc"],
        "families": [{"family": "quadratic", "alpha": 0.5, "beta": 1, "K": 10}]})");
    CHECK(exit_code(run(cfg)) == 1);
}

TEST_CASE("checker errors are counted, not thrown")
{
    const auto cfg = parse_config(R"({
        "domain": {"a": 1, "b": 2}, "theorems": ["thm33", "hh_left"],
        "families": [{"family": "disc", "v": [1, 0], "w": [0, 1], "K": 3, "beta": 1},
                     {"family": "quadratic", "alpha": 1, "beta": 1, "K": 1}]})");
    const auto report = run(cfg);
    CHECK(report.summary.total == 4);
    CHECK(report.summary.errored == 3);
    CHECK(report.summary.held == 1);
    CHECK(exit_code(report) == 2);
}

TEST_CASE("explicit product pairs")
{
    const auto cfg = parse_config(R"({
        "domain": {"a": 1, "b": 2}, "c": 0, "theorems": ["thm35"], "pairs": [[1, 0]],
        "families": [{"family": "quadratic", "alpha": 1, "beta": 1, "K": 10},
                     {"family": "quadratic", "alpha": 2, "beta": 1, "K": 12}]})");
    const auto report = run(cfg);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].family == "1,0");
}

TEST_CASE("machine report round-trips")
{
    for (const char* name : {"core.json", "default.json", "baseline.json"}) {
        const auto report = run(load_config(kConfigs / name));
        const auto text = render_report(report, ReportFormat::json);
        CHECK(parse_report(text) == report);
        CHECK(text.find("\"theorem\"") != std::string::npos);
        CHECK(text.find("\"budget\"") != std::string::npos);
    }
    const auto errs = parse_config(R"({"domain": {"a": 1, "b": 2}, "theorems": ["cor34"],
        "families": [{"family": "disc", "K": 3}]})");
    const auto report = run(errs);
    CHECK(parse_report(render_report(report, ReportFormat::json)) == report);
}

TEST_CASE("text report has one row per theorem")
{
    const auto report = run(load_config(kConfigs / "default.json"));
    const auto text = render_report(report, ReportFormat::text);
    // Header, 13 rows, summary line.
    CHECK(count_lines(text) == 15);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("hh_", 0) == 0) {
            std::istringstream cols(line);
            std::string theorem, family, holds;
            double slack = 1.0;
            cols >> theorem >> family >> holds >> slack;
            CHECK(std::abs(slack) <= 1e-10);
        }
    }
}

TEST_CASE("baseline mode")
{
    const auto report = run(load_config(kConfigs / "baseline.json"));
    REQUIRE(report.entries.size() == 2);
    CHECK(report.entries[0].theorem == "nikodem_left");
    CHECK(exit_code(report) == 0);
}

TEST_CASE("search mode writes runnable counterexamples")
{
    const auto dir = std::filesystem::temp_directory_path() / "hhset_cli_search";
    std::filesystem::create_directories(dir);
    auto cfg = load_config(kConfigs / "search_uncertified.json");
    cfg.search->counterexample_prefix = (dir / "cx_").string();
    const auto report = run(cfg);
    REQUIRE(report.searches.size() == 1);
    const auto& rec = report.searches.front();
    REQUIRE(rec.result.violation_found);
    REQUIRE(rec.counterexample.has_value());
    CHECK(exit_code(report) == 1);
    CHECK(parse_report(render_report(report, ReportFormat::json)) == report);

    const auto replay = run(load_config(*rec.counterexample));
    CHECK(replay.entries.front().report->verdict.slack == rec.result.best_slack);
    std::filesystem::remove_all(dir);
}

TEST_CASE("execute applies overrides and exit codes")
{
    std::ostringstream out;
    std::ostringstream err;
    Overrides o;
    o.format = "text";
    CHECK(execute(kConfigs / "core.json", o, out, err) == 0);
    CHECK(out.str().find("hh_left") != std::string::npos);

    const auto missing = write_temp("nodomain.json", R"({"families": [{"family": "quadratic"}]})");
    err.str("");
    CHECK(execute(missing, {}, out, err) == 2);
    CHECK(err.str().find("domain") != std::string::npos);

    Overrides bad;
    bad.mode = "explore";
    CHECK(execute(kConfigs / "core.json", bad, out, err) == 2);

    Overrides to_file;
    const auto target = std::filesystem::temp_directory_path() / "hhset_cli_report.json";
    to_file.out = target.string();
    to_file.threads = 3;
    CHECK(execute(kConfigs / "default.json", to_file, out, err) == 1);
    std::ifstream in(target);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto parsed = parse_report(ss.str());
    CHECK(parsed.config.threads == 3);
    CHECK(parsed.summary.total == 13);

    Overrides unwritable;
    unwritable.out = "/nonexistent-dir/report.json";
    CHECK(execute(kConfigs / "core.json", unwritable, out, err) == 2);
}
