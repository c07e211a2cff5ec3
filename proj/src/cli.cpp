#include "hhset/cli.hpp"

#include "hhset/errors.hpp"
#include "json_io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace hhset {

using detail::json;
using detail::number;

namespace {

json set_json(const ConvexSet& s)
{
    if (const auto* iv = std::get_if<Interval>(&s)) {
        return json::array({iv->lo, iv->hi});
    }
    const auto& sup = std::get<SupportSet>(s);
    json values = json::array();
    for (double h : sup.support()) {
        values.push_back(h);
    }
    return json{{"support", values}};
}

ConvexSet parse_set(const json& j)
{
    if (j.is_array()) {
        if (j.size() != 2) {
            throw ConfigError("interval must be [lo, hi]");
        }
        return Interval(number(j[0]), number(j[1]));
    }
    std::vector<double> values;
    for (const auto& e : j.at("support")) {
        values.push_back(number(e));
    }
    return SupportSet(std::move(values));
}

json map_json(const std::map<std::string, double>& m)
{
    json j = json::object();
    for (const auto& [k, v] : m) {
        j[k] = v;
    }
    return j;
}

std::map<std::string, double> parse_map(const json& j)
{
    std::map<std::string, double> m;
    for (const auto& [k, v] : j.items()) {
        m[k] = number(v);
    }
    return m;
}

void put_verdict(json& j, const InclusionVerdict& v)
{
    j["holds"] = v.holds;
    j["slack"] = v.slack;
    j["tolerance_used"] = v.tolerance_used;
    j["witness"] = v.witness.label();
}

InclusionVerdict parse_verdict(const json& j)
{
    return {j.at("holds").get<bool>(), number(j.at("slack")),
            Witness::parse(j.at("witness").get<std::string>()), number(j.at("tolerance_used"))};
}

json entry_json(const ReportEntry& e)
{
    json j;
    j["theorem"] = e.theorem;
    j["family"] = e.family;
    if (e.errored()) {
        j["error"] = e.error;
        return j;
    }
    const auto& r = *e.report;
    put_verdict(j, r.verdict);
    j["lhs"] = set_json(r.lhs);
    j["rhs"] = set_json(r.rhs);
    j["budget"] = r.error_budget;
    j["subject"] = r.subject;
    if (r.witness) {
        j["triple"] = json::array({r.witness->x, r.witness->y, r.witness->t});
    }
    j["inputs"] = map_json(r.inputs);
    j["diagnostics"] = map_json(r.diagnostics);
    j["alternates"] = json::array();
    for (const auto& a : r.alternates) {
        json aj;
        aj["name"] = a.name;
        put_verdict(aj, a.verdict);
        aj["lhs"] = set_json(a.lhs);
        aj["rhs"] = set_json(a.rhs);
        j["alternates"].push_back(aj);
    }
    j["seconds"] = r.seconds;
    return j;
}

ReportEntry parse_entry(const json& j)
{
    ReportEntry e;
    e.theorem = j.at("theorem").get<std::string>();
    e.family = j.at("family").get<std::string>();
    if (j.contains("error")) {
        e.error = j.at("error").get<std::string>();
        return e;
    }
    TheoremReport r;
    r.theorem = parse_theorem_id(e.theorem);
    r.subject = j.at("subject").get<std::string>();
    r.lhs = parse_set(j.at("lhs"));
    r.rhs = parse_set(j.at("rhs"));
    r.verdict = parse_verdict(j);
    r.error_budget = number(j.at("budget"));
    r.inputs = parse_map(j.at("inputs"));
    r.diagnostics = parse_map(j.at("diagnostics"));
    if (j.contains("triple")) {
        const auto& t = j.at("triple");
        r.witness = Triple{number(t[0]), number(t[1]), number(t[2])};
    }
    for (const auto& aj : j.at("alternates")) {
        r.alternates.push_back({aj.at("name").get<std::string>(), parse_set(aj.at("lhs")),
                                parse_set(aj.at("rhs")), parse_verdict(aj)});
    }
    r.seconds = number(j.at("seconds"));
    e.report = std::move(r);
    return e;
}

json candidate_json(const Candidate& c)
{
    return {{"family", to_string(c.family)},
            {"alpha", c.alpha},
            {"beta", c.beta},
            {"K", c.K},
            {"v", json::array({c.v[0], c.v[1]})},
            {"w", json::array({c.w[0], c.w[1]})},
            {"a", c.a},
            {"b", c.b},
            {"c", c.c}};
}

Candidate parse_candidate(const json& j)
{
    Candidate c;
    c.family = parse_family_kind(j.at("family").get<std::string>());
    c.alpha = number(j.at("alpha"));
    c.beta = number(j.at("beta"));
    c.K = number(j.at("K"));
    c.v = {number(j.at("v")[0]), number(j.at("v")[1])};
    c.w = {number(j.at("w")[0]), number(j.at("w")[1])};
    c.a = number(j.at("a"));
    c.b = number(j.at("b"));
    c.c = number(j.at("c"));
    return c;
}

json search_json(const SearchRecord& s)
{
    const auto& r = s.result;
    json j;
    j["theorem"] = std::string(to_string(r.theorem));
    j["best_config"] = candidate_json(r.best_config);
    j["best_slack"] = r.best_slack;
    j["best_tolerance"] = r.best_tolerance;
    j["evaluations"] = r.evaluations;
    j["seed"] = r.seed;
    j["violation_found"] = r.violation_found;
    j["grid_size"] = r.grid_size;
    if (s.counterexample) {
        j["counterexample"] = *s.counterexample;
    }
    return j;
}

SearchRecord parse_search(const json& j, const RunConfig& cfg)
{
    SearchRecord s;
    auto& r = s.result;
    r.theorem = parse_theorem_id(j.at("theorem").get<std::string>());
    r.best_config = parse_candidate(j.at("best_config"));
    r.best_slack = number(j.at("best_slack"));
    r.best_tolerance = number(j.at("best_tolerance"));
    r.evaluations = j.at("evaluations").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.violation_found = j.at("violation_found").get<bool>();
    r.grid_size = j.at("grid_size").get<std::size_t>();
    // Searches always run with the config's own checker settings.
    r.request = check_request(cfg);
    if (j.contains("counterexample")) {
        s.counterexample = j.at("counterexample").get<std::string>();
    }
    return s;
}

std::string fmt_num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string brief(const ConvexSet& s)
{
    if (const auto* iv = std::get_if<Interval>(&s)) {
        return "[" + fmt_num(iv->lo) + ", " + fmt_num(iv->hi) + "]";
    }
    return "support(" + std::to_string(std::get<SupportSet>(s).grid_size()) + ")";
}

std::string render_text(const RunReport& report)
{
    struct Row {
        std::vector<std::string> cells;
    };
    std::vector<Row> rows;
    rows.push_back({{"theorem", "family", "holds", "slack", "budget", "lhs", "rhs"}});
    for (const auto& e : report.entries) {
        if (e.errored()) {
            rows.push_back({{e.theorem, e.family, "error", "-", "-", e.error, ""}});
            continue;
        }
        const auto& r = *e.report;
        rows.push_back({{e.theorem, e.family, r.verdict.holds ? "yes" : "NO",
                         fmt_num(r.verdict.slack), fmt_num(r.error_budget), brief(r.lhs),
                         brief(r.rhs)}});
    }
    std::vector<std::size_t> width(rows.front().cells.size(), 0);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            width[i] = std::max(width[i], row.cells[i].size());
        }
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            std::string cell = row.cells[i];
            if (i + 1 < row.cells.size()) {
                cell.resize(width[i], ' ');
                cell += "  ";
            }
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out << line << '\n';
    }
    for (const auto& s : report.searches) {
        const auto& r = s.result;
        out << "search " << to_string(r.theorem) << ": best slack " << fmt_num(r.best_slack)
            << " after " << r.evaluations << " evaluations, violation "
            << (r.violation_found ? "found" : "not found");
        if (s.counterexample) {
            out << " (written to " << *s.counterexample << ")";
        }
        out << '\n';
    }
    const auto& m = report.summary;
    out << "total " << m.total << ", held " << m.held << ", failed " << m.failed << ", errored "
        << m.errored << " in " << fmt_num(report.wall_seconds) << " s\n";
    return out.str();
}

ReportEntry run_entry(TheoremId id, std::string family, const std::function<TheoremReport()>& fn)
{
    ReportEntry e;
    e.theorem = std::string(to_string(id));
    e.family = std::move(family);
    try {
        e.report = fn();
    } catch (const Error& ex) {
        e.error = ex.what();
    }
    return e;
}

std::vector<TheoremId> theorem_list(const RunConfig& cfg)
{
    if (cfg.theorems.empty()) {
        return {kAllTheorems.begin(), kAllTheorems.end()};
    }
    return cfg.theorems;
}

void run_verify(const RunConfig& cfg, RunReport& report)
{
    const auto req = check_request(cfg);
    std::vector<std::optional<SetValuedFn>> fams;
    std::vector<std::string> build_errors;
    for (const auto& spec : cfg.families) {
        try {
            fams.emplace_back(build_family(cfg, spec));
            build_errors.emplace_back();
        } catch (const Error& ex) {
            fams.emplace_back();
            build_errors.emplace_back(ex.what());
        }
    }
    const auto errored = [&](TheoremId id, std::string label, const std::string& what) {
        ReportEntry e;
        e.theorem = std::string(to_string(id));
        e.family = std::move(label);
        e.error = what;
        report.entries.push_back(std::move(e));
    };
    for (auto id : theorem_list(cfg)) {
        const bool paired = id == TheoremId::thm33 || id == TheoremId::thm35;
        std::vector<std::array<std::size_t, 2>> targets;
        if (paired && !cfg.pairs.empty()) {
            targets = cfg.pairs;
        } else {
            for (std::size_t i = 0; i < fams.size(); ++i) {
                targets.push_back({i, i});
            }
        }
        for (const auto& [i, j] : targets) {
            std::string label = std::to_string(i);
            if (paired && !cfg.pairs.empty()) {
                label += "," + std::to_string(j);
            }
            if (!fams[i] || !fams[j]) {
                errored(id, label, !fams[i] ? build_errors[i] : build_errors[j]);
                continue;
            }
            const auto& f = *fams[i];
            const auto& g = *fams[j];
            report.entries.push_back(
                run_entry(id, label, [&] { return run_theorem(id, f, g, req); }));
        }
    }
}

void run_baseline(const RunConfig& cfg, RunReport& report)
{
    const auto req = check_request(cfg);
    for (std::size_t i = 0; i < cfg.families.size(); ++i) {
        const std::string label = std::to_string(i);
        try {
            const auto g = reciprocal_transform(build_family(cfg, cfg.families[i]));
            auto [left, right] = check_nikodem(g, cfg.c, req.quadrature, req.options);
            report.entries.push_back({"nikodem_left", label, std::move(left), ""});
            report.entries.push_back({"nikodem_right", label, std::move(right), ""});
        } catch (const Error& ex) {
            report.entries.push_back({"nikodem_left", label, std::nullopt, ex.what()});
            report.entries.push_back({"nikodem_right", label, std::nullopt, ex.what()});
        }
    }
}

void run_search(const RunConfig& cfg, RunReport& report)
{
    const auto req = check_request(cfg);
    const auto& section = *cfg.search;
    for (auto id : theorem_list(cfg)) {
        SearchRecord rec;
        try {
            rec.result = min_slack_search(section.space, id, section.budget, cfg.seed, req);
        } catch (const Error& ex) {
            report.entries.push_back({std::string(to_string(id)), "search", std::nullopt, ex.what()});
            continue;
        }
        const auto& res = rec.result;
        report.entries.push_back(run_entry(id, "search", [&] {
            return evaluate_candidate(res.best_config, id, req, res.grid_size);
        }));
        if (res.violation_found && section.counterexample_prefix) {
            const std::string path = *section.counterexample_prefix + std::string(to_string(id)) + ".json";
            emit_counterexample(res, path);
            rec.counterexample = path;
        }
        report.searches.push_back(std::move(rec));
    }
}

} // namespace

RunSummary summarize(const std::vector<ReportEntry>& entries)
{
    RunSummary s;
    s.total = entries.size();
    for (const auto& e : entries) {
        if (e.errored()) {
            ++s.errored;
        } else if (e.report->verdict.holds) {
            ++s.held;
        } else {
            ++s.failed;
        }
    }
    return s;
}

int exit_code(const RunReport& report)
{
    if (report.summary.errored > 0) {
        return 2;
    }
    return report.summary.failed > 0 ? 1 : 0;
}

RunReport run(const RunConfig& cfg)
{
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.config = cfg;
    switch (cfg.mode) {
    case RunMode::verify: run_verify(cfg, report); break;
    case RunMode::baseline: run_baseline(cfg, report); break;
    case RunMode::search: run_search(cfg, report); break;
    }
    report.summary = summarize(report.entries);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

ReportFormat parse_report_format(const std::string& name)
{
    if (name == "json") {
        return ReportFormat::json;
    }
    if (name == "text") {
        return ReportFormat::text;
    }
    throw ConfigError("format must be json or text (got '" + name + "')");
}

std::string render_report(const RunReport& report, ReportFormat format)
{
    if (format == ReportFormat::text) {
        return render_text(report);
    }
    json j;
    j["config"] = json::parse(render_config(report.config));
    j["entries"] = json::array();
    for (const auto& e : report.entries) {
        j["entries"].push_back(entry_json(e));
    }
    if (!report.searches.empty()) {
        j["searches"] = json::array();
        for (const auto& s : report.searches) {
            j["searches"].push_back(search_json(s));
        }
    }
    const auto& m = report.summary;
    j["summary"] = {{"total", m.total}, {"held", m.held}, {"failed", m.failed}, {"errored", m.errored}};
    j["wall_seconds"] = report.wall_seconds;
    return detail::dump(j) + "\n";
}

RunReport parse_report(const std::string& text)
{
    try {
        const auto j = json::parse(text);
        RunReport r;
        r.config = parse_config(detail::dump(j.at("config")));
        for (const auto& e : j.at("entries")) {
            r.entries.push_back(parse_entry(e));
        }
        if (j.contains("searches")) {
            for (const auto& s : j.at("searches")) {
                r.searches.push_back(parse_search(s, r.config));
            }
        }
        const auto& m = j.at("summary");
        r.summary = {m.at("total").get<std::size_t>(), m.at("held").get<std::size_t>(),
                     m.at("failed").get<std::size_t>(), m.at("errored").get<std::size_t>()};
        r.wall_seconds = number(j.at("wall_seconds"));
        return r;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed report: ") + e.what());
    }
}

void write_report(const RunReport& report, ReportFormat format, const std::filesystem::path& path)
{
    std::ofstream out(path);
    out << render_report(report, format);
    if (!out) {
        throw ConfigError("cannot write report to " + path.string());
    }
}

int execute(const std::filesystem::path& config_path, const Overrides& overrides,
            std::ostream& out, std::ostream& err)
{
    try {
        RunConfig cfg = load_config(config_path);
        if (overrides.mode) {
            cfg.mode = parse_run_mode(*overrides.mode);
        }
        if (overrides.format) {
            cfg.format = *overrides.format;
        }
        if (overrides.out) {
            cfg.output = *overrides.out;
        }
        if (overrides.seed) {
            cfg.seed = *overrides.seed;
            cfg.grid.seed = *overrides.seed;
        }
        if (overrides.tol) {
            cfg.tolerance = *overrides.tol;
        }
        if (overrides.threads) {
            cfg.threads = *overrides.threads;
        }
        validate(cfg);
        const auto report = run(cfg);
        const auto format = parse_report_format(cfg.format);
        if (cfg.output) {
            write_report(report, format, *cfg.output);
        } else {
            out << render_report(report, format);
        }
        for (const auto& e : report.entries) {
            if (e.errored()) {
                err << "error: " << e.theorem << " (family " << e.family << "): " << e.error << '\n';
            }
        }
        return exit_code(report);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace hhset
