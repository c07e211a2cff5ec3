#pragma once

#include "hhset/config.hpp"
#include "hhset/explorer.hpp"
#include "hhset/hh_check.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hhset {

/// One checker run. Exactly one of report / error is meaningful.
struct ReportEntry {
    std::string theorem;
    /// Family index, "i,j" for an (F, G) pair, or "search".
    std::string family;
    std::optional<TheoremReport> report;
    std::string error;

    bool errored() const { return !report.has_value(); }
    bool operator==(const ReportEntry&) const = default;
};

struct SearchRecord {
    SearchResult result;
    std::optional<std::string> counterexample;
    bool operator==(const SearchRecord&) const = default;
};

struct RunSummary {
    std::size_t total = 0;
    std::size_t held = 0;
    std::size_t failed = 0;
    std::size_t errored = 0;
    bool operator==(const RunSummary&) const = default;
};

struct RunReport {
    RunConfig config;
    std::vector<ReportEntry> entries;
    std::vector<SearchRecord> searches;
    RunSummary summary;
    double wall_seconds = 0.0;

    bool operator==(const RunReport&) const = default;
};

RunSummary summarize(const std::vector<ReportEntry>& entries);

/// 0 when everything held, 1 on a genuine violation, 2 when any entry errored.
int exit_code(const RunReport& report);

/// Runs the config. Checker failures become errored entries; only invalid
/// configs throw (ConfigError).
RunReport run(const RunConfig& cfg);

enum class ReportFormat { json, text };

ReportFormat parse_report_format(const std::string& name);

std::string render_report(const RunReport& report, ReportFormat format);
/// Inverse of render_report(r, ReportFormat::json).
RunReport parse_report(const std::string& text);
/// Throws ConfigError when the file cannot be written.
void write_report(const RunReport& report, ReportFormat format, const std::filesystem::path& path);

/// Command-line values that override config fields.
struct Overrides {
    std::optional<std::string> mode;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<unsigned> threads;
};

/// Loads, overrides, runs and emits. Diagnostics go to err; the report goes to
/// the output path or, without one, to out. Returns the process exit code.
int execute(const std::filesystem::path& config_path, const Overrides& overrides,
            std::ostream& out, std::ostream& err);

} // namespace hhset
