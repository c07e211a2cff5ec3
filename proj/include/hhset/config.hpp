#pragma once

#include "hhset/aumann.hpp"
#include "hhset/explorer.hpp"
#include "hhset/hh_check.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hhset {

enum class RunMode { verify, search, baseline };

std::string to_string(RunMode mode);
RunMode parse_run_mode(const std::string& name);

/// Family descriptor as it appears in config documents. a and b override the
/// run's domain for this family only.
struct FamilySpec {
    FamilyKind family = FamilyKind::quadratic;
    double alpha = 1.0;
    double beta = 1.0;
    double K = 10.0;
    Vec2 v{0.0, 0.0};
    Vec2 w{0.0, 0.0};
    std::optional<double> a;
    std::optional<double> b;
    std::size_t grid_size = kDefaultGridSize;

    bool operator==(const FamilySpec&) const = default;
};

struct DomainSpec {
    double a = 1.0;
    double b = 2.0;
    bool operator==(const DomainSpec&) const = default;
};

struct SearchSection {
    SearchSpace space;
    std::size_t budget = 64;
    /// When set, each violation is written to "<prefix><theorem>.json".
    std::optional<std::string> counterexample_prefix;
    bool operator==(const SearchSection&) const = default;
};

struct RunConfig {
    RunMode mode = RunMode::verify;
    std::vector<FamilySpec> families;
    std::optional<DomainSpec> domain;
    double c = 1.0;
    ConvexityGrid grid;
    QuadratureSpec quadrature;
    /// Empty means every theorem.
    std::vector<TheoremId> theorems;
    double tolerance = 1e-9;
    std::optional<std::string> output;
    std::string format = "json";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    /// (F, G) family indices for thm33 / thm35; defaults to (i, i).
    std::vector<std::array<std::size_t, 2>> pairs;
    std::optional<SearchSection> search;

    bool operator==(const RunConfig&) const = default;
};

/// Checks mode-required fields, indices and numeric ranges. Throws ConfigError.
void validate(const RunConfig& cfg);

/// Parses a config document. Throws ConfigError on malformed input; the
/// result is validated.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);
std::string render_config(const RunConfig& cfg);

/// The domain a family is evaluated on: its own a/b if present, else the run's.
HarmonicDomain family_domain(const RunConfig& cfg, const FamilySpec& spec);
SetValuedFn build_family(const RunConfig& cfg, const FamilySpec& spec);
/// Grid seed and threads come from the run's seed and threads.
CheckRequest check_request(const RunConfig& cfg);

/// Verify-mode config that replays one candidate against one theorem. The
/// config seed is the grid seed of `req`.
RunConfig replay_config(const Candidate& cand, TheoremId id, const CheckRequest& req,
                        std::size_t grid_size);

} // namespace hhset
