#pragma once

#include "hhset/hh_check.hpp"
#include "hhset/svf.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace hhset {

enum class FamilyKind { quadratic, disc };

std::string to_string(FamilyKind kind);
/// "quadratic" or "disc"; throws ConfigError otherwise.
FamilyKind parse_family_kind(const std::string& name);

/// One point of a search space: family parameters, domain and modulus.
struct Candidate {
    FamilyKind family = FamilyKind::quadratic;
    double alpha = 1.0;
    double beta = 1.0;
    double K = 10.0;
    Vec2 v{0.0, 0.0};
    Vec2 w{0.0, 0.0};
    double a = 1.0;
    double b = 2.0;
    double c = 1.0;

    auto operator<=>(const Candidate&) const = default;
};

/// Builds the map described by the candidate's family fields on [a, b].
SetValuedFn build_family(const Candidate& cand, std::size_t grid_size = kDefaultGridSize);

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    bool operator==(const Range&) const = default;
};

struct SearchSpace {
    FamilyKind family = FamilyKind::quadratic;
    Range alpha{1.0, 1.0};
    Range beta{1.0, 1.0};
    Range K{10.0, 10.0};
    Range vx{0.0, 0.0};
    Range vy{0.0, 0.0};
    Range wx{0.0, 0.0};
    Range wy{0.0, 0.0};
    Range a{1.0, 1.0};
    Range b{2.0, 2.0};
    Range c{1.0, 1.0};
    /// Keep only candidates whose certificate covers c (c <= min(alpha, beta),
    /// or c <= beta for discs).
    bool certified_only = false;
    std::size_t grid_size = kDefaultGridSize;

    /// Throws ParameterError on a reversed or non-finite range.
    void validate() const;
    bool operator==(const SearchSpace&) const = default;
};

/// Family feasibility, 0 < a < b, c > 0, plus the certificate filter when set.
bool is_admissible(const SearchSpace& space, const Candidate& cand);

struct SearchResult {
    Candidate best_config;
    double best_slack = 0.0;
    /// tolerance_used of the best configuration's verdict.
    double best_tolerance = 0.0;
    TheoremId theorem = TheoremId::def_shc;
    std::size_t evaluations = 0;
    std::uint64_t seed = 0;
    bool violation_found = false;
    /// Checker settings every evaluation ran with (c comes from the candidate).
    CheckRequest request;
    std::size_t grid_size = kDefaultGridSize;

    bool operator==(const SearchResult&) const = default;
};

/// Runs the theorem's checker on one candidate with F = G.
TheoremReport evaluate_candidate(const Candidate& cand, TheoremId id, const CheckRequest& req,
                                 std::size_t grid_size = kDefaultGridSize);

/// Latin-hypercube sampling of the space (infeasible draws rejected) followed by
/// three rounds of coordinate descent around the best sample. The objective is
/// the verdict margin slack + tolerance_used; ties break on slack, then on the
/// candidate's field order. `budget` caps checker evaluations. Candidates whose
/// checker throws count as infeasible. Throws EmptySearchSpace when nothing is
/// feasible.
SearchResult min_slack_search(const SearchSpace& space, TheoremId id, std::size_t budget,
                              std::uint64_t seed, const CheckRequest& req = {});

/// Writes a verify-mode config reproducing the violation. Throws ParameterError
/// when the result holds and ConfigError when the file cannot be written.
void emit_counterexample(const SearchResult& result, const std::filesystem::path& path);

} // namespace hhset
