#pragma once

#include "hhset/aumann.hpp"
#include "hhset/set_core.hpp"
#include "hhset/svf.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hhset {

enum class TheoremId {
    def_shc,
    def_mid,
    lemma_i,
    lemma_ii,
    prop_31,
    nikodem_left,
    nikodem_right,
    hh_left,
    hh_right,
    thm33,
    cor34,
    thm35,
    cor36,
};

inline constexpr std::array<TheoremId, 13> kAllTheorems = {
    TheoremId::def_shc,      TheoremId::def_mid,       TheoremId::lemma_i,
    TheoremId::lemma_ii,     TheoremId::prop_31,       TheoremId::nikodem_left,
    TheoremId::nikodem_right, TheoremId::hh_left,      TheoremId::hh_right,
    TheoremId::thm33,        TheoremId::cor34,         TheoremId::thm35,
    TheoremId::cor36,
};

/// Stable API names, e.g. "hh_left".
std::string_view to_string(TheoremId id);
/// Throws ConfigError on an unknown name.
TheoremId parse_theorem_id(std::string_view name);
/// thm33, cor34, thm35 and cor36 multiply sets and need positive intervals.
bool is_product_theorem(TheoremId id);

enum class GridSampling { stratified, seeded_random };

/// Discretization of "for all x, y in D and t in [0, 1]".
///
/// stratified: an axis_points x axis_points lattice over the domain (endpoints
/// included), followed by random_pairs seeded uniform pairs. seeded_random:
/// random_pairs seeded pairs only. Every pair is combined with every t value.
struct ConvexityGrid {
    std::size_t axis_points = 32;
    std::size_t random_pairs = 0;
    std::vector<double> t_values = default_t_values();
    GridSampling sampling = GridSampling::stratified;
    std::uint64_t seed = 0;

    /// {0, 0.1, ..., 1}; contains 1/2 exactly.
    static std::vector<double> default_t_values();
    std::size_t pair_count() const;
    /// Throws ParameterError on an empty grid or t values outside [0, 1] / unsorted.
    void validate() const;
    bool operator==(const ConvexityGrid&) const = default;
};

struct Triple {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    bool operator==(const Triple&) const = default;
};

std::vector<Triple> grid_triples(const ConvexityGrid& grid, double lo, double hi);

struct CheckOptions {
    /// Relative inclusion tolerance; quadrature budgets are added on top.
    double tol = 1e-9;
    unsigned threads = 1;
    bool operator==(const CheckOptions&) const = default;
};

/// A second assembly of the same inclusion, reported next to the primary one.
struct AlternateAssembly {
    std::string name;
    ConvexSet lhs;
    ConvexSet rhs;
    InclusionVerdict verdict;
    bool operator==(const AlternateAssembly&) const = default;
};

struct TheoremReport {
    TheoremId theorem = TheoremId::def_shc;
    std::string subject;
    ConvexSet lhs;
    ConvexSet rhs;
    InclusionVerdict verdict;
    /// Quadrature error absorbed into verdict.tolerance_used.
    double error_budget = 0.0;
    std::map<std::string, double> inputs;
    /// Grid triple where the reported verdict was taken (definitional checks).
    std::optional<Triple> witness;
    std::vector<AlternateAssembly> alternates;
    std::map<std::string, double> diagnostics;
    double seconds = 0.0;

    bool operator==(const TheoremReport&) const = default;
};

/// One grid point of a definitional check.
struct TripleOutcome {
    Triple triple;
    ConvexSet lhs;
    ConvexSet rhs;
    InclusionVerdict verdict;
};

/// tF(y) + (1-t)F(x) + c t(1-t) |(x-y)/(xy)|^2 B  subset-of  F(xy/(tx + (1-t)y)).
TripleOutcome harmonic_triple(const SetValuedFn& f, double c, const Triple& tr, double tol);
/// tG(x) + (1-t)G(y) + c t(1-t) |x-y|^2 B  subset-of  G(tx + (1-t)y).
TripleOutcome convex_triple(const SetValuedFn& g, double c, const Triple& tr, double tol);

/// Checks the strong harmonic convexity inclusion on every grid triple over
/// F's domain. c = 0 checks plain harmonic convexity. The reported verdict is
/// taken at the triple with the smallest margin (slack + tolerance), so it
/// holds iff every triple holds; diagnostics carry the raw minimum slack.
TheoremReport check_strongly_harmonic_convex(const SetValuedFn& f, double c,
                                             const ConvexityGrid& grid,
                                             const CheckOptions& opts = {});
/// The t = 1/2 variant at the point 2xy/(x+y).
TheoremReport check_strongly_harmonic_midconvex(const SetValuedFn& f, double c,
                                                const ConvexityGrid& grid,
                                                const CheckOptions& opts = {});
/// Ordinary (arithmetic) strong convexity of G over its own domain.
TheoremReport check_strongly_convex(const SetValuedFn& g, double c, const ConvexityGrid& grid,
                                    const CheckOptions& opts = {});

enum class ShiftDirection { forward, backward, both };

/// Equivalence between modulus-c strong harmonic convexity of F and plain
/// harmonic convexity of F + (c/x^2)B. forward checks both sides on F;
/// backward starts from G = F + (c/x^2)B and checks the eroded map. With
/// midconvex set, both sides use the t = 1/2 checks (lemma_ii).
TheoremReport check_lemma_shift(const SetValuedFn& f, double c, const ConvexityGrid& grid,
                                const CheckOptions& opts, ShiftDirection direction,
                                bool midconvex = false);

/// Runs the harmonic check of F and the strong convexity check of
/// reciprocal_transform(F) on corresponding triples: (x, y, t) maps to
/// (1/y, 1/x, t). Per-triple disagreements are implementation inconsistencies.
TheoremReport check_prop31(const SetValuedFn& f, double c, const ConvexityGrid& grid,
                           const CheckOptions& opts = {});

/// Mean-value inclusions for a strongly convex G on its domain [p, q]:
/// mean + (c/12)(q-p)^2 B subset-of G((p+q)/2) and
/// (G(p) + G(q))/2 + (c/6)(q-p)^2 B subset-of mean.
std::pair<TheoremReport, TheoremReport> check_nikodem(const SetValuedFn& g, double c,
                                                      const QuadratureSpec& q,
                                                      const CheckOptions& opts = {});

/// Harmonic mean-value inclusions on dom = [a, b] with the weighted integral.
std::pair<TheoremReport, TheoremReport> check_hh(const SetValuedFn& f, double c,
                                                 const HarmonicDomain& dom,
                                                 const QuadratureSpec& q,
                                                 const CheckOptions& opts = {});

/// (1/6)M + (1/3)N + S (c/12) d^2 B + (c^2/30) d^4 B  subset-of  the reflected
/// product mean, d = (b-a)/(ab). The alternate "proof_form" regroups the ball
/// terms as (c/12) d^2 B [F(a)+G(b)] + (c/12) d^2 B [F(b)+G(a)].
TheoremReport check_thm33(const SetValuedFn& f, const SetValuedFn& g, double c,
                          const HarmonicDomain& dom, const QuadratureSpec& q,
                          const CheckOptions& opts = {});

/// Same left side as check_thm33 against the plain product mean. The alternate
/// "proof_form" uses the coefficients the t-expansion actually produces,
/// (1/3)M + (1/6)N, with ball terms on [F(a)+G(a)] and [F(b)+G(b)].
TheoremReport check_thm35(const SetValuedFn& f, const SetValuedFn& g, double c,
                          const HarmonicDomain& dom, const QuadratureSpec& q,
                          const CheckOptions& opts = {});

/// F = G case of check_thm33, assembled from the corollary's own coefficients
/// (2/3, 1/6, c/6, c^2/30) with the ball factor on the c terms. Bitwise equal
/// to check_thm33(f, f, ...).
TheoremReport check_cor34(const SetValuedFn& f, double c, const HarmonicDomain& dom,
                          const QuadratureSpec& q, const CheckOptions& opts = {});

/// F = G case of check_thm35 (primary). The alternate "printed" uses the left
/// side (F^2(a) + F^2(b) + F(a) + F(b))/3 + (c/6) d^2 B [F(a)+F(b)] + (c^2/30) d^4 B.
TheoremReport check_cor36(const SetValuedFn& f, double c, const HarmonicDomain& dom,
                          const QuadratureSpec& q, const CheckOptions& opts = {});

/// Everything a theorem needs besides its identifier.
struct CheckRequest {
    double c = 1.0;
    ConvexityGrid grid;
    QuadratureSpec quadrature;
    CheckOptions options;
    bool operator==(const CheckRequest&) const = default;
};

/// Dispatches by identifier. Single-function theorems use f; thm33/thm35 use
/// (f, g). nikodem_* run on reciprocal_transform(f) over [1/b, 1/a]; the
/// remaining theorems use f's own domain.
TheoremReport run_theorem(TheoremId id, const SetValuedFn& f, const SetValuedFn& g,
                          const CheckRequest& req);

} // namespace hhset
