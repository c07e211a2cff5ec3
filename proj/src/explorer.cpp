#include "hhset/explorer.hpp"

#include "hhset/config.hpp"
#include "hhset/errors.hpp"
#include "hhset/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>

namespace hhset {

namespace {

constexpr std::size_t kDims = 10;
constexpr int kDescentRounds = 3;
constexpr int kMaxHypercubes = 8;

double& coord(Candidate& c, std::size_t k)
{
    switch (k) {
    case 0: return c.alpha;
    case 1: return c.beta;
    case 2: return c.K;
    case 3: return c.v[0];
    case 4: return c.v[1];
    case 5: return c.w[0];
    case 6: return c.w[1];
    case 7: return c.a;
    case 8: return c.b;
    default: return c.c;
    }
}

const Range& range(const SearchSpace& s, std::size_t k)
{
    const Range* r[kDims] = {&s.alpha, &s.beta, &s.K, &s.vx, &s.vy, &s.wx, &s.wy, &s.a, &s.b, &s.c};
    return *r[k];
}

bool relevant(FamilyKind kind, std::size_t k)
{
    if (kind == FamilyKind::quadratic) {
        return k < 3 || k >= 7;
    }
    return k != 0;
}

struct Outcome {
    Candidate cand;
    bool holds = true;
    double margin = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;

    // Violations first, then smaller margin, then smaller slack, then field order.
    auto key() const { return std::tie(holds, margin, slack, cand); }
};

bool better(const Outcome& x, const Outcome& y) { return x.key() < y.key(); }

std::optional<Outcome> try_evaluate(const Candidate& cand, TheoremId id, const CheckRequest& req,
                                    std::size_t grid_size)
{
    try {
        const auto r = evaluate_candidate(cand, id, req, grid_size);
        return Outcome{cand, r.verdict.holds, r.verdict.slack + r.verdict.tolerance_used,
                       r.verdict.slack, r.verdict.tolerance_used};
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

std::string to_string(FamilyKind kind)
{
    return kind == FamilyKind::quadratic ? "quadratic" : "disc";
}

FamilyKind parse_family_kind(const std::string& name)
{
    if (name == "quadratic") {
        return FamilyKind::quadratic;
    }
    if (name == "disc") {
        return FamilyKind::disc;
    }
    throw ConfigError("unknown family '" + name + "' (expected quadratic or disc)");
}

SetValuedFn build_family(const Candidate& cand, std::size_t grid_size)
{
    const HarmonicDomain dom(cand.a, cand.b);
    if (cand.family == FamilyKind::quadratic) {
        return make_quadratic_family(cand.alpha, cand.beta, cand.K, dom);
    }
    return make_disc_family(cand.v, cand.w, cand.K, cand.beta, dom, grid_size);
}

void SearchSpace::validate() const
{
    for (std::size_t k = 0; k < kDims; ++k) {
        const auto& r = range(*this, k);
        if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
            throw ParameterError("search range must be finite with min <= max");
        }
    }
    if (grid_size == 0) {
        throw ParameterError("search grid_size must be >= 1");
    }
}

bool is_admissible(const SearchSpace& space, const Candidate& cand)
{
    if (cand.family != space.family) {
        return false;
    }
    if (!(cand.a > 0.0 && cand.a < cand.b && std::isfinite(cand.b)) || !(cand.c > 0.0)) {
        return false;
    }
    const double a2 = cand.a * cand.a;
    const double b2 = cand.b * cand.b;
    if (cand.family == FamilyKind::quadratic) {
        const double s = cand.alpha + cand.beta;
        if (!(cand.K >= std::max(s / a2, s / b2))) {
            return false;
        }
        return !space.certified_only || cand.c <= std::min(cand.alpha, cand.beta);
    }
    if (!(cand.K >= std::max(cand.beta / a2, cand.beta / b2))) {
        return false;
    }
    return !space.certified_only || cand.c <= cand.beta;
}

TheoremReport evaluate_candidate(const Candidate& cand, TheoremId id, const CheckRequest& req,
                                 std::size_t grid_size)
{
    const auto f = build_family(cand, grid_size);
    CheckRequest r = req;
    r.c = cand.c;
    return run_theorem(id, f, f, r);
}

SearchResult min_slack_search(const SearchSpace& space, TheoremId id, std::size_t budget,
                              std::uint64_t seed, const CheckRequest& req)
{
    space.validate();
    if (budget == 0) {
        throw ParameterError("search budget must be >= 1");
    }
    std::vector<std::size_t> active;
    Candidate base;
    base.family = space.family;
    for (std::size_t k = 0; k < kDims; ++k) {
        coord(base, k) = range(space, k).lo;
        if (relevant(space.family, k) && range(space, k).hi > range(space, k).lo) {
            active.push_back(k);
        }
    }

    // Samples run in parallel; each evaluation then stays single-threaded.
    CheckRequest inner = req;
    if (req.options.threads > 1) {
        inner.options.threads = 1;
    }

    std::map<Candidate, std::optional<Outcome>> seen;
    std::size_t evaluations = 0;
    std::optional<Outcome> best;
    const auto consider = [&](const std::optional<Outcome>& o) {
        if (o && (!best || better(*o, *best))) {
            best = o;
        }
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    const std::size_t target = active.empty() ? 1 : std::max<std::size_t>(1, (budget + 1) / 2);
    for (int cube = 0; cube < kMaxHypercubes && evaluations < target; ++cube) {
        const std::size_t n = target;
        std::vector<Candidate> draws(n, base);
        for (std::size_t k : active) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto& r = range(space, k);
            for (std::size_t i = 0; i < n; ++i) {
                const double u = (static_cast<double>(perm[i]) + jitter(rng)) / static_cast<double>(n);
                coord(draws[i], k) = std::min(r.hi, r.lo + (r.hi - r.lo) * u);
            }
        }
        std::vector<Candidate> batch;
        for (const auto& d : draws) {
            if (evaluations + batch.size() >= target) {
                break;
            }
            if (is_admissible(space, d) && !seen.contains(d) &&
                std::find(batch.begin(), batch.end(), d) == batch.end()) {
                batch.push_back(d);
            }
        }
        std::vector<std::optional<Outcome>> slots(batch.size());
        parallel_for(batch.size(), req.options.threads,
                     [&](std::size_t i) { slots[i] = try_evaluate(batch[i], id, inner, space.grid_size); });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            seen[batch[i]] = slots[i];
            consider(slots[i]);
        }
        evaluations += batch.size();
        if (active.empty()) {
            break;
        }
    }

    for (int round = 0; round < kDescentRounds && best && evaluations < budget; ++round) {
        for (std::size_t k : active) {
            const auto& r = range(space, k);
            const double step = (r.hi - r.lo) * 0.25 / std::ldexp(1.0, round);
            for (double sign : {1.0, -1.0}) {
                if (evaluations >= budget) {
                    break;
                }
                Candidate trial = best->cand;
                coord(trial, k) = std::clamp(coord(trial, k) + sign * step, r.lo, r.hi);
                if (!is_admissible(space, trial) || seen.contains(trial)) {
                    continue;
                }
                const auto o = try_evaluate(trial, id, req, space.grid_size);
                seen[trial] = o;
                ++evaluations;
                consider(o);
            }
        }
    }

    if (!best) {
        throw EmptySearchSpace("no admissible configuration in the search space evaluated "
                               "successfully for " + std::string(to_string(id)));
    }
    SearchResult res;
    res.best_config = best->cand;
    res.best_slack = best->slack;
    res.best_tolerance = best->tolerance;
    res.theorem = id;
    res.evaluations = evaluations;
    res.seed = seed;
    res.violation_found = !best->holds;
    res.request = req;
    res.grid_size = space.grid_size;
    return res;
}

void emit_counterexample(const SearchResult& result, const std::filesystem::path& path)
{
    if (!result.violation_found) {
        throw ParameterError("no violation to emit: best slack " +
                             std::to_string(result.best_slack) + " is within tolerance");
    }
    const auto cfg = replay_config(result.best_config, result.theorem, result.request,
                                   result.grid_size);
    std::ofstream out(path);
    out << render_config(cfg);
    if (!out) {
        throw ConfigError("cannot write counterexample " + path.string());
    }
}

} // namespace hhset
