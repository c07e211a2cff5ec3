// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hhset/cli.hpp"
#include "hhset/errors.hpp"
#include "hhset/explorer.hpp"
#include "hhset/hh_check.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace hhset;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Interval iv(const ConvexSet& s) { return std::get<Interval>(s); }

const HarmonicDomain kUnit(1.0, 2.0);

SetValuedFn tight() { return make_quadratic_family(1, 1, 10, kUnit); }

// Random family on a random positive domain; certified picks c <= modulus.
struct RandomFamily {
    Candidate cand;
    SetValuedFn fn;
};

RandomFamily random_family(std::mt19937_64& rng, bool disc, bool certified)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Candidate c;
    c.family = disc ? FamilyKind::disc : FamilyKind::quadratic;
    c.a = 0.5 + u(rng);
    c.b = c.a + 0.2 + 1.8 * u(rng);
    c.alpha = 0.2 + 2.8 * u(rng);
    c.beta = 0.2 + 2.8 * u(rng);
    c.v = {2 * u(rng) - 1, 2 * u(rng) - 1};
    c.w = {2 * u(rng) - 1, 2 * u(rng) - 1};
    const double need = disc ? c.beta : c.alpha + c.beta;
    c.K = need / (c.a * c.a) * (1.0 + u(rng));
    const double modulus = disc ? c.beta : std::min(c.alpha, c.beta);
    c.c = certified ? modulus * (0.1 + 0.9 * u(rng)) : 0.1 + 3.0 * u(rng);
    return {c, build_family(c)};
}

Outcome tight_reproduction()
{
    const auto start = std::chrono::steady_clock::now();
    RunConfig cfg;
    cfg.families = {FamilySpec{}};
    cfg.domain = DomainSpec{1.0, 2.0};
    cfg.c = 1.0;
    cfg.theorems = {TheoremId::hh_left, TheoremId::hh_right};
    const auto report = run(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto& left = *report.entries.at(0).report;
    const auto& right = *report.entries.at(1).report;
    const auto mean = iv(right.rhs);
    const auto mid = iv(left.rhs);
    const bool ok = std::abs(mean.lo - 7.0 / 12) <= 1e-10 && std::abs(mean.hi - 113.0 / 12) <= 1e-10 &&
                    std::abs(mid.lo - 0.5625) <= 1e-10 && std::abs(mid.hi - 9.4375) <= 1e-10 &&
                    std::abs(left.verdict.slack) <= 1e-10 && std::abs(right.verdict.slack) <= 1e-10 &&
                    left.verdict.holds && right.verdict.holds && secs < 1.0;
    return {ok, fmt("mean [%.17g, %.17g], F(4/3) [%.17g, %.17g], slacks %.3g / %.3g, %.3f s",
                    mean.lo, mean.hi, mid.lo, mid.hi, left.verdict.slack, right.verdict.slack, secs)};
}

Outcome margin_monotonicity()
{
    std::vector<double> left;
    std::vector<double> right;
    for (double c : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto [l, r] = check_hh(tight(), c, kUnit, {});
        left.push_back(l.verdict.slack);
        right.push_back(r.verdict.slack);
    }
    bool ok = true;
    for (std::size_t i = 1; i < left.size(); ++i) {
        ok = ok && left[i] <= left[i - 1] && right[i] <= right[i - 1];
    }
    // (c difference) x (1/12 or 1/6) x delta^2 with delta = 1/2.
    const double dl = left[2] - left[4];
    const double dr = right[2] - right[4];
    ok = ok && std::abs(dl - 1.0 / 96) <= 1e-10 && std::abs(dr - 1.0 / 48) <= 1e-10;
    return {ok, fmt("left slacks %.4g..%.4g, right %.4g..%.4g; differences %.17g (1/96), %.17g (1/48)",
                    left.front(), left.back(), right.front(), right.back(), dl, dr)};
}

Outcome prop31_agreement()
{
    std::mt19937_64 rng(31);
    ConvexityGrid grid;
    grid.sampling = GridSampling::seeded_random;
    grid.axis_points = 0;
    grid.random_pairs = 50;
    grid.t_values = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 0.8, 0.9, 1.0};
    double triples = 0;
    double agreements = 0;
    int failing_families = 0;
    for (int i = 0; i < 20; ++i) {
        const auto fam = random_family(rng, i % 2 == 1, i % 4 < 2);
        grid.seed = 1000 + static_cast<std::uint64_t>(i);
        const auto r = check_prop31(fam.fn, fam.cand.c, grid);
        triples += r.diagnostics.at("triples");
        agreements += r.diagnostics.at("agreements");
        failing_families += r.verdict.holds ? 0 : 1;
    }
    const bool ok = triples == 1e4 && agreements == triples;
    return {ok, fmt("%.0f / %.0f triples agree across 20 families (%d with failing verdicts on both sides)",
                    agreements, triples, failing_families)};
}

Outcome lemma_shift()
{
    std::mt19937_64 rng(27);
    ConvexityGrid grid;
    grid.axis_points = 16;
    int passed = 0;
    for (int i = 0; i < 20; ++i) {
        const auto fam = random_family(rng, i % 2 == 1, true);
        const auto r1 = check_lemma_shift(fam.fn, fam.cand.c, grid, {}, ShiftDirection::both, false);
        const auto r2 = check_lemma_shift(fam.fn, fam.cand.c, grid, {}, ShiftDirection::both, true);
        passed += r1.verdict.holds && r2.verdict.holds ? 1 : 0;
    }
    int caught = 0;
    for (int i = 0; i < 20; ++i) {
        auto fam = random_family(rng, false, true);
        const double c = fam.cand.alpha * 1.5;
        const auto shifted = c_shift(fam.fn, c);
        caught += check_strongly_harmonic_convex(shifted, 0.0, grid).verdict.holds ? 0 : 1;
    }
    return {passed == 20 && caught == 20,
            fmt("%d/20 certified families pass both directions (i and ii); %d/20 shifts with alpha < c fail",
                passed, caught)};
}

Outcome nikodem_baseline()
{
    const auto g = reciprocal_transform(tight());
    const auto [left, right] = check_nikodem(g, 1.0, {});
    const bool ok = g.domain() == Interval(0.5, 1.0) && left.verdict.holds && right.verdict.holds &&
                    std::abs(left.verdict.slack) <= 1e-10 && std::abs(right.verdict.slack) <= 1e-10;
    return {ok, fmt("G on [%.3g, %.3g]: slacks %.3g / %.3g", g.domain().lo, g.domain().hi,
                    left.verdict.slack, right.verdict.slack)};
}

Outcome quadrature_oracle()
{
    std::vector<SetValuedFn> suite;
    for (const char* name : {"default.json", "core.json", "baseline.json"}) {
        const auto cfg = load_config(std::filesystem::path(HHSET_CONFIG_DIR) / name);
        for (const auto& f : cfg.families) {
            suite.push_back(build_family(cfg, f));
        }
    }
    double worst = 0.0;
    for (const auto& f : suite) {
        const auto dom = f.harmonic_domain();
        const auto q = weighted_harmonic_integral(f, dom, {});
        const auto mc = monte_carlo_oracle(f, dom, kOracleSamples, 6);
        worst = std::max(worst, hausdorff(q.value, mc.value));
    }
    return {worst <= 1e-7, fmt("%zu families, worst Hausdorff gap %.3g against 1e6 panels",
                               suite.size(), worst)};
}

bool same_report(TheoremReport a, TheoremReport b)
{
    a.seconds = b.seconds = 0.0;
    return a == b;
}

Outcome product_suite()
{
    const auto dir = std::filesystem::temp_directory_path() / "hhset_acceptance";
    std::filesystem::create_directories(dir);
    std::vector<Candidate> fams;
    for (double alpha : {1.0, 1.5, 2.0}) {
        for (double beta : {1.0, 1.5, 2.0}) {
            for (double K : {10.0, 15.0, 20.0}) {
                fams.push_back({FamilyKind::quadratic, alpha, beta, K, {0, 0}, {0, 0}, 1.0, 2.0, 1.0});
            }
        }
    }
    CheckRequest one;
    CheckRequest many;
    many.options.threads = 4;
    std::size_t verdicts = 0;
    std::size_t violations = 0;
    std::size_t replay_ok = 0;
    bool reproducible = true;
    bool cor34_identical = true;
    double worst_replay = 0.0;
    int index = 0;
    for (const auto& cand : fams) {
        const auto f = build_family(cand);
        const auto g = build_family(fams[(static_cast<std::size_t>(index) + 1) % fams.size()]);
        for (auto id : {TheoremId::thm33, TheoremId::cor34, TheoremId::thm35, TheoremId::cor36}) {
            const auto first = evaluate_candidate(cand, id, one);
            const auto again = evaluate_candidate(cand, id, one);
            const auto threaded = evaluate_candidate(cand, id, many);
            reproducible = reproducible && same_report(first, again) && same_report(first, threaded);
            ++verdicts;
            if (!first.verdict.holds) {
                ++violations;
                SearchSpace pinned;
                pinned.alpha = {cand.alpha, cand.alpha};
                pinned.beta = {cand.beta, cand.beta};
                pinned.K = {cand.K, cand.K};
                const auto res = min_slack_search(pinned, id, 1, 0, one);
                const auto path = dir / ("cx_" + std::to_string(index) + "_" + std::string(to_string(id)) + ".json");
                emit_counterexample(res, path);
                const auto replay = run(load_config(path));
                const double gap = std::abs(replay.entries.at(0).report->verdict.slack - first.verdict.slack);
                worst_replay = std::max(worst_replay, gap);
                replay_ok += gap <= 1e-12 && !replay.entries.at(0).report->verdict.holds ? 1 : 0;
            }
        }
        // Mixed pairs for the two-function statements.
        for (auto id : {TheoremId::thm33, TheoremId::thm35}) {
            CheckRequest req = one;
            req.c = cand.c;
            const auto a = run_theorem(id, f, g, req);
            req.options.threads = 4;
            reproducible = reproducible && same_report(a, run_theorem(id, f, g, req));
            ++verdicts;
        }
        const auto t33 = check_thm33(f, f, cand.c, f.harmonic_domain(), {});
        const auto c34 = check_cor34(f, cand.c, f.harmonic_domain(), {});
        cor34_identical = cor34_identical && t33.lhs == c34.lhs && t33.rhs == c34.rhs &&
                          t33.verdict == c34.verdict && t33.error_budget == c34.error_budget;
        ++index;
    }
    std::filesystem::remove_all(dir);
    const bool ok = reproducible && cor34_identical && replay_ok == violations;
    return {ok, fmt("%zu definitive verdicts on 27 families (%zu violations), reproducible=%s, "
                    "replays %zu/%zu within %.3g, cor34==thm33 bitwise=%s",
                    verdicts, violations, reproducible ? "yes" : "no", replay_ok, violations,
                    worst_replay, cor34_identical ? "yes" : "no")};
}

Outcome support_mode()
{
    const auto f = make_disc_family({1, 0}, {0, 1}, 3, 1, kUnit, 64);
    CheckOptions opts;
    opts.tol = 1e-9;
    const auto [left, right] = check_hh(f, 1.0, kUnit, {}, opts);
    bool ok = left.verdict.holds && right.verdict.holds;
    double worst = INFINITY;
    for (const auto* r : {&left, &right}) {
        const auto lhs = components(r->lhs);
        const auto rhs = components(r->rhs);
        ok = ok && lhs.size() == 64;
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            const double s = rhs[i] - lhs[i];
            worst = std::min(worst, s);
            ok = ok && s >= -r->verdict.tolerance_used;
        }
    }
    return {ok, fmt("64 directions on both sides, minimum directional slack %.3g (tolerance %.3g)",
                    worst, left.verdict.tolerance_used)};
}

Outcome set_algebra()
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> pos(0.0, 3.0);
    const auto rand_interval = [&] {
        const double x = u(rng);
        return Interval(x, x + pos(rng));
    };
    const auto rand_support = [&] {
        return ConvexSet(SupportSet::disc({u(rng), u(rng)}, pos(rng), 16));
    };
    std::size_t failures = 0;
    const std::size_t cases = 100000;
    for (std::size_t i = 0; i < cases; ++i) {
        const auto a = rand_interval();
        const auto b = rand_interval();
        const double s = pos(rng);
        const double t = pos(rng);
        const auto sa = rand_support();
        const auto sb = rand_support();
        bool ok = minkowski_sum(a, b) == minkowski_sum(b, a) &&
                  hausdorff(minkowski_sum(sa, sb), minkowski_sum(sb, sa)) <= 1e-15;
        ok = ok && hausdorff(scale(s, minkowski_sum(a, b)), minkowski_sum(scale(s, a), scale(s, b))) <= 1e-13 &&
             hausdorff(scale(s + t, a), minkowski_sum(scale(s, a), scale(t, a))) <= 1e-13 &&
             hausdorff(scale(s, minkowski_sum(sa, sb)), minkowski_sum(scale(s, sa), scale(s, sb))) <= 1e-13;
        // Transitivity along a growing chain a within a + rB within a + (r + r')B.
        const auto mid = minkowski_sum(a, interval_ball(pos(rng)));
        const auto outer = minkowski_sum(mid, interval_ball(pos(rng)));
        ok = ok && includes(a, mid, 0.0).holds && includes(mid, outer, 0.0).holds &&
             includes(a, outer, 0.0).holds;
        const auto smid = minkowski_sum(sa, ball(pos(rng), Representation::of(sa)));
        const auto souter = minkowski_sum(smid, ball(pos(rng), Representation::of(sa)));
        ok = ok && includes(sa, smid, 1e-15).holds && includes(smid, souter, 1e-15).holds &&
             includes(sa, souter, 1e-15).holds;
        const auto b2 = minkowski_sum(b, interval_ball(pos(rng)));
        ok = ok && includes(interval_product(a, b), interval_product(mid, b2), 1e-12).holds;
        failures += ok ? 0 : 1;
    }
    return {failures == 0, fmt("%zu randomized cases, %zu failures", cases, failures)};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"tight harmonic mean-value reproduction", tight_reproduction},
        {"margin monotonicity in c", margin_monotonicity},
        {"reciprocal transform verdict agreement", prop31_agreement},
        {"shift lemma in both directions", lemma_shift},
        {"arithmetic mean-value baseline", nikodem_baseline},
        {"quadrature against Riemann oracle", quadrature_oracle},
        {"product inclusion suite", product_suite},
        {"support-set mode", support_mode},
        {"set algebra properties", set_algebra},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
                criteria.size());
    return failed == 0 ? 0 : 1;
}
