#include "hhset/hh_check.hpp"

#include "hhset/errors.hpp"
#include "hhset/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

namespace hhset {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_modulus(double c)
{
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw ParameterError("modulus c must be a finite value >= 0");
    }
}

using TripleFn = std::function<TripleOutcome(const Triple&)>;

std::vector<TripleOutcome> evaluate(const std::vector<Triple>& triples, const TripleFn& fn,
                                    unsigned threads)
{
    std::vector<std::optional<TripleOutcome>> slots(triples.size());
    parallel_for(triples.size(), threads, [&](std::size_t i) { slots[i] = fn(triples[i]); });
    std::vector<TripleOutcome> out;
    out.reserve(slots.size());
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

double margin(const InclusionVerdict& v) { return v.slack + v.tolerance_used; }

// Fixed-order reduction: first triple with the smallest margin.
std::size_t worst_index(const std::vector<TripleOutcome>& outcomes)
{
    std::size_t worst = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i) {
        if (margin(outcomes[i].verdict) < margin(outcomes[worst].verdict)) {
            worst = i;
        }
    }
    return worst;
}

TheoremReport summarize(TheoremId id, const SetValuedFn& f, double c,
                        const std::vector<TripleOutcome>& outcomes)
{
    if (outcomes.empty()) {
        throw ParameterError("convexity grid produced no triples");
    }
    const auto& w = outcomes[worst_index(outcomes)];
    TheoremReport r;
    r.theorem = id;
    r.subject = f.describe();
    r.lhs = w.lhs;
    r.rhs = w.rhs;
    r.verdict = w.verdict;
    r.witness = w.triple;
    r.inputs = {{"c", c}, {"domain_lo", f.domain().lo}, {"domain_hi", f.domain().hi}};
    double min_slack = outcomes.front().verdict.slack;
    double failing = 0.0;
    for (const auto& o : outcomes) {
        min_slack = std::min(min_slack, o.verdict.slack);
        failing += o.verdict.holds ? 0.0 : 1.0;
    }
    r.diagnostics = {{"triples", static_cast<double>(outcomes.size())},
                     {"failing_triples", failing},
                     {"min_slack", min_slack}};
    return r;
}

TripleOutcome midconvex_triple(const SetValuedFn& f, double c, const Triple& tr, double tol)
{
    const ConvexSet fx = f.eval(tr.x);
    const ConvexSet fy = f.eval(tr.y);
    const double d = (tr.x - tr.y) / (tr.x * tr.y);
    const ConvexSet lhs = minkowski_sum(scale(0.5, minkowski_sum(fy, fx)),
                                        ball(c / 4.0 * (d * d), f.representation()));
    const double mid = std::clamp(2.0 * tr.x * tr.y / (tr.x + tr.y), std::min(tr.x, tr.y),
                                  std::max(tr.x, tr.y));
    ConvexSet rhs = f.eval(mid);
    auto v = includes(lhs, rhs, tol);
    return {tr, lhs, std::move(rhs), v};
}

std::vector<Triple> midpoint_triples(const ConvexityGrid& grid, double lo, double hi)
{
    ConvexityGrid g = grid;
    g.t_values = {0.5};
    return grid_triples(g, lo, hi);
}

TheoremReport definitional(TheoremId id, const SetValuedFn& f, double c,
                           const std::vector<Triple>& triples, const TripleFn& fn,
                           const CheckOptions& opts)
{
    const auto start = Clock::now();
    auto r = summarize(id, f, c, evaluate(triples, fn, opts.threads));
    r.inputs["tol"] = opts.tol;
    r.seconds = seconds_since(start);
    return r;
}

AlternateAssembly as_alternate(std::string name, const TheoremReport& r)
{
    return {std::move(name), r.lhs, r.rhs, r.verdict};
}

// Reduces two paired checks into one report carrying the primary side.
TheoremReport pair_reports(TheoremId id, TheoremReport primary, const std::string& other_name,
                           const TheoremReport& other)
{
    primary.theorem = id;
    primary.alternates.push_back(as_alternate(other_name, other));
    primary.diagnostics["consistent"] = primary.verdict.holds == other.verdict.holds ? 1.0 : 0.0;
    primary.diagnostics[other_name + "_slack"] = other.verdict.slack;
    primary.verdict.holds = primary.verdict.holds && other.verdict.holds;
    primary.seconds += other.seconds;
    return primary;
}

struct Endpoints {
    Interval fa;
    Interval fb;
    Interval ga;
    Interval gb;
    double d2 = 0.0;
    double d4 = 0.0;
};

Interval positive_interval(const ConvexSet& s, const char* which)
{
    const auto* iv = std::get_if<Interval>(&s);
    if (iv == nullptr) {
        throw UnsupportedProduct("product theorems need interval-valued maps");
    }
    if (!(iv->lo > 0.0)) {
        throw PositivityError(std::string(which) + " = " + to_string(s) + " is not inside (0, inf)");
    }
    return *iv;
}

Endpoints endpoints(const SetValuedFn& f, const SetValuedFn& g, const HarmonicDomain& dom)
{
    if (f.kind() != SetKind::interval || g.kind() != SetKind::interval) {
        throw UnsupportedProduct("product theorems need interval-valued maps");
    }
    Endpoints e;
    e.fa = positive_interval(f.eval(dom.a()), "F(a)");
    e.fb = positive_interval(f.eval(dom.b()), "F(b)");
    e.ga = positive_interval(g.eval(dom.a()), "G(a)");
    e.gb = positive_interval(g.eval(dom.b()), "G(b)");
    const double d = dom.reciprocal_gap();
    e.d2 = d * d;
    e.d4 = e.d2 * e.d2;
    return e;
}

Interval add(const Interval& a, const Interval& b) { return minkowski_sum(a, b); }

Interval mul(const Interval& a, const Interval& b) { return interval_product(a, b); }

// (1/6)M + (1/3)N + S * (c/12) d^2 B + (c^2/30) d^4 B, with S summed as
// (F(a)+F(b)) + (G(a)+G(b)) so the F = G case doubles exactly.
Interval statement_lhs(const Endpoints& e, double c)
{
    const Interval m = add(mul(e.fa, e.ga), mul(e.fb, e.gb));
    const Interval n = add(mul(e.fa, e.gb), mul(e.fb, e.ga));
    const Interval s = add(add(e.fa, e.fb), add(e.ga, e.gb));
    const Interval core = add(scale(1.0 / 6.0, m), scale(1.0 / 3.0, n));
    const Interval penalty = mul(s, interval_ball(c / 12.0 * e.d2));
    return add(add(core, penalty), interval_ball(c * c / 30.0 * e.d4));
}

// Ball terms grouped as in the expansion of the reflected product.
Interval thm33_proof_lhs(const Endpoints& e, double c)
{
    const Interval m = add(mul(e.fa, e.ga), mul(e.fb, e.gb));
    const Interval n = add(mul(e.fa, e.gb), mul(e.fb, e.ga));
    const Interval core = add(scale(1.0 / 6.0, m), scale(1.0 / 3.0, n));
    const Interval r = interval_ball(c / 12.0 * e.d2);
    const Interval penalty = add(mul(r, add(e.fa, e.gb)), mul(r, add(e.fb, e.ga)));
    return add(add(core, penalty), interval_ball(c * c / 30.0 * e.d4));
}

Interval thm35_proof_lhs(const Endpoints& e, double c)
{
    const Interval m = add(mul(e.fa, e.ga), mul(e.fb, e.gb));
    const Interval n = add(mul(e.fa, e.gb), mul(e.fb, e.ga));
    const Interval core = add(scale(1.0 / 3.0, m), scale(1.0 / 6.0, n));
    const Interval r = interval_ball(c / 12.0 * e.d2);
    const Interval penalty = add(mul(r, add(e.fa, e.ga)), mul(r, add(e.fb, e.gb)));
    return add(add(core, penalty), interval_ball(c * c / 30.0 * e.d4));
}

// (2/3)F(a)F(b) + (1/6)(F^2(a) + F^2(b)) + (c/6) d^2 B [F(a)+F(b)] + (c^2/30) d^4 B.
Interval cor34_lhs(const Endpoints& e, double c)
{
    const Interval squares = add(mul(e.fa, e.fa), mul(e.fb, e.fb));
    const Interval core = add(scale(1.0 / 6.0, squares), scale(2.0 / 3.0, mul(e.fa, e.fb)));
    const Interval penalty = mul(add(e.fa, e.fb), interval_ball(c / 6.0 * e.d2));
    return add(add(core, penalty), interval_ball(c * c / 30.0 * e.d4));
}

// (F^2(a) + F^2(b) + F(a) + F(b))/3 + (c/6) d^2 B [F(a)+F(b)] + (c^2/30) d^4 B.
Interval cor36_printed_lhs(const Endpoints& e, double c)
{
    const Interval sum = add(add(mul(e.fa, e.fa), mul(e.fb, e.fb)), add(e.fa, e.fb));
    const Interval penalty = mul(add(e.fa, e.fb), interval_ball(c / 6.0 * e.d2));
    return add(add(scale(1.0 / 3.0, sum), penalty), interval_ball(c * c / 30.0 * e.d4));
}

TheoremReport product_report(TheoremId id, std::string subject, const Interval& lhs,
                             const IntegralResult& rhs, double c, const HarmonicDomain& dom,
                             const CheckOptions& opts)
{
    TheoremReport r;
    r.theorem = id;
    r.subject = std::move(subject);
    r.lhs = lhs;
    r.rhs = rhs.value;
    r.error_budget = rhs.error_budget;
    r.verdict = includes(r.lhs, r.rhs, opts.tol, rhs.error_budget);
    r.inputs = {{"c", c}, {"a", dom.a()}, {"b", dom.b()}, {"tol", opts.tol}};
    r.diagnostics["nodes"] = static_cast<double>(rhs.nodes_used);
    return r;
}

void add_alternate(TheoremReport& r, std::string name, const Interval& lhs,
                   const CheckOptions& opts)
{
    const auto v = includes(lhs, r.rhs, opts.tol, r.error_budget);
    r.diagnostics[name + "_slack"] = v.slack;
    r.diagnostics[name + "_hausdorff"] = hausdorff(lhs, r.lhs);
    r.alternates.push_back({std::move(name), lhs, r.rhs, v});
}

std::string pair_subject(const SetValuedFn& f, const SetValuedFn& g)
{
    return "F=" + f.describe() + "; G=" + g.describe();
}

} // namespace

std::string_view to_string(TheoremId id)
{
    switch (id) {
    case TheoremId::def_shc: return "def_shc";
    case TheoremId::def_mid: return "def_mid";
    case TheoremId::lemma_i: return "lemma_i";
    case TheoremId::lemma_ii: return "lemma_ii";
    case TheoremId::prop_31: return "prop_31";
    case TheoremId::nikodem_left: return "nikodem_left";
    case TheoremId::nikodem_right: return "nikodem_right";
    case TheoremId::hh_left: return "hh_left";
    case TheoremId::hh_right: return "hh_right";
    case TheoremId::thm33: return "thm33";
    case TheoremId::cor34: return "cor34";
    case TheoremId::thm35: return "thm35";
    case TheoremId::cor36: return "cor36";
    }
    return "def_shc";
}

TheoremId parse_theorem_id(std::string_view name)
{
    for (auto id : kAllTheorems) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw ConfigError("unknown theorem id '" + std::string(name) + "'");
}

bool is_product_theorem(TheoremId id)
{
    return id == TheoremId::thm33 || id == TheoremId::cor34 || id == TheoremId::thm35 ||
           id == TheoremId::cor36;
}

std::vector<double> ConvexityGrid::default_t_values()
{
    std::vector<double> t(11);
    for (int k = 0; k <= 10; ++k) {
        t[static_cast<std::size_t>(k)] = k / 10.0;
    }
    return t;
}

std::size_t ConvexityGrid::pair_count() const
{
    const std::size_t lattice = sampling == GridSampling::stratified ? axis_points * axis_points : 0;
    return lattice + random_pairs;
}

void ConvexityGrid::validate() const
{
    if (pair_count() == 0) {
        throw ParameterError("convexity grid has no (x, y) pairs");
    }
    if (t_values.empty()) {
        throw ParameterError("convexity grid has no t values");
    }
    for (std::size_t i = 0; i < t_values.size(); ++i) {
        if (!(t_values[i] >= 0.0 && t_values[i] <= 1.0)) {
            throw ParameterError("t values must lie in [0, 1]");
        }
        if (i > 0 && !(t_values[i] > t_values[i - 1])) {
            throw ParameterError("t values must be strictly increasing");
        }
    }
}

std::vector<Triple> grid_triples(const ConvexityGrid& grid, double lo, double hi)
{
    grid.validate();
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(grid.pair_count());
    if (grid.sampling == GridSampling::stratified && grid.axis_points > 0) {
        const std::size_t n = grid.axis_points;
        std::vector<double> axis(n);
        for (std::size_t i = 0; i < n; ++i) {
            axis[i] = n == 1 ? 0.5 * (lo + hi)
                             : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        }
        if (n > 1) {
            axis.back() = hi;
        }
        for (double x : axis) {
            for (double y : axis) {
                pairs.emplace_back(x, y);
            }
        }
    }
    std::mt19937_64 rng(grid.seed);
    std::uniform_real_distribution<double> u(lo, hi);
    for (std::size_t i = 0; i < grid.random_pairs; ++i) {
        const double x = u(rng);
        const double y = u(rng);
        pairs.emplace_back(x, y);
    }
    std::vector<Triple> triples;
    triples.reserve(pairs.size() * grid.t_values.size());
    for (const auto& [x, y] : pairs) {
        for (double t : grid.t_values) {
            triples.push_back({x, y, t});
        }
    }
    return triples;
}

TripleOutcome harmonic_triple(const SetValuedFn& f, double c, const Triple& tr, double tol)
{
    require_modulus(c);
    const ConvexSet fx = f.eval(tr.x);
    const ConvexSet fy = f.eval(tr.y);
    const double d = (tr.x - tr.y) / (tr.x * tr.y);
    const double penalty = c * (tr.t * (1.0 - tr.t)) * (d * d);
    const ConvexSet lhs = minkowski_sum(minkowski_sum(scale(tr.t, fy), scale(1.0 - tr.t, fx)),
                                        ball(penalty, f.representation()));
    ConvexSet rhs = f.eval(harmonic_combination(tr.x, tr.y, tr.t));
    auto v = includes(lhs, rhs, tol);
    return {tr, lhs, std::move(rhs), v};
}

TripleOutcome convex_triple(const SetValuedFn& g, double c, const Triple& tr, double tol)
{
    require_modulus(c);
    const ConvexSet gx = g.eval(tr.x);
    const ConvexSet gy = g.eval(tr.y);
    const double d = tr.x - tr.y;
    const double penalty = c * (tr.t * (1.0 - tr.t)) * (d * d);
    const ConvexSet lhs = minkowski_sum(minkowski_sum(scale(tr.t, gx), scale(1.0 - tr.t, gy)),
                                        ball(penalty, g.representation()));
    ConvexSet rhs = g.eval(tr.t * tr.x + (1.0 - tr.t) * tr.y);
    auto v = includes(lhs, rhs, tol);
    return {tr, lhs, std::move(rhs), v};
}

TheoremReport check_strongly_harmonic_convex(const SetValuedFn& f, double c,
                                             const ConvexityGrid& grid, const CheckOptions& opts)
{
    require_modulus(c);
    const auto dom = f.harmonic_domain();
    return definitional(
        TheoremId::def_shc, f, c, grid_triples(grid, dom.a(), dom.b()),
        [&](const Triple& tr) { return harmonic_triple(f, c, tr, opts.tol); }, opts);
}

TheoremReport check_strongly_harmonic_midconvex(const SetValuedFn& f, double c,
                                                const ConvexityGrid& grid,
                                                const CheckOptions& opts)
{
    require_modulus(c);
    const auto dom = f.harmonic_domain();
    return definitional(
        TheoremId::def_mid, f, c, midpoint_triples(grid, dom.a(), dom.b()),
        [&](const Triple& tr) { return midconvex_triple(f, c, tr, opts.tol); }, opts);
}

TheoremReport check_strongly_convex(const SetValuedFn& g, double c, const ConvexityGrid& grid,
                                    const CheckOptions& opts)
{
    require_modulus(c);
    const auto dom = g.domain();
    auto r = definitional(
        TheoremId::nikodem_left, g, c, grid_triples(grid, dom.lo, dom.hi),
        [&](const Triple& tr) { return convex_triple(g, c, tr, opts.tol); }, opts);
    r.inputs["arithmetic"] = 1.0;
    return r;
}

TheoremReport check_lemma_shift(const SetValuedFn& f, double c, const ConvexityGrid& grid,
                                const CheckOptions& opts, ShiftDirection direction,
                                bool midconvex)
{
    if (!(c > 0.0)) {
        throw ParameterError("the shift equivalence needs c > 0");
    }
    const TheoremId id = midconvex ? TheoremId::lemma_ii : TheoremId::lemma_i;
    const auto check = [&](const SetValuedFn& h, double modulus) {
        return midconvex ? check_strongly_harmonic_midconvex(h, modulus, grid, opts)
                         : check_strongly_harmonic_convex(h, modulus, grid, opts);
    };
    const SetValuedFn shifted = c_shift(f, c);

    std::optional<TheoremReport> forward;
    std::optional<TheoremReport> backward;
    if (direction != ShiftDirection::backward) {
        forward = pair_reports(id, check(f, c), "shifted_harmonic_convexity", check(shifted, 0.0));
    }
    if (direction != ShiftDirection::forward) {
        const SetValuedFn eroded = c_unshift(shifted, c);
        backward = pair_reports(id, check(eroded, c), "shifted_harmonic_convexity",
                                check(shifted, 0.0));
    }
    if (forward && backward) {
        TheoremReport r = *forward;
        r.alternates.push_back(as_alternate("backward_eroded", *backward));
        r.diagnostics["backward_slack"] = backward->verdict.slack;
        r.diagnostics["consistent"] =
            std::min(r.diagnostics["consistent"], backward->diagnostics["consistent"]);
        r.verdict.holds = r.verdict.holds && backward->verdict.holds;
        r.seconds += backward->seconds;
        r.inputs["direction"] = 2.0;
        return r;
    }
    TheoremReport r = forward ? *forward : *backward;
    r.inputs["direction"] = forward ? 0.0 : 1.0;
    return r;
}

TheoremReport check_prop31(const SetValuedFn& f, double c, const ConvexityGrid& grid,
                           const CheckOptions& opts)
{
    require_modulus(c);
    const auto start = Clock::now();
    const auto dom = f.harmonic_domain();
    const SetValuedFn g = reciprocal_transform(f);
    const auto triples = grid_triples(grid, dom.a(), dom.b());
    std::vector<Triple> mapped(triples.size());
    for (std::size_t i = 0; i < triples.size(); ++i) {
        mapped[i] = {1.0 / triples[i].y, 1.0 / triples[i].x, triples[i].t};
    }
    const auto harmonic = evaluate(
        triples, [&](const Triple& tr) { return harmonic_triple(f, c, tr, opts.tol); },
        opts.threads);
    const auto convex = evaluate(
        mapped, [&](const Triple& tr) { return convex_triple(g, c, tr, opts.tol); }, opts.threads);

    double agreements = 0.0;
    for (std::size_t i = 0; i < harmonic.size(); ++i) {
        agreements += harmonic[i].verdict.holds == convex[i].verdict.holds ? 1.0 : 0.0;
    }
    auto r = summarize(TheoremId::prop_31, f, c, harmonic);
    auto gr = summarize(TheoremId::prop_31, g, c, convex);
    const double total = static_cast<double>(harmonic.size());
    r.alternates.push_back(as_alternate("reciprocal_strong_convexity", gr));
    r.diagnostics["agreements"] = agreements;
    r.diagnostics["disagreements"] = total - agreements;
    r.diagnostics["consistent"] = agreements == total ? 1.0 : 0.0;
    r.diagnostics["reciprocal_min_slack"] = gr.diagnostics["min_slack"];
    r.verdict.holds = r.verdict.holds && gr.verdict.holds && agreements == total;
    r.inputs["tol"] = opts.tol;
    r.seconds = seconds_since(start);
    return r;
}

std::pair<TheoremReport, TheoremReport> check_nikodem(const SetValuedFn& g, double c,
                                                      const QuadratureSpec& q,
                                                      const CheckOptions& opts)
{
    require_modulus(c);
    const auto start = Clock::now();
    const Interval dom = g.domain();
    const double width = dom.hi - dom.lo;
    const auto integral = aumann_integral(g, dom.lo, dom.hi, q, opts.threads);
    const ConvexSet mean = scale(1.0 / width, integral.value);
    const double budget = integral.error_budget / width;
    const auto rep = g.representation();

    TheoremReport left;
    left.theorem = TheoremId::nikodem_left;
    left.subject = g.describe();
    left.lhs = minkowski_sum(mean, ball(c / 12.0 * (width * width), rep));
    left.rhs = g.eval(0.5 * (dom.lo + dom.hi));
    left.error_budget = budget;
    left.verdict = includes(left.lhs, left.rhs, opts.tol, budget);
    left.inputs = {{"c", c}, {"domain_lo", dom.lo}, {"domain_hi", dom.hi}, {"tol", opts.tol}};
    left.diagnostics["nodes"] = static_cast<double>(integral.nodes_used);

    TheoremReport right = left;
    right.theorem = TheoremId::nikodem_right;
    right.lhs = minkowski_sum(scale(0.5, minkowski_sum(g.eval(dom.lo), g.eval(dom.hi))),
                              ball(c / 6.0 * (width * width), rep));
    right.rhs = mean;
    right.verdict = includes(right.lhs, right.rhs, opts.tol, budget);

    left.seconds = right.seconds = seconds_since(start);
    return {left, right};
}

std::pair<TheoremReport, TheoremReport> check_hh(const SetValuedFn& f, double c,
                                                 const HarmonicDomain& dom,
                                                 const QuadratureSpec& q, const CheckOptions& opts)
{
    require_modulus(c);
    const auto start = Clock::now();
    const auto mean = harmonic_mean_set(f, dom, q, opts.threads);
    const double d = dom.reciprocal_gap();
    const auto rep = f.representation();

    TheoremReport left;
    left.theorem = TheoremId::hh_left;
    left.subject = f.describe();
    left.lhs = minkowski_sum(mean.value, ball(c / 12.0 * (d * d), rep));
    // F(2ab/(a+b)), evaluated through its reciprocal (1/a + 1/b)/2.
    left.rhs = f.eval_at_reciprocal(0.5 * (1.0 / dom.a() + 1.0 / dom.b()));
    left.error_budget = mean.error_budget;
    left.verdict = includes(left.lhs, left.rhs, opts.tol, mean.error_budget);
    left.inputs = {{"c", c}, {"a", dom.a()}, {"b", dom.b()}, {"tol", opts.tol}};
    left.diagnostics["nodes"] = static_cast<double>(mean.nodes_used);

    TheoremReport right = left;
    right.theorem = TheoremId::hh_right;
    right.lhs = minkowski_sum(scale(0.5, minkowski_sum(f.eval(dom.a()), f.eval(dom.b()))),
                              ball(c / 6.0 * (d * d), rep));
    right.rhs = mean.value;
    right.verdict = includes(right.lhs, right.rhs, opts.tol, mean.error_budget);

    left.seconds = right.seconds = seconds_since(start);
    return {left, right};
}

TheoremReport check_thm33(const SetValuedFn& f, const SetValuedFn& g, double c,
                          const HarmonicDomain& dom, const QuadratureSpec& q,
                          const CheckOptions& opts)
{
    require_modulus(c);
    const auto start = Clock::now();
    const auto e = endpoints(f, g, dom);
    const auto rhs = reflected_product_integral(f, g, dom, q, opts.threads);
    auto r = product_report(TheoremId::thm33, pair_subject(f, g), statement_lhs(e, c), rhs, c,
                            dom, opts);
    add_alternate(r, "proof_form", thm33_proof_lhs(e, c), opts);
    r.seconds = seconds_since(start);
    return r;
}

TheoremReport check_thm35(const SetValuedFn& f, const SetValuedFn& g, double c,
                          const HarmonicDomain& dom, const QuadratureSpec& q,
                          const CheckOptions& opts)
{
    require_modulus(c);
    const auto start = Clock::now();
    const auto e = endpoints(f, g, dom);
    const auto rhs = plain_product_integral(f, g, dom, q, opts.threads);
    auto r = product_report(TheoremId::thm35, pair_subject(f, g), statement_lhs(e, c), rhs, c,
                            dom, opts);
    add_alternate(r, "proof_form", thm35_proof_lhs(e, c), opts);
    r.seconds = seconds_since(start);
    return r;
}

TheoremReport check_cor34(const SetValuedFn& f, double c, const HarmonicDomain& dom,
                          const QuadratureSpec& q, const CheckOptions& opts)
{
    require_modulus(c);
    const auto start = Clock::now();
    const auto e = endpoints(f, f, dom);
    const auto rhs = reflected_product_integral(f, f, dom, q, opts.threads);
    auto r = product_report(TheoremId::cor34, f.describe(), cor34_lhs(e, c), rhs, c, dom, opts);
    const Interval substituted = statement_lhs(e, c);
    add_alternate(r, "theorem_substitution", substituted, opts);
    r.diagnostics["bitwise_equal_to_substitution"] =
        ConvexSet(substituted) == r.lhs ? 1.0 : 0.0;
    r.seconds = seconds_since(start);
    return r;
}

TheoremReport check_cor36(const SetValuedFn& f, double c, const HarmonicDomain& dom,
                          const QuadratureSpec& q, const CheckOptions& opts)
{
    require_modulus(c);
    const auto start = Clock::now();
    const auto e = endpoints(f, f, dom);
    const auto rhs = plain_product_integral(f, f, dom, q, opts.threads);
    auto r = product_report(TheoremId::cor36, f.describe(), statement_lhs(e, c), rhs, c, dom, opts);
    add_alternate(r, "printed", cor36_printed_lhs(e, c), opts);
    r.seconds = seconds_since(start);
    return r;
}

TheoremReport run_theorem(TheoremId id, const SetValuedFn& f, const SetValuedFn& g,
                          const CheckRequest& req)
{
    const auto& o = req.options;
    switch (id) {
    case TheoremId::def_shc: return check_strongly_harmonic_convex(f, req.c, req.grid, o);
    case TheoremId::def_mid: return check_strongly_harmonic_midconvex(f, req.c, req.grid, o);
    case TheoremId::lemma_i:
        return check_lemma_shift(f, req.c, req.grid, o, ShiftDirection::both, false);
    case TheoremId::lemma_ii:
        return check_lemma_shift(f, req.c, req.grid, o, ShiftDirection::both, true);
    case TheoremId::prop_31: return check_prop31(f, req.c, req.grid, o);
    case TheoremId::nikodem_left:
        return check_nikodem(reciprocal_transform(f), req.c, req.quadrature, o).first;
    case TheoremId::nikodem_right:
        return check_nikodem(reciprocal_transform(f), req.c, req.quadrature, o).second;
    case TheoremId::hh_left:
        return check_hh(f, req.c, f.harmonic_domain(), req.quadrature, o).first;
    case TheoremId::hh_right:
        return check_hh(f, req.c, f.harmonic_domain(), req.quadrature, o).second;
    case TheoremId::thm33:
        return check_thm33(f, g, req.c, f.harmonic_domain(), req.quadrature, o);
    case TheoremId::cor34: return check_cor34(f, req.c, f.harmonic_domain(), req.quadrature, o);
    case TheoremId::thm35:
        return check_thm35(f, g, req.c, f.harmonic_domain(), req.quadrature, o);
    case TheoremId::cor36: return check_cor36(f, req.c, f.harmonic_domain(), req.quadrature, o);
    }
    throw ParameterError("unhandled theorem id");
}

} // namespace hhset
