#include "hhset/aumann.hpp"

#include "hhset/errors.hpp"
#include "hhset/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

namespace hhset {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

using ComponentFn = std::function<std::vector<double>(double)>;

struct ComponentIntegral {
    std::vector<double> value;
    double budget = 0.0;
    std::size_t nodes = 0;
};

// Evaluates fn at every point (possibly in parallel) into index-ordered slots.
std::vector<std::vector<double>> sample(const ComponentFn& fn, const std::vector<double>& points,
                                        unsigned threads)
{
    std::vector<std::vector<double>> out(points.size());
    parallel_for(points.size(), threads, [&](std::size_t i) { out[i] = fn(points[i]); });
    for (const auto& v : out) {
        if (v.size() != out.front().size()) {
            throw RepresentationMismatch("integrand changes representation across nodes");
        }
    }
    return out;
}

// Weighted sum in node order; also returns the weighted sum of magnitudes.
std::pair<std::vector<double>, std::vector<double>>
weighted_sum(const std::vector<std::vector<double>>& samples, const std::vector<double>& weights)
{
    const std::size_t m = samples.front().size();
    std::vector<double> sum(m, 0.0);
    std::vector<double> mag(m, 0.0);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            sum[k] += weights[i] * samples[i][k];
            mag[k] += std::abs(weights[i] * samples[i][k]);
        }
    }
    return {sum, mag};
}

double roundoff_budget(const std::vector<double>& magnitudes)
{
    double m = 0.0;
    for (double v : magnitudes) {
        m = std::max(m, v);
    }
    return 16.0 * kEps * m;
}

ComponentIntegral gauss_legendre(const ComponentFn& fn, double lo, double hi, int order,
                                 unsigned threads)
{
    const auto rule = gauss_legendre_rule(order);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    std::vector<double> points(rule.nodes.size());
    std::vector<double> weights(rule.nodes.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        points[i] = mid + half * rule.nodes[i];
        weights[i] = half * rule.weights[i];
    }
    auto [sum, mag] = weighted_sum(sample(fn, points, threads), weights);
    return {std::move(sum), roundoff_budget(mag), points.size()};
}

ComponentIntegral simpson(const ComponentFn& fn, double lo, double hi, int panels,
                          unsigned threads)
{
    const auto n = static_cast<std::size_t>(panels);
    const double h = (hi - lo) / static_cast<double>(n);
    std::vector<double> points(n + 1);
    std::vector<double> weights(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        points[i] = i == n ? hi : lo + h * static_cast<double>(i);
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        weights[i] = w * h / 3.0;
    }
    const auto samples = sample(fn, points, threads);
    auto [sum, mag] = weighted_sum(samples, weights);
    const std::size_t m = sum.size();

    // (b - a) h^4 / 180 * max |f''''|, with h^4 f'''' read off fourth differences.
    double truncation = 0.0;
    if (n >= 4) {
        for (std::size_t i = 0; i + 4 <= n; ++i) {
            for (std::size_t k = 0; k < m; ++k) {
                const double d4 = samples[i][k] - 4.0 * samples[i + 1][k] +
                                  6.0 * samples[i + 2][k] - 4.0 * samples[i + 3][k] +
                                  samples[i + 4][k];
                truncation = std::max(truncation, std::abs(d4));
            }
        }
        truncation *= (hi - lo) / 180.0;
    } else {
        for (std::size_t k = 0; k < m; ++k) {
            const double trap = 0.5 * h * (samples[0][k] + 2.0 * samples[1][k] + samples[2][k]);
            truncation = std::max(truncation, std::abs(sum[k] - trap));
        }
    }
    return {std::move(sum), truncation + roundoff_budget(mag), points.size()};
}

// polynomial_degree: degree of the integrand in the integration variable, when known.
ComponentIntegral integrate(const ComponentFn& fn, double lo, double hi, const QuadratureSpec& q,
                            std::optional<int> polynomial_degree, unsigned threads)
{
    q.validate();
    if (!(lo < hi)) {
        throw DomainError("integration bounds need lo < hi");
    }
    if (q.rule == QuadratureRule::composite_simpson) {
        return simpson(fn, lo, hi, q.order, threads);
    }
    auto base = gauss_legendre(fn, lo, hi, q.order, threads);
    if (polynomial_degree && *polynomial_degree <= 2 * q.order - 1) {
        return base;
    }
    // Not provably exact: use the doubled rule as the reference for the error estimate.
    const auto fine = gauss_legendre(fn, lo, hi, 2 * q.order, threads);
    double diff = 0.0;
    for (std::size_t k = 0; k < base.value.size(); ++k) {
        diff = std::max(diff, std::abs(base.value[k] - fine.value[k]));
    }
    base.budget += diff;
    base.nodes += fine.nodes;
    return base;
}

IntegralResult to_result(Representation rep, ComponentIntegral ci)
{
    return {from_components(rep, ci.value), ci.budget, ci.nodes};
}

Interval require_positive(const ConvexSet& s, const char* which)
{
    const auto* iv = std::get_if<Interval>(&s);
    if (iv == nullptr) {
        throw UnsupportedProduct("product integrals are only defined for interval-valued maps");
    }
    if (!(iv->lo > 0.0)) {
        throw PositivityError(std::string(which) + " takes value " + to_string(s) +
                              " outside (0, inf)");
    }
    return *iv;
}

std::optional<int> product_degree(const SetValuedFn& f, const SetValuedFn& g)
{
    const auto df = f.degree_in_reciprocal();
    const auto dg = g.degree_in_reciprocal();
    if (df && dg) {
        return *df + *dg;
    }
    return std::nullopt;
}

void require_interval_kind(const SetValuedFn& f, const SetValuedFn& g)
{
    if (f.kind() != SetKind::interval || g.kind() != SetKind::interval) {
        throw UnsupportedProduct("product integrals are only defined for interval-valued maps");
    }
}

// 1 / x(t) = t/b + (1 - t)/a.
double reciprocal_path(const HarmonicDomain& dom, double t)
{
    return t / dom.b() + (1.0 - t) / dom.a();
}

IntegralResult product_integral(const SetValuedFn& f, const SetValuedFn& g,
                                const HarmonicDomain& dom, const QuadratureSpec& q,
                                unsigned threads, bool reflected)
{
    require_interval_kind(f, g);
    const ComponentFn fn = [&](double t) {
        const Interval p = reflected ? reflected_product_integrand(f, g, dom, t)
                                     : plain_product_integrand(f, g, dom, t);
        return std::vector<double>{p.lo, p.hi};
    };
    return to_result({SetKind::interval, 0},
                     integrate(fn, 0.0, 1.0, q, product_degree(f, g), threads));
}

} // namespace

void QuadratureSpec::validate() const
{
    if (rule == QuadratureRule::gauss_legendre && order < 2) {
        throw QuadratureError("Gauss-Legendre order must be >= 2, got " + std::to_string(order));
    }
    if (rule == QuadratureRule::composite_simpson && (order < 2 || order % 2 != 0)) {
        throw QuadratureError("Simpson panel count must be even and >= 2, got " +
                              std::to_string(order));
    }
}

std::string to_string(QuadratureRule rule)
{
    return rule == QuadratureRule::gauss_legendre ? "gauss-legendre" : "composite-simpson";
}

QuadratureRule parse_quadrature_rule(const std::string& name)
{
    if (name == "gauss-legendre") return QuadratureRule::gauss_legendre;
    if (name == "composite-simpson") return QuadratureRule::composite_simpson;
    throw QuadratureError("unknown quadrature rule '" + name + "'");
}

GaussLegendreRule gauss_legendre_rule(int order)
{
    if (order < 1) {
        throw QuadratureError("Gauss-Legendre order must be positive");
    }
    const auto n = static_cast<std::size_t>(order);
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            const double pn = n == 1 ? x : p1;
            const double pm = n == 1 ? 1.0 : p0;
            dp = static_cast<double>(n) * (x * pn - pm) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

IntegralResult aumann_integral(const SetValuedFn& f, double lo, double hi,
                               const QuadratureSpec& q, unsigned threads)
{
    const Interval dom = f.domain();
    if (!(lo >= dom.lo && hi <= dom.hi)) {
        throw DomainError("integration range lies outside the function domain");
    }
    const ComponentFn fn = [&](double x) { return components(f.eval(x)); };
    return to_result(f.representation(), integrate(fn, lo, hi, q, f.degree_in_argument(), threads));
}

IntegralResult weighted_harmonic_integral(const SetValuedFn& f, const HarmonicDomain& dom,
                                          const QuadratureSpec& q, unsigned threads)
{
    const Interval fd = f.domain();
    if (!(dom.a() >= fd.lo && dom.b() <= fd.hi)) {
        throw DomainError("harmonic domain lies outside the function domain");
    }
    if (q.substitution) {
        const ComponentFn fn = [&](double u) { return components(f.eval_at_reciprocal(u)); };
        return to_result(f.representation(),
                         integrate(fn, 1.0 / dom.b(), 1.0 / dom.a(), q, f.degree_in_reciprocal(),
                                   threads));
    }
    const ComponentFn fn = [&](double x) {
        auto c = components(f.eval(x));
        const double w = 1.0 / (x * x);
        for (auto& v : c) {
            v *= w;
        }
        return c;
    };
    return to_result(f.representation(), integrate(fn, dom.a(), dom.b(), q, std::nullopt, threads));
}

IntegralResult harmonic_mean_set(const SetValuedFn& f, const HarmonicDomain& dom,
                                 const QuadratureSpec& q, unsigned threads)
{
    auto r = weighted_harmonic_integral(f, dom, q, threads);
    const double factor = 1.0 / dom.reciprocal_gap();
    r.value = scale(factor, r.value);
    r.error_budget *= factor;
    return r;
}

Interval reflected_product_integrand(const SetValuedFn& f, const SetValuedFn& g,
                                     const HarmonicDomain& dom, double t)
{
    const Interval fv = require_positive(f.eval_at_reciprocal(reciprocal_path(dom, t)), "F");
    // 1 / theta(x(t)) = t/a + (1 - t)/b.
    const double reflected = t / dom.a() + (1.0 - t) / dom.b();
    const Interval gv = require_positive(g.eval_at_reciprocal(reflected), "G");
    return interval_product(fv, gv);
}

Interval plain_product_integrand(const SetValuedFn& f, const SetValuedFn& g,
                                 const HarmonicDomain& dom, double t)
{
    const double s = reciprocal_path(dom, t);
    const Interval fv = require_positive(f.eval_at_reciprocal(s), "F");
    const Interval gv = require_positive(g.eval_at_reciprocal(s), "G");
    return interval_product(fv, gv);
}

IntegralResult reflected_product_integral(const SetValuedFn& f, const SetValuedFn& g,
                                          const HarmonicDomain& dom, const QuadratureSpec& q,
                                          unsigned threads)
{
    return product_integral(f, g, dom, q, threads, true);
}

IntegralResult plain_product_integral(const SetValuedFn& f, const SetValuedFn& g,
                                      const HarmonicDomain& dom, const QuadratureSpec& q,
                                      unsigned threads)
{
    return product_integral(f, g, dom, q, threads, false);
}

IntegralResult monte_carlo_oracle(const SetValuedFn& f, const HarmonicDomain& dom,
                                  std::size_t samples, std::uint64_t seed, OracleWeight weight)
{
    if (samples == 0) {
        throw ParameterError("oracle needs at least one sample");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    const double h = (dom.b() - dom.a()) / static_cast<double>(samples);
    std::vector<double> sum;
    std::vector<double> previous;
    double variation = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = dom.a() + h * (static_cast<double>(i) + jitter(rng));
        auto c = components(f.eval(x));
        if (weight == OracleWeight::inverse_square) {
            const double w = 1.0 / (x * x);
            for (auto& v : c) {
                v *= w;
            }
        }
        if (sum.empty()) {
            sum.assign(c.size(), 0.0);
        } else {
            double step = 0.0;
            for (std::size_t k = 0; k < c.size(); ++k) {
                step = std::max(step, std::abs(c[k] - previous[k]));
            }
            variation += step;
        }
        for (std::size_t k = 0; k < c.size(); ++k) {
            sum[k] += c[k];
        }
        previous = std::move(c);
    }
    double largest = 0.0;
    for (auto& v : sum) {
        v *= h;
        largest = std::max(largest, std::abs(v));
    }
    // Any one-node-per-panel Riemann sum is within h * (total variation) of the
    // integral; the second term covers the naive summation.
    const double budget =
        h * variation + static_cast<double>(samples) * kEps * largest;
    return {from_components(f.representation(), sum), budget, samples};
}

} // namespace hhset
