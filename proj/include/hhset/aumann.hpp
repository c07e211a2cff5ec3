#pragma once

#include "hhset/set_core.hpp"
#include "hhset/svf.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hhset {

enum class QuadratureRule { gauss_legendre, composite_simpson };

struct QuadratureSpec {
    QuadratureRule rule = QuadratureRule::gauss_legendre;
    /// Gauss-Legendre order, or the number of Simpson panels.
    int order = 16;
    /// Integrate harmonic-weighted integrals in u = 1/x coordinates.
    bool substitution = true;

    /// Throws QuadratureError: Gauss-Legendre needs order >= 2, Simpson an even count >= 2.
    void validate() const;
    bool operator==(const QuadratureSpec&) const = default;
};

std::string to_string(QuadratureRule rule);
QuadratureRule parse_quadrature_rule(const std::string& name);

struct IntegralResult {
    ConvexSet value;
    /// Estimated absolute error, uniform over endpoints / support directions.
    double error_budget = 0.0;
    std::size_t nodes_used = 0;
};

/// Nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre_rule(int order);

/// Aumann integral of F over [lo, hi], computed per endpoint / support direction.
IntegralResult aumann_integral(const SetValuedFn& f, double lo, double hi,
                               const QuadratureSpec& q, unsigned threads = 1);

/// Integral of F(x) / x^2 over [a, b]. With substitution on it is computed as the
/// integral of F(1/u) over [1/b, 1/a].
IntegralResult weighted_harmonic_integral(const SetValuedFn& f, const HarmonicDomain& dom,
                                          const QuadratureSpec& q, unsigned threads = 1);

/// (ab / (b - a)) times weighted_harmonic_integral: the harmonic mean value set.
IntegralResult harmonic_mean_set(const SetValuedFn& f, const HarmonicDomain& dom,
                                 const QuadratureSpec& q, unsigned threads = 1);

/// (ab/(b-a)) * integral of F(x) G(theta(x)) / x^2 over [a, b], computed as the
/// t-integral over [0, 1] of F(x(t)) G(theta(x(t))) with x(t) = ab/(ta + (1-t)b).
/// Interval kind only; every evaluated set must lie in (0, inf).
IntegralResult reflected_product_integral(const SetValuedFn& f, const SetValuedFn& g,
                                          const HarmonicDomain& dom, const QuadratureSpec& q,
                                          unsigned threads = 1);

/// Same as reflected_product_integral with G evaluated at x(t) instead of theta(x(t)).
IntegralResult plain_product_integral(const SetValuedFn& f, const SetValuedFn& g,
                                      const HarmonicDomain& dom, const QuadratureSpec& q,
                                      unsigned threads = 1);

/// Integrand of the product integrals at parameter t in [0, 1].
Interval reflected_product_integrand(const SetValuedFn& f, const SetValuedFn& g,
                                     const HarmonicDomain& dom, double t);
Interval plain_product_integrand(const SetValuedFn& f, const SetValuedFn& g,
                                 const HarmonicDomain& dom, double t);

enum class OracleWeight { none, inverse_square };

inline constexpr std::size_t kOracleSamples = 1'000'000;

/// Stratified Riemann sum in x coordinates (one jittered node per panel, seeded).
/// Independent of the quadrature path; meant for cross-checking.
IntegralResult monte_carlo_oracle(const SetValuedFn& f, const HarmonicDomain& dom,
                                  std::size_t samples, std::uint64_t seed,
                                  OracleWeight weight = OracleWeight::inverse_square);

} // namespace hhset
