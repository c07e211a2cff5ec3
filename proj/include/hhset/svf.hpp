#pragma once

#include "hhset/set_core.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hhset {

/// The interval [a, b] with 0 < a < b on which harmonic combinations live.
class HarmonicDomain {
public:
    /// Throws DomainError unless 0 < a < b.
    HarmonicDomain(double a, double b);

    double a() const { return a_; }
    double b() const { return b_; }
    bool contains(double x) const { return a_ <= x && x <= b_; }

    /// 2ab / (a + b), the fixed point of the reflection.
    double harmonic_midpoint() const;
    /// |(b - a) / (ab)|, the distance of the endpoints in reciprocal coordinates.
    double reciprocal_gap() const;
    /// [1/b, 1/a].
    HarmonicDomain reciprocal() const;

    bool operator==(const HarmonicDomain&) const = default;

private:
    double a_;
    double b_;
};

/// xy / (tx + (1 - t)y). Returns x at t = 0 and y at t = 1 exactly.
double harmonic_combination(double x, double y, double t);

/// abx / ((a + b)x - ab): the involution of [a, b] swapping a and b.
double harmonic_reflection(const HarmonicDomain& dom, double x);

/// F(x) = [alpha / x^2, K - beta / x^2].
struct QuadraticFamily {
    double alpha = 1.0;
    double beta = 1.0;
    double K = 10.0;
    bool operator==(const QuadraticFamily&) const = default;
};

/// F(x) = {v / x + w} + (K - beta / x^2) B in the plane.
struct DiscFamily {
    Vec2 v{0.0, 0.0};
    Vec2 w{0.0, 0.0};
    double K = 1.0;
    double beta = 1.0;
    std::size_t grid_size = kDefaultGridSize;
    bool operator==(const DiscFamily&) const = default;
};

/// Precomputed sets at increasing nodes, linearly interpolated in between
/// (endpoint-wise for intervals, direction-wise for support sets).
struct SampledFamily {
    std::vector<double> nodes;
    std::vector<ConvexSet> values;
    bool operator==(const SampledFamily&) const = default;
};

using FamilyParams = std::variant<QuadraticFamily, DiscFamily, SampledFamily>;

enum class ConvexitySense { harmonic, arithmetic };

/// Why a family is known to satisfy the strong convexity inclusion.
struct FamilyCertificate {
    double modulus = 0.0;
    ConvexitySense sense = ConvexitySense::harmonic;
    std::string basis;
};

/// A set-valued map on a closed interval, built from a closed-form family and
/// a stack of transforms (reciprocal argument, ball shifts).
///
/// Descriptors are immutable values; eval is pure.
class SetValuedFn {
public:
    struct Reciprocal {
        bool operator==(const Reciprocal&) const = default;
    };
    /// Adds (coefficient / x^2) B. Negative coefficients erode (Minkowski difference).
    struct BallShift {
        double coefficient = 0.0;
        bool operator==(const BallShift&) const = default;
    };
    using Transform = std::variant<Reciprocal, BallShift>;

    SetValuedFn(FamilyParams params, Interval base_domain,
                std::optional<FamilyCertificate> certificate = std::nullopt);

    /// Throws DomainError when x is outside domain() (beyond rounding slop).
    ConvexSet eval(double x) const;
    /// eval(1 / s) computed without forming 1 / s where the family allows it.
    ConvexSet eval_at_reciprocal(double s) const;

    Interval domain() const { return domain_; }
    HarmonicDomain harmonic_domain() const;
    Representation representation() const;
    SetKind kind() const { return representation().kind; }

    const FamilyParams& params() const { return params_; }
    Interval base_domain() const { return base_domain_; }
    const std::vector<Transform>& transforms() const { return transforms_; }
    const std::optional<FamilyCertificate>& certificate() const { return certificate_; }

    /// Degree of the map as a polynomial in 1/x (resp. in x), when it is one.
    std::optional<int> degree_in_reciprocal() const;
    std::optional<int> degree_in_argument() const;

    std::string describe() const;

    SetValuedFn with_transform(Transform t, std::optional<FamilyCertificate> cert) const;
    SetValuedFn without_last_transform(std::optional<FamilyCertificate> cert) const;

private:
    struct Degrees {
        std::optional<int> in_reciprocal;
        std::optional<int> in_argument;
    };
    Degrees degrees() const;
    ConvexSet eval_layer(std::size_t depth, double arg, bool arg_is_reciprocal) const;
    ConvexSet eval_base(double x, double s, bool have_s) const;
    double clamp_to_domain(double x) const;

    FamilyParams params_;
    Interval base_domain_;
    Interval domain_;
    std::vector<Transform> transforms_;
    std::optional<FamilyCertificate> certificate_;
};

SetValuedFn make_quadratic_family(double alpha, double beta, double K, const HarmonicDomain& dom);
SetValuedFn make_disc_family(const Vec2& v, const Vec2& w, double K, double beta,
                             const HarmonicDomain& dom,
                             std::size_t grid_size = kDefaultGridSize);
SetValuedFn make_sampled_family(std::vector<double> nodes, std::vector<ConvexSet> values);
/// Constant map on [lo, hi] (any interval with lo < hi).
SetValuedFn make_constant(const ConvexSet& value, double lo, double hi);

/// G(u) = F(1/u) on [1/b, 1/a]. Applying it twice returns F itself.
SetValuedFn reciprocal_transform(const SetValuedFn& f);

/// G(x) = F(x) + (c / x^2) B, c > 0.
SetValuedFn c_shift(const SetValuedFn& f, double c);

/// Inverse of c_shift: removes (c / x^2) B by Minkowski difference. Only valid
/// when every value of G contains such a ball summand; eval throws InvalidSet
/// otherwise.
SetValuedFn c_unshift(const SetValuedFn& g, double c);

/// True iff hausdorff(F(x), F(theta(x))) <= tol on `grid` equispaced points of dom.
bool is_harmonic_symmetric(const SetValuedFn& f, const HarmonicDomain& dom, std::size_t grid,
                           double tol);

/// Unit-free label for the family kind: "quadratic", "disc" or "sampled".
std::string family_name(const FamilyParams& p);

} // namespace hhset
