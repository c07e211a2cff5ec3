#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hhset {

/// Closed interval [lo, hi], the compact convex subsets of the real line.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    /// Throws InvalidSet when lo > hi or an endpoint is NaN.
    Interval(double lo_, double hi_);

    double width() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

using Vec2 = std::array<double, 2>;

/// A compact convex subset of the plane stored through its support function
/// sampled on the directions u_i = (cos(2 pi i / M), sin(2 pi i / M)).
///
/// The support vector is the object: inclusion and distance are computed on
/// it directly. Every construction offered here (points, balls, Minkowski sums,
/// nonnegative scalings) keeps the sampled values equal to the true support
/// function, so no polytope is ever reconstructed.
class SupportSet {
public:
    explicit SupportSet(std::vector<double> support);

    static SupportSet point(const Vec2& p, std::size_t grid_size);
    static SupportSet disc(const Vec2& center, double radius, std::size_t grid_size);
    static Vec2 direction(std::size_t index, std::size_t grid_size);

    std::size_t grid_size() const { return support_.size(); }
    std::span<const double> support() const { return support_; }
    double operator[](std::size_t i) const { return support_[i]; }

    bool operator==(const SupportSet&) const = default;

private:
    std::vector<double> support_;
};

using ConvexSet = std::variant<Interval, SupportSet>;

enum class SetKind { interval, support };

inline constexpr std::size_t kDefaultGridSize = 64;

/// Representation tag used when a set has to be created from scratch.
struct Representation {
    SetKind kind = SetKind::interval;
    std::size_t grid_size = kDefaultGridSize;

    static Representation of(const ConvexSet& s);
    bool operator==(const Representation&) const = default;
};

SetKind kind_of(const ConvexSet& s);

/// Where an inclusion slack is attained.
struct Witness {
    enum class Kind { lower, upper, direction };
    Kind kind = Kind::lower;
    std::size_t index = 0;

    std::string label() const;
    static Witness parse(const std::string& label);
    bool operator==(const Witness&) const = default;
};

/// Outcome of testing A subset-of B.
///
/// slack is the raw signed margin (min over endpoints / directions of h_B - h_A).
/// tolerance_used = tol * (1 + max |h_B|) + absolute allowance, and
/// holds <=> slack >= -tolerance_used.
struct InclusionVerdict {
    bool holds = true;
    double slack = 0.0;
    Witness witness;
    double tolerance_used = 0.0;

    bool operator==(const InclusionVerdict&) const = default;
};

ConvexSet minkowski_sum(const ConvexSet& a, const ConvexSet& b);
Interval minkowski_sum(const Interval& a, const Interval& b);

/// lambda * A for lambda >= 0.
ConvexSet scale(double lambda, const ConvexSet& a);
Interval scale(double lambda, const Interval& a);

ConvexSet ball(double radius, Representation rep);
Interval interval_ball(double radius);

/// Tests A subset-of B. absolute_allowance widens the tolerance additively
/// (quadrature error budgets are absorbed this way).
InclusionVerdict includes(const ConvexSet& a, const ConvexSet& b, double tol,
                          double absolute_allowance = 0.0);

/// Moore product. Throws UnsupportedProduct for SupportSet operands.
Interval interval_product(const Interval& a, const Interval& b);
Interval interval_product(const ConvexSet& a, const ConvexSet& b);

double hausdorff(const ConvexSet& a, const ConvexSet& b);

/// Endpoints (lo, hi) or the support vector, flattened.
std::vector<double> components(const ConvexSet& s);
ConvexSet from_components(Representation rep, std::span<const double> values);

std::string to_string(const ConvexSet& s);

} // namespace hhset
