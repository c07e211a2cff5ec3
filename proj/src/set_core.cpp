#include "hhset/set_core.hpp"

#include "hhset/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hhset {

namespace {

const SupportSet& as_support(const ConvexSet& s) { return std::get<SupportSet>(s); }

void require_same_representation(const ConvexSet& a, const ConvexSet& b, const char* op)
{
    if (a.index() != b.index()) {
        throw RepresentationMismatch(std::string(op) + ": interval and support-set operands");
    }
    if (std::holds_alternative<SupportSet>(a) &&
        as_support(a).grid_size() != as_support(b).grid_size()) {
        throw RepresentationMismatch(std::string(op) + ": support grids of size " +
                                     std::to_string(as_support(a).grid_size()) + " and " +
                                     std::to_string(as_support(b).grid_size()));
    }
}

void require_nonnegative(double lambda, const char* what)
{
    if (!(lambda >= 0.0)) {
        throw InvalidSet(std::string(what) + " must be nonnegative, got " + std::to_string(lambda));
    }
}

} // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_)
{
    if (!(lo <= hi)) {
        std::ostringstream os;
        os.precision(17);
        os << "interval with lo > hi: [" << lo << ", " << hi << "]";
        throw InvalidSet(os.str());
    }
}

SupportSet::SupportSet(std::vector<double> support) : support_(std::move(support))
{
    if (support_.empty()) {
        throw InvalidSet("support set needs a positive grid size");
    }
}

Vec2 SupportSet::direction(std::size_t index, std::size_t grid_size)
{
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(index) /
                         static_cast<double>(grid_size);
    return {std::cos(angle), std::sin(angle)};
}

SupportSet SupportSet::point(const Vec2& p, std::size_t grid_size)
{
    return disc(p, 0.0, grid_size);
}

SupportSet SupportSet::disc(const Vec2& center, double radius, std::size_t grid_size)
{
    require_nonnegative(radius, "disc radius");
    if (grid_size == 0) {
        throw InvalidSet("support set needs a positive grid size");
    }
    std::vector<double> h(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const Vec2 u = direction(i, grid_size);
        h[i] = center[0] * u[0] + center[1] * u[1] + radius;
    }
    return SupportSet(std::move(h));
}

Representation Representation::of(const ConvexSet& s)
{
    if (const auto* sup = std::get_if<SupportSet>(&s)) {
        return {SetKind::support, sup->grid_size()};
    }
    return {SetKind::interval, 0};
}

SetKind kind_of(const ConvexSet& s)
{
    return std::holds_alternative<Interval>(s) ? SetKind::interval : SetKind::support;
}

std::string Witness::label() const
{
    switch (kind) {
    case Kind::lower: return "lo";
    case Kind::upper: return "hi";
    case Kind::direction: return "dir:" + std::to_string(index);
    }
    return "lo";
}

Witness Witness::parse(const std::string& label)
{
    if (label == "lo") return {Kind::lower, 0};
    if (label == "hi") return {Kind::upper, 0};
    if (label.rfind("dir:", 0) == 0) {
        return {Kind::direction, static_cast<std::size_t>(std::stoull(label.substr(4)))};
    }
    throw ConfigError("unknown witness label '" + label + "'");
}

Interval minkowski_sum(const Interval& a, const Interval& b)
{
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

ConvexSet minkowski_sum(const ConvexSet& a, const ConvexSet& b)
{
    require_same_representation(a, b, "minkowski_sum");
    if (const auto* ia = std::get_if<Interval>(&a)) {
        return minkowski_sum(*ia, std::get<Interval>(b));
    }
    const auto& sa = as_support(a);
    const auto& sb = as_support(b);
    std::vector<double> h(sa.grid_size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] = sa[i] + sb[i];
    }
    return SupportSet(std::move(h));
}

Interval scale(double lambda, const Interval& a)
{
    require_nonnegative(lambda, "scale factor");
    return Interval(lambda * a.lo, lambda * a.hi);
}

ConvexSet scale(double lambda, const ConvexSet& a)
{
    if (const auto* ia = std::get_if<Interval>(&a)) {
        return scale(lambda, *ia);
    }
    require_nonnegative(lambda, "scale factor");
    const auto& sa = as_support(a);
    std::vector<double> h(sa.grid_size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] = lambda * sa[i];
    }
    return SupportSet(std::move(h));
}

Interval interval_ball(double radius)
{
    require_nonnegative(radius, "ball radius");
    return Interval(-radius, radius);
}

ConvexSet ball(double radius, Representation rep)
{
    if (rep.kind == SetKind::interval) {
        return interval_ball(radius);
    }
    require_nonnegative(radius, "ball radius");
    if (rep.grid_size == 0) {
        throw InvalidSet("support set needs a positive grid size");
    }
    return SupportSet(std::vector<double>(rep.grid_size, radius));
}

InclusionVerdict includes(const ConvexSet& a, const ConvexSet& b, double tol,
                          double absolute_allowance)
{
    require_same_representation(a, b, "includes");
    InclusionVerdict v;
    double scale_ref = 0.0;
    if (const auto* ia = std::get_if<Interval>(&a)) {
        const auto& ib = std::get<Interval>(b);
        const double upper = ib.hi - ia->hi;
        const double lower = ia->lo - ib.lo;
        if (lower <= upper) {
            v.slack = lower;
            v.witness = {Witness::Kind::lower, 0};
        } else {
            v.slack = upper;
            v.witness = {Witness::Kind::upper, 0};
        }
        scale_ref = std::max(std::abs(ib.lo), std::abs(ib.hi));
    } else {
        const auto& sa = as_support(a);
        const auto& sb = as_support(b);
        v.slack = sb[0] - sa[0];
        v.witness = {Witness::Kind::direction, 0};
        for (std::size_t i = 0; i < sa.grid_size(); ++i) {
            const double d = sb[i] - sa[i];
            if (d < v.slack) {
                v.slack = d;
                v.witness.index = i;
            }
            scale_ref = std::max(scale_ref, std::abs(sb[i]));
        }
    }
    v.tolerance_used = tol * (1.0 + scale_ref) + absolute_allowance;
    v.holds = v.slack >= -v.tolerance_used;
    return v;
}

Interval interval_product(const Interval& a, const Interval& b)
{
    const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval interval_product(const ConvexSet& a, const ConvexSet& b)
{
    const auto* ia = std::get_if<Interval>(&a);
    const auto* ib = std::get_if<Interval>(&b);
    if (ia == nullptr || ib == nullptr) {
        throw UnsupportedProduct("set products are only defined for intervals");
    }
    return interval_product(*ia, *ib);
}

double hausdorff(const ConvexSet& a, const ConvexSet& b)
{
    require_same_representation(a, b, "hausdorff");
    if (const auto* ia = std::get_if<Interval>(&a)) {
        const auto& ib = std::get<Interval>(b);
        return std::max(std::abs(ia->lo - ib.lo), std::abs(ia->hi - ib.hi));
    }
    const auto& sa = as_support(a);
    const auto& sb = as_support(b);
    double d = 0.0;
    for (std::size_t i = 0; i < sa.grid_size(); ++i) {
        d = std::max(d, std::abs(sa[i] - sb[i]));
    }
    return d;
}

std::vector<double> components(const ConvexSet& s)
{
    if (const auto* i = std::get_if<Interval>(&s)) {
        return {i->lo, i->hi};
    }
    const auto h = as_support(s).support();
    return {h.begin(), h.end()};
}

ConvexSet from_components(Representation rep, std::span<const double> values)
{
    if (rep.kind == SetKind::interval) {
        if (values.size() != 2) {
            throw RepresentationMismatch("interval needs exactly two components");
        }
        return Interval(values[0], values[1]);
    }
    if (values.size() != rep.grid_size) {
        throw RepresentationMismatch("support vector length does not match grid size");
    }
    return SupportSet(std::vector<double>(values.begin(), values.end()));
}

std::string to_string(const ConvexSet& s)
{
    std::ostringstream os;
    os.precision(17);
    if (const auto* i = std::get_if<Interval>(&s)) {
        os << "[" << i->lo << ", " << i->hi << "]";
    } else {
        const auto h = as_support(s).support();
        os << "support(" << h.size() << ")[";
        for (std::size_t k = 0; k < h.size(); ++k) {
            os << (k ? ", " : "") << h[k];
        }
        os << "]";
    }
    return os.str();
}

} // namespace hhset
