#include "hhset/svf.hpp"

#include "hhset/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hhset {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Arguments produced by reciprocals and reflections may leave the domain by a
// few ulps; anything further out is a caller error.
constexpr double kDomainSlop = 1e-12;

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

Interval quadratic_value(const QuadraticFamily& q, double s)
{
    const double s2 = s * s;
    double lo = q.alpha * s2;
    double hi = q.K - q.beta * s2;
    if (lo > hi && lo - hi <= 8.0 * kEps * std::max({std::abs(lo), std::abs(hi), 1.0})) {
        lo = hi = 0.5 * (lo + hi);
    }
    return Interval(lo, hi);
}

SupportSet disc_value(const DiscFamily& d, double s)
{
    double radius = d.K - d.beta * s * s;
    if (radius < 0.0 && radius >= -8.0 * kEps * std::max(std::abs(d.K), 1.0)) {
        radius = 0.0;
    }
    const Vec2 center{d.v[0] * s + d.w[0], d.v[1] * s + d.w[1]};
    return SupportSet::disc(center, radius, d.grid_size);
}

ConvexSet sampled_value(const SampledFamily& f, double x)
{
    const auto& nodes = f.nodes;
    auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    std::size_t right = static_cast<std::size_t>(it - nodes.begin());
    right = std::clamp<std::size_t>(right, 1, nodes.size() - 1);
    const std::size_t left = right - 1;
    const double lambda = std::clamp((x - nodes[left]) / (nodes[right] - nodes[left]), 0.0, 1.0);
    const auto cl = components(f.values[left]);
    const auto cr = components(f.values[right]);
    std::vector<double> out(cl.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (1.0 - lambda) * cl[i] + lambda * cr[i];
    }
    return from_components(Representation::of(f.values[left]), out);
}

ConvexSet add_ball(const ConvexSet& base, double radius)
{
    if (radius >= 0.0) {
        return minkowski_sum(base, ball(radius, Representation::of(base)));
    }
    // Minkowski difference with |radius| B.
    auto comps = components(base);
    if (const auto* iv = std::get_if<Interval>(&base)) {
        return Interval(iv->lo - radius, iv->hi + radius);
    }
    for (auto& h : comps) {
        h += radius;
    }
    return SupportSet(std::move(comps));
}

} // namespace

HarmonicDomain::HarmonicDomain(double a, double b) : a_(a), b_(b)
{
    if (!(a > 0.0 && a < b && std::isfinite(b))) {
        throw DomainError("harmonic domain needs 0 < a < b, got [" + fmt(a) + ", " + fmt(b) + "]");
    }
}

double HarmonicDomain::harmonic_midpoint() const { return 2.0 * a_ * b_ / (a_ + b_); }

double HarmonicDomain::reciprocal_gap() const { return (b_ - a_) / (a_ * b_); }

HarmonicDomain HarmonicDomain::reciprocal() const { return HarmonicDomain(1.0 / b_, 1.0 / a_); }

double harmonic_combination(double x, double y, double t)
{
    if (!(x > 0.0 && y > 0.0)) {
        throw DomainError("harmonic combination needs positive points, got " + fmt(x) + ", " + fmt(y));
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("harmonic combination weight outside [0, 1]: " + fmt(t));
    }
    if (t == 0.0) return x;
    if (t == 1.0) return y;
    const double h = x * y / (t * x + (1.0 - t) * y);
    return std::clamp(h, std::min(x, y), std::max(x, y));
}

double harmonic_reflection(const HarmonicDomain& dom, double x)
{
    if (!dom.contains(x)) {
        throw DomainError("reflection argument " + fmt(x) + " outside [" + fmt(dom.a()) + ", " +
                          fmt(dom.b()) + "]");
    }
    const double ab = dom.a() * dom.b();
    const double r = ab * x / ((dom.a() + dom.b()) * x - ab);
    return std::clamp(r, dom.a(), dom.b());
}

SetValuedFn::SetValuedFn(FamilyParams params, Interval base_domain,
                         std::optional<FamilyCertificate> certificate)
    : params_(std::move(params)), base_domain_(base_domain), domain_(base_domain),
      certificate_(std::move(certificate))
{
    if (!(base_domain_.lo < base_domain_.hi)) {
        throw DomainError("function domain must have lo < hi");
    }
    if (const auto* s = std::get_if<SampledFamily>(&params_)) {
        if (s->nodes.size() < 2 || s->nodes.size() != s->values.size()) {
            throw ParameterError("sampled family needs at least two nodes with one set each");
        }
        for (std::size_t i = 1; i < s->nodes.size(); ++i) {
            if (!(s->nodes[i] > s->nodes[i - 1])) {
                throw ParameterError("sampled family nodes must be strictly increasing");
            }
            if (Representation::of(s->values[i]) != Representation::of(s->values[0])) {
                throw RepresentationMismatch("sampled family mixes set representations");
            }
        }
    }
}

HarmonicDomain SetValuedFn::harmonic_domain() const
{
    return HarmonicDomain(domain_.lo, domain_.hi);
}

Representation SetValuedFn::representation() const
{
    return std::visit(
        [](const auto& p) -> Representation {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, QuadraticFamily>) {
                return {SetKind::interval, 0};
            } else if constexpr (std::is_same_v<T, DiscFamily>) {
                return {SetKind::support, p.grid_size};
            } else {
                return Representation::of(p.values.front());
            }
        },
        params_);
}

double SetValuedFn::clamp_to_domain(double x) const
{
    const double slop = kDomainSlop * std::max({std::abs(domain_.lo), std::abs(domain_.hi), 1.0});
    if (!(x >= domain_.lo - slop && x <= domain_.hi + slop)) {
        throw DomainError("argument " + fmt(x) + " outside function domain [" + fmt(domain_.lo) +
                          ", " + fmt(domain_.hi) + "]");
    }
    return std::clamp(x, domain_.lo, domain_.hi);
}

ConvexSet SetValuedFn::eval(double x) const
{
    return eval_layer(transforms_.size(), clamp_to_domain(x), false);
}

ConvexSet SetValuedFn::eval_at_reciprocal(double s) const
{
    if (!(s > 0.0 || s < 0.0)) {
        throw DomainError("reciprocal argument must be nonzero");
    }
    const double x = 1.0 / s;
    const double clamped = clamp_to_domain(x);
    if (clamped != x) {
        return eval_layer(transforms_.size(), clamped, false);
    }
    return eval_layer(transforms_.size(), s, true);
}

ConvexSet SetValuedFn::eval_layer(std::size_t depth, double arg, bool arg_is_reciprocal) const
{
    if (depth == 0) {
        return arg_is_reciprocal ? eval_base(1.0 / arg, arg, true) : eval_base(arg, 0.0, false);
    }
    const auto& t = transforms_[depth - 1];
    if (std::holds_alternative<Reciprocal>(t)) {
        return eval_layer(depth - 1, arg, !arg_is_reciprocal);
    }
    const double c = std::get<BallShift>(t).coefficient;
    const double radius = arg_is_reciprocal ? c * arg * arg : c / (arg * arg);
    return add_ball(eval_layer(depth - 1, arg, arg_is_reciprocal), radius);
}

ConvexSet SetValuedFn::eval_base(double x, double s, bool have_s) const
{
    return std::visit(
        [&](const auto& p) -> ConvexSet {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, QuadraticFamily>) {
                return quadratic_value(p, have_s ? s : 1.0 / x);
            } else if constexpr (std::is_same_v<T, DiscFamily>) {
                return disc_value(p, have_s ? s : 1.0 / x);
            } else {
                return sampled_value(p, x);
            }
        },
        params_);
}

SetValuedFn::Degrees SetValuedFn::degrees() const
{
    std::optional<int> in_recip;
    std::optional<int> in_arg;
    if (const auto* s = std::get_if<SampledFamily>(&params_)) {
        const bool constant = std::all_of(s->values.begin(), s->values.end(),
                                          [&](const ConvexSet& v) { return v == s->values.front(); });
        if (constant) {
            in_recip = 0;
            in_arg = 0;
        } else if (s->nodes.size() == 2) {
            in_arg = 1;
        }
    } else {
        in_recip = 2;
    }
    for (const auto& t : transforms_) {
        if (std::holds_alternative<Reciprocal>(t)) {
            std::swap(in_recip, in_arg);
        } else if (std::get<BallShift>(t).coefficient != 0.0) {
            in_recip = in_recip ? std::optional<int>(std::max(*in_recip, 2)) : std::nullopt;
            in_arg = std::nullopt;
        }
    }
    return {in_recip, in_arg};
}

std::optional<int> SetValuedFn::degree_in_reciprocal() const { return degrees().in_reciprocal; }

std::optional<int> SetValuedFn::degree_in_argument() const { return degrees().in_argument; }

std::string SetValuedFn::describe() const
{
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, QuadraticFamily>) {
                os << "quadratic(alpha=" << p.alpha << ", beta=" << p.beta << ", K=" << p.K << ")";
            } else if constexpr (std::is_same_v<T, DiscFamily>) {
                os << "disc(v=(" << p.v[0] << ", " << p.v[1] << "), w=(" << p.w[0] << ", "
                   << p.w[1] << "), K=" << p.K << ", beta=" << p.beta << ", M=" << p.grid_size
                   << ")";
            } else {
                os << "sampled(" << p.nodes.size() << " nodes)";
            }
        },
        params_);
    for (const auto& t : transforms_) {
        if (std::holds_alternative<Reciprocal>(t)) {
            os << " | reciprocal";
        } else {
            os << " | shift(" << std::get<BallShift>(t).coefficient << ")";
        }
    }
    os << " on [" << domain_.lo << ", " << domain_.hi << "]";
    return os.str();
}

SetValuedFn SetValuedFn::with_transform(Transform t, std::optional<FamilyCertificate> cert) const
{
    SetValuedFn out = *this;
    if (std::holds_alternative<Reciprocal>(t)) {
        if (!(domain_.lo > 0.0)) {
            throw DomainError("reciprocal transform needs a domain inside (0, inf)");
        }
        out.domain_ = Interval(1.0 / domain_.hi, 1.0 / domain_.lo);
    } else if (domain_.lo <= 0.0 && domain_.hi >= 0.0) {
        throw DomainError("ball shift c/x^2 is undefined on a domain containing 0");
    }
    out.transforms_.push_back(t);
    out.certificate_ = std::move(cert);
    return out;
}

SetValuedFn SetValuedFn::without_last_transform(std::optional<FamilyCertificate> cert) const
{
    if (transforms_.empty()) {
        throw ParameterError("no transform to remove");
    }
    SetValuedFn out = *this;
    out.transforms_.pop_back();
    out.domain_ = base_domain_;
    for (const auto& t : out.transforms_) {
        if (std::holds_alternative<Reciprocal>(t)) {
            out.domain_ = Interval(1.0 / out.domain_.hi, 1.0 / out.domain_.lo);
        }
    }
    out.certificate_ = std::move(cert);
    return out;
}

SetValuedFn make_quadratic_family(double alpha, double beta, double K, const HarmonicDomain& dom)
{
    const double worst = std::max((alpha + beta) / (dom.a() * dom.a()),
                                  (alpha + beta) / (dom.b() * dom.b()));
    if (!(K >= worst)) {
        throw ParameterError("quadratic family needs K >= (alpha + beta) / x^2 on the domain: K=" +
                             fmt(K) + " < " + fmt(worst));
    }
    std::optional<FamilyCertificate> cert;
    const double m = std::min(alpha, beta);
    if (m > 0.0) {
        cert = FamilyCertificate{m, ConvexitySense::harmonic,
                                 "endpoints alpha/x^2 and K - beta/x^2 are strongly harmonic "
                                 "convex/concave with moduli alpha and beta"};
    }
    return SetValuedFn(QuadraticFamily{alpha, beta, K}, Interval(dom.a(), dom.b()), cert);
}

SetValuedFn make_disc_family(const Vec2& v, const Vec2& w, double K, double beta,
                             const HarmonicDomain& dom, std::size_t grid_size)
{
    if (grid_size == 0) {
        throw ParameterError("disc family needs a positive grid size");
    }
    const double worst = std::max(beta / (dom.a() * dom.a()), beta / (dom.b() * dom.b()));
    if (!(K >= worst)) {
        throw ParameterError("disc family radius K - beta/x^2 goes negative: K=" + fmt(K) + " < " +
                             fmt(worst));
    }
    std::optional<FamilyCertificate> cert;
    if (beta > 0.0) {
        cert = FamilyCertificate{beta, ConvexitySense::harmonic,
                                 "center is affine in 1/x; radius K - beta/x^2 is strongly "
                                 "harmonic concave with modulus beta"};
    }
    return SetValuedFn(DiscFamily{v, w, K, beta, grid_size}, Interval(dom.a(), dom.b()), cert);
}

SetValuedFn make_sampled_family(std::vector<double> nodes, std::vector<ConvexSet> values)
{
    if (nodes.size() < 2) {
        throw ParameterError("sampled family needs at least two nodes");
    }
    const Interval dom(nodes.front(), nodes.back());
    return SetValuedFn(SampledFamily{std::move(nodes), std::move(values)}, dom);
}

SetValuedFn make_constant(const ConvexSet& value, double lo, double hi)
{
    if (!(lo < hi)) {
        throw DomainError("constant function needs lo < hi");
    }
    return make_sampled_family({lo, hi}, {value, value});
}

SetValuedFn reciprocal_transform(const SetValuedFn& f)
{
    std::optional<FamilyCertificate> cert = f.certificate();
    if (cert) {
        cert->sense = cert->sense == ConvexitySense::harmonic ? ConvexitySense::arithmetic
                                                              : ConvexitySense::harmonic;
    }
    if (!f.transforms().empty() &&
        std::holds_alternative<SetValuedFn::Reciprocal>(f.transforms().back())) {
        return f.without_last_transform(cert);
    }
    return f.with_transform(SetValuedFn::Reciprocal{}, cert);
}

SetValuedFn c_shift(const SetValuedFn& f, double c)
{
    if (!(c > 0.0)) {
        throw ParameterError("c_shift needs c > 0, got " + fmt(c));
    }
    std::optional<FamilyCertificate> cert;
    if (f.certificate() && f.certificate()->sense == ConvexitySense::harmonic &&
        f.certificate()->modulus >= c) {
        cert = FamilyCertificate{f.certificate()->modulus - c, ConvexitySense::harmonic,
                                 "shift of a family certified at modulus " +
                                     fmt(f.certificate()->modulus)};
    }
    return f.with_transform(SetValuedFn::BallShift{c}, cert);
}

SetValuedFn c_unshift(const SetValuedFn& g, double c)
{
    if (!(c > 0.0)) {
        throw ParameterError("c_unshift needs c > 0, got " + fmt(c));
    }
    std::optional<FamilyCertificate> cert;
    if (g.certificate() && g.certificate()->sense == ConvexitySense::harmonic) {
        cert = FamilyCertificate{g.certificate()->modulus + c, ConvexitySense::harmonic,
                                 "erosion of a harmonic convex family"};
    }
    return g.with_transform(SetValuedFn::BallShift{-c}, cert);
}

bool is_harmonic_symmetric(const SetValuedFn& f, const HarmonicDomain& dom, std::size_t grid,
                           double tol)
{
    if (grid == 0) {
        return true;
    }
    for (std::size_t i = 0; i < grid; ++i) {
        double x = grid == 1 ? dom.harmonic_midpoint()
                             : dom.a() + (dom.b() - dom.a()) * static_cast<double>(i) /
                                             static_cast<double>(grid - 1);
        if (i + 1 == grid && grid > 1) {
            x = dom.b();
        }
        if (hausdorff(f.eval(x), f.eval(harmonic_reflection(dom, x))) > tol) {
            return false;
        }
    }
    return true;
}

std::string family_name(const FamilyParams& p)
{
    switch (p.index()) {
    case 0: return "quadratic";
    case 1: return "disc";
    default: return "sampled";
    }
}

} // namespace hhset
