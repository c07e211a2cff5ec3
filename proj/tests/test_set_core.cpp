#include "hhset/errors.hpp"
#include "hhset/set_core.hpp"

#include <doctest.h>

#include <random>

using namespace hhset;

namespace {

Interval iv(const ConvexSet& s) { return std::get<Interval>(s); }

SupportSet sup(const ConvexSet& s) { return std::get<SupportSet>(s); }

} // namespace

TEST_CASE("minkowski sum of intervals")
{
    CHECK(minkowski_sum(Interval(1, 2), Interval(3, 5)) == Interval(4, 7));
    CHECK(minkowski_sum(Interval(-1, 1), Interval(-1, 1)) == Interval(-2, 2));
    const ConvexSet a = Interval(0.3, 1.7);
    CHECK(minkowski_sum(a, ConvexSet(Interval(0, 0))) == a);
}

TEST_CASE("support sets add componentwise and reject mixed grids")
{
    const auto p = SupportSet::point({1.0, 0.0}, 4);
    const auto d = SupportSet::disc({0.0, 0.0}, 2.0, 4);
    const auto s = sup(minkowski_sum(ConvexSet(p), ConvexSet(d)));
    // Directions (1,0), (0,1), (-1,0), (0,-1).
    CHECK(s[0] == doctest::Approx(3.0));
    CHECK(s[1] == doctest::Approx(2.0));
    CHECK(s[2] == doctest::Approx(1.0));
    CHECK(s[3] == doctest::Approx(2.0));
    CHECK_THROWS_AS(minkowski_sum(ConvexSet(p), ConvexSet(SupportSet::point({0, 0}, 8))),
                    RepresentationMismatch);
    CHECK_THROWS_AS(minkowski_sum(ConvexSet(p), ConvexSet(Interval(0, 1))), RepresentationMismatch);
}

TEST_CASE("scaling")
{
    CHECK(scale(0.0, Interval(3, 7)) == Interval(0, 0));
    CHECK(scale(0.25, Interval(-1, 1)) == Interval(-0.25, 0.25));
    CHECK(scale(2.0, ball(1.0, {SetKind::support, 16})) == ball(2.0, {SetKind::support, 16}));
    CHECK_THROWS_AS(scale(-1.0, Interval(0, 1)), InvalidSet);
}

TEST_CASE("balls")
{
    CHECK(ball(1.0, {SetKind::interval}) == ConvexSet(Interval(-1, 1)));
    CHECK(ball(0.0, {SetKind::interval}) == ConvexSet(Interval(0, 0)));
    const auto b = sup(ball(1.0, {SetKind::support, 4}));
    CHECK(std::vector<double>(b.support().begin(), b.support().end()) ==
          std::vector<double>{1, 1, 1, 1});
    CHECK_THROWS_AS(ball(-0.5, {SetKind::interval}), InvalidSet);
    CHECK_THROWS_AS(Interval(2, 1), InvalidSet);
}

TEST_CASE("inclusion verdicts")
{
    auto v = includes(Interval(1, 2), Interval(0, 3), 0.0);
    CHECK(v.holds);
    CHECK(v.slack == 1.0);

    const ConvexSet a = Interval(0.2, 5.0);
    v = includes(a, a, 0.0);
    CHECK(v.holds);
    CHECK(v.slack == 0.0);

    v = includes(Interval(0, 4), Interval(1, 3), 0.0);
    CHECK_FALSE(v.holds);
    CHECK(v.slack == -1.0);

    // Relative tolerance scales with the containing set's magnitude.
    v = includes(Interval(0, 10.0 + 5e-9), Interval(0, 10), 1e-9);
    CHECK(v.holds);
    CHECK(v.tolerance_used == doctest::Approx(11e-9));
    CHECK(v.witness.label() == "hi");

    const auto small = SupportSet::disc({0, 0}, 1.0, 8);
    const auto big = SupportSet::disc({0.5, 0}, 1.0, 8);
    v = includes(ConvexSet(small), ConvexSet(big), 0.0);
    CHECK_FALSE(v.holds);
    CHECK(v.witness.label() == "dir:4");
    CHECK(v.slack == doctest::Approx(-0.5));
}

TEST_CASE("witness labels round-trip")
{
    for (const std::string label : {"lo", "hi", "dir:0", "dir:63"}) {
        CHECK(Witness::parse(label).label() == label);
    }
    CHECK_THROWS_AS(Witness::parse("middle"), ConfigError);
}

TEST_CASE("Moore products")
{
    CHECK(interval_product(Interval(1, 2), Interval(3, 4)) == Interval(3, 8));
    CHECK(interval_product(Interval(0, 1), Interval(0, 1)) == Interval(0, 1));
    CHECK(interval_product(Interval(-1, 1), Interval(-1, 1)) == Interval(-1, 1));
    CHECK(interval_product(Interval(-2, 1), Interval(3, 4)) == Interval(-8, 4));
    CHECK_THROWS_AS(interval_product(ConvexSet(SupportSet::point({0, 0}, 4)), ConvexSet(Interval(0, 1))),
                    UnsupportedProduct);
}

TEST_CASE("Hausdorff distance")
{
    CHECK(hausdorff(Interval(0, 1), Interval(0, 1)) == 0.0);
    CHECK(hausdorff(Interval(0, 1), Interval(1, 2)) == 1.0);
    CHECK(hausdorff(ball(1.0, {SetKind::support, 64}), ball(3.0, {SetKind::support, 64})) == 2.0);
    CHECK(hausdorff(ball(1.0, {SetKind::interval}), ball(3.0, {SetKind::interval})) == 2.0);
}

TEST_CASE("component round trip")
{
    const ConvexSet d = SupportSet::disc({0.5, -1.0}, 0.75, 16);
    CHECK(from_components(Representation::of(d), components(d)) == d);
    const ConvexSet i = Interval(-3, 2);
    CHECK(from_components(Representation::of(i), components(i)) == i);
}

TEST_CASE("randomized algebra properties")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> pos(0.0, 3.0);
    const auto rand_interval = [&] {
        const double x = u(rng);
        return Interval(x, x + pos(rng));
    };
    for (int i = 0; i < 2000; ++i) {
        const auto a = rand_interval();
        const auto b = rand_interval();
        const double s = pos(rng);
        const double t = pos(rng);
        CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
        CHECK(hausdorff(scale(s, minkowski_sum(a, b)), minkowski_sum(scale(s, a), scale(s, b))) <=
              1e-13);
        CHECK(hausdorff(scale(s + t, a), minkowski_sum(scale(s, a), scale(t, a))) <= 1e-13);

        const auto d1 = SupportSet::disc({u(rng), u(rng)}, pos(rng), 32);
        const auto d2 = SupportSet::disc({u(rng), u(rng)}, pos(rng), 32);
        CHECK(hausdorff(minkowski_sum(ConvexSet(d1), ConvexSet(d2)),
                        minkowski_sum(ConvexSet(d2), ConvexSet(d1))) <= 1e-15);

        // Monotonicity of Moore products under growth of both factors.
        const auto a2 = minkowski_sum(a, interval_ball(pos(rng)));
        const auto b2 = minkowski_sum(b, interval_ball(pos(rng)));
        CHECK(includes(interval_product(a, b), interval_product(a2, b2), 1e-12).holds);
    }
}
