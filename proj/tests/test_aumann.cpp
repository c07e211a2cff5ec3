#include "hhset/aumann.hpp"
#include "hhset/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace hhset;

namespace {

Interval iv(const ConvexSet& s) { return std::get<Interval>(s); }

const HarmonicDomain kUnit(1.0, 2.0);

void check_close(const ConvexSet& got, Interval want, double eps)
{
    const auto g = iv(got);
    CHECK(std::abs(g.lo - want.lo) <= eps);
    CHECK(std::abs(g.hi - want.hi) <= eps);
}

} // namespace

TEST_CASE("quadrature spec validation")
{
    CHECK_THROWS_AS((QuadratureSpec{QuadratureRule::gauss_legendre, 1, true}.validate()), QuadratureError);
    CHECK_THROWS_AS((QuadratureSpec{QuadratureRule::composite_simpson, 3, true}.validate()),
                    QuadratureError);
    CHECK_NOTHROW((QuadratureSpec{QuadratureRule::composite_simpson, 2, true}.validate()));
    CHECK(parse_quadrature_rule("composite-simpson") == QuadratureRule::composite_simpson);
    CHECK_THROWS_AS(parse_quadrature_rule("trapezoid"), QuadratureError);
}

TEST_CASE("Gauss-Legendre nodes")
{
    const auto r = gauss_legendre_rule(2);
    CHECK(r.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
    CHECK(r.weights[1] == doctest::Approx(1.0));
    const auto r16 = gauss_legendre_rule(16);
    double sum = 0.0;
    double x4 = 0.0;
    for (std::size_t i = 0; i < r16.nodes.size(); ++i) {
        sum += r16.weights[i];
        x4 += r16.weights[i] * std::pow(r16.nodes[i], 4);
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(x4 == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("plain Aumann integrals")
{
    const QuadratureSpec q;
    check_close(aumann_integral(make_constant(Interval(0, 1), 1, 2), 1, 2, q).value, {0, 1}, 1e-15);
    const auto id = make_sampled_family({0.0, 1.0}, {Interval(0, 0), Interval(1, 1)});
    check_close(aumann_integral(id, 0, 1, q).value, {0.5, 0.5}, 1e-15);
    const auto f = make_quadratic_family(1, 1, 10, kUnit);
    check_close(aumann_integral(f, 1, 2, q).value, {0.5, 9.5}, 1e-13);
    CHECK_THROWS_AS(aumann_integral(f, 0.5, 2, q), DomainError);
}

TEST_CASE("harmonic-weighted integral matches the antiderivative oracle")
{
    const auto f = make_quadratic_family(1, 1, 10, kUnit);
    for (bool substitution : {true, false}) {
        QuadratureSpec q;
        q.substitution = substitution;
        const auto r = weighted_harmonic_integral(f, kUnit, q);
        check_close(r.value, {7.0 / 24.0, 113.0 / 24.0}, substitution ? 1e-13 : 1e-12);
        CHECK(std::isfinite(r.error_budget));
    }
    const auto mean = harmonic_mean_set(f, kUnit, QuadratureSpec{});
    check_close(mean.value, {7.0 / 12.0, 113.0 / 12.0}, 1e-13);
    check_close(weighted_harmonic_integral(make_constant(Interval(0, 1), 1, 2), kUnit, {}).value,
                {0, 0.5}, 1e-15);

    QuadratureSpec simpson{QuadratureRule::composite_simpson, 64, false};
    const auto s = weighted_harmonic_integral(f, kUnit, simpson);
    check_close(s.value, {7.0 / 24.0, 113.0 / 24.0}, s.error_budget + 1e-12);
    CHECK(s.error_budget > 0.0);
    CHECK(s.error_budget < 1e-6);
}

TEST_CASE("substitution identity and additivity")
{
    const auto f = make_quadratic_family(2, 1.5, 12, kUnit);
    const auto g = reciprocal_transform(f);
    QuadratureSpec q;
    const auto w = weighted_harmonic_integral(f, kUnit, q);
    const auto a = aumann_integral(g, 0.5, 1.0, q);
    CHECK(hausdorff(w.value, a.value) <= 1e-12);

    const auto whole = aumann_integral(f, 1.0, 2.0, q);
    const auto left = aumann_integral(f, 1.0, 1.4, q);
    const auto right = aumann_integral(f, 1.4, 2.0, q);
    CHECK(hausdorff(whole.value, minkowski_sum(left.value, right.value)) <=
          whole.error_budget + left.error_budget + right.error_budget + 1e-13);
}

TEST_CASE("linearity over pointwise sums")
{
    // c_shift(F, c) = F + (c/x^2)B pointwise, so its integral is the sum.
    const auto f = make_disc_family({1, 0}, {0, 1}, 3, 1, kUnit);
    const auto shifted = c_shift(f, 0.5);
    const QuadratureSpec q;
    const auto lhs = weighted_harmonic_integral(shifted, kUnit, q);
    // Integral of (0.5/x^2)/x^2 over [1,2] is 0.5 * 7/24 per direction.
    const auto base = weighted_harmonic_integral(f, kUnit, q);
    const auto diff = components(lhs.value);
    const auto b = components(base.value);
    for (std::size_t i = 0; i < diff.size(); ++i) {
        CHECK(diff[i] - b[i] == doctest::Approx(0.5 * 7.0 / 24.0).epsilon(1e-12));
    }
}

TEST_CASE("product integrands and integrals")
{
    const auto f = make_quadratic_family(1, 1, 10, kUnit);
    const auto mid = reflected_product_integrand(f, f, kUnit, 0.5);
    CHECK(mid.lo == doctest::Approx(0.31640625).epsilon(1e-15));
    CHECK(mid.hi == doctest::Approx(89.06640625).epsilon(1e-15));
    // t = 0 sits at x = a, so the reflected factor is G(b).
    CHECK(reflected_product_integrand(f, f, kUnit, 0.0) ==
          interval_product(f.eval(1.0), f.eval(2.0)));
    CHECK(plain_product_integrand(f, f, kUnit, 0.0) == Interval(1, 81));
    const auto end = plain_product_integrand(f, f, kUnit, 1.0);
    CHECK(end.lo == 0.0625);
    CHECK(end.hi == 95.0625);

    const QuadratureSpec q;
    const auto one = make_constant(Interval(1, 1), 1, 2);
    const auto two = make_constant(Interval(2, 2), 1, 2);
    check_close(reflected_product_integral(one, two, kUnit, q).value, {2, 2}, 1e-14);
    check_close(plain_product_integral(one, make_constant(Interval(1, 2), 1, 2), kUnit, q).value,
                {1, 2}, 1e-14);
    const auto c23 = make_constant(Interval(2, 3), 1, 2);
    check_close(plain_product_integral(c23, c23, kUnit, q).value, {4, 9}, 1e-14);

    // Closed forms on the tight family: reflected [47/160, 42541/480], plain [31/80, 21293/240].
    check_close(reflected_product_integral(f, f, kUnit, q).value, {47.0 / 160, 42541.0 / 480}, 1e-12);
    check_close(plain_product_integral(f, f, kUnit, q).value, {31.0 / 80, 21293.0 / 240}, 1e-12);
}

TEST_CASE("product integrals demand positive intervals")
{
    const QuadratureSpec q;
    const auto neg = make_constant(Interval(-1, 1), 1, 2);
    CHECK_THROWS_AS(plain_product_integral(neg, neg, kUnit, q), PositivityError);
    const auto d = make_disc_family({1, 0}, {0, 1}, 3, 1, kUnit);
    CHECK_THROWS_AS(reflected_product_integral(d, d, kUnit, q), UnsupportedProduct);
}

TEST_CASE("results do not depend on the thread count")
{
    const auto f = make_disc_family({1, 0}, {0, 1}, 3, 1, kUnit);
    QuadratureSpec q{QuadratureRule::composite_simpson, 200, false};
    const auto a = weighted_harmonic_integral(f, kUnit, q, 1);
    const auto b = weighted_harmonic_integral(f, kUnit, q, 7);
    CHECK(a.value == b.value);
    CHECK(a.error_budget == b.error_budget);
}

TEST_CASE("Riemann oracle agrees with quadrature")
{
    const auto f = make_quadratic_family(1, 1, 10, kUnit);
    const auto mc = monte_carlo_oracle(f, kUnit, 200000, 1);
    check_close(mc.value, {7.0 / 24.0, 113.0 / 24.0}, mc.error_budget);
    CHECK(mc.error_budget < 1e-4);
    const auto c = monte_carlo_oracle(make_constant(Interval(0, 1), 1, 2), kUnit, 1000, 2,
                                      OracleWeight::none);
    check_close(c.value, {0, 1}, 1e-9);
}
