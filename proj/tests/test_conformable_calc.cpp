#include "confrac/conformable_calc.hpp"
#include "confrac/errors.hpp"
#include "confrac/suites.hpp"

#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace confrac;
using confrac::test::Q;

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
}

TEST_SUITE("conformable-calc") {

TEST_CASE("t_alpha_numeric") {
    SUBCASE("constant") {
        CHECK(t_alpha_numeric([](double) { return 3.0; }, 2.0, Q("1/2")) == 0.0);
    }
    SUBCASE("x^2 at x = 4, alpha = 1/2 is 2 * 4^{3/2}") {
        CHECK(std::abs(t_alpha_numeric([](double x) { return x * x; }, 4.0, Q("1/2")) - 16.0) < 1e-6);
    }
    SUBCASE("sin at x = 1, alpha = 1/2") {
        const double expected = std::pow(1.0, 0.5) * std::cos(1.0);
        CHECK(std::abs(t_alpha_numeric([](double x) { return std::sin(x); }, 1.0, Q("1/2")) - expected) < 1e-6);
    }
    SUBCASE("base point shifts the weight") {
        // T^a_1 (x - 1)^2 at x = 5 is 2 (x-1)^{2-a} = 2 * 4^{3/2}
        const double v = t_alpha_numeric([](double x) { return (x - 1) * (x - 1); }, 5.0, Q("1/2"), 1.0);
        CHECK(std::abs(v - 16.0) < 1e-6);
    }
    SUBCASE("x must exceed the base point") {
        CHECK_THROWS_AS(t_alpha_numeric([](double x) { return x; }, 0.0, Q("1/2")), DomainError);
        CHECK_THROWS_AS(t_alpha_numeric([](double x) { return x; }, 1.0, Q("1/2"), 2.0), DomainError);
    }
}

TEST_CASE("t_alpha_numeric agrees with the series derivative") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational alpha = test::test_alphas()[static_cast<std::size_t>(trial) % 4];
        const Rational x0 = abs(random_rational(rng, 3, 2));
        const auto f = random_series(rng, alpha, x0, 1 + static_cast<std::size_t>(trial % 4), 5, 2);
        const double x = to_double(x0) + 0.05 + 1.95 * ((trial * 37) % 100) / 100.0;
        const double numeric = t_alpha_numeric([&](double t) { return f.eval(t); }, x, alpha, to_double(x0));
        const double exact = deriv_alpha(f).eval(x);
        CHECK(std::abs(numeric - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("integral_alpha") {
    for (const auto& alpha : test::test_alphas()) {
        CAPTURE(to_string(alpha));
        CHECK(std::abs(integral_alpha([](double) { return 1.0; }, 0.0, 1.0, alpha) - to_double(1 / alpha)) < 1e-12);
        const double al = to_double(alpha);
        CHECK(std::abs(integral_alpha([&](double x) { return std::pow(x, al); }, 0.0, 1.0, alpha) - 0.5 / al) < 1e-10);
    }
    CHECK(std::abs(integral_alpha([](double x) { return x; }, 0.0, 2.0, Rational(1)) - 2.0) < 1e-12);
    // (x - a)^{alpha - 1} weight on a shifted interval: integral_1^5 (x-1)^{-1/2} dx = 4
    CHECK(std::abs(integral_alpha([](double) { return 1.0; }, 1.0, 5.0, Q("1/2")) - 4.0) < 1e-12);
    CHECK_THROWS_AS(integral_alpha([](double) { return 1.0; }, 1.0, 1.0, Q("1/2")), DomainError);
    CHECK_THROWS_AS(integral_alpha([](double) { return 1.0; }, 0.0, 1.0, Q("1/2"), {0}), MalformedInput);
}

TEST_CASE("integral_alpha is linear") {
    const auto f = [](double x) { return std::exp(-x) * std::cos(3 * x); };
    const auto g = [](double x) { return x * x - 0.25; };
    for (const auto& alpha : test::test_alphas()) {
        const double combined = integral_alpha([&](double x) { return 2.5 * f(x) - 1.5 * g(x); }, 0.0, 1.5, alpha);
        const double separate = 2.5 * integral_alpha(f, 0.0, 1.5, alpha) - 1.5 * integral_alpha(g, 0.0, 1.5, alpha);
        CHECK(combined == doctest::Approx(separate).epsilon(1e-12));
    }
}

TEST_CASE("Gauss rules integrate polynomials exactly") {
    const auto gh = gauss_hermite(10);
    double sum0 = 0.0;
    double sum2 = 0.0;
    double sum18 = 0.0;
    for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
        sum0 += gh.weights[i];
        sum2 += gh.weights[i] * gh.nodes[i] * gh.nodes[i];
        sum18 += gh.weights[i] * std::pow(gh.nodes[i], 18);
    }
    CHECK(sum0 == doctest::Approx(kSqrtPi).epsilon(1e-14));
    CHECK(sum2 == doctest::Approx(kSqrtPi / 2).epsilon(1e-14));
    // integral u^18 e^{-u^2} = Gamma(19/2)
    CHECK(sum18 == doctest::Approx(std::tgamma(9.5)).epsilon(1e-12));

    const auto gl = gauss_legendre(7);
    double sum = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        sum += gl.weights[i] * std::pow(gl.nodes[i], 12);
    }
    CHECK(sum == doctest::Approx(2.0 / 13.0).epsilon(1e-14));
    CHECK(gauss_hermite(1).nodes.at(0) == 0.0);
}

TEST_CASE("hermite_inner_product") {
    CHECK(hermite_inner_product(0, 0, Q("1/3")) == doctest::Approx(3 * kSqrtPi).epsilon(1e-13));
    CHECK(hermite_inner_product(0, 0, Q("1/3")) == doctest::Approx(5.317361).epsilon(1e-6));
    CHECK(std::abs(hermite_inner_product(1, 0, Q("1/3"))) < 1e-10);
    CHECK(hermite_inner_product(2, 2, Q("1/3")) == doctest::Approx(24 * kSqrtPi).epsilon(1e-12));
    CHECK(hermite_inner_product(2, 2, Q("1/3")) == doctest::Approx(42.538892).epsilon(1e-7));

    SUBCASE("symmetric in (m, n)") {
        for (int m = 0; m <= 6; ++m) {
            for (int n = 0; n <= 6; ++n) {
                const double a = hermite_inner_product(m, n, Q("1/5"));
                const double b = hermite_inner_product(n, m, Q("1/5"));
                CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
            }
        }
    }
    SUBCASE("alpha = 1 reproduces classical orthogonality") {
        for (int n = 0; n <= 8; ++n) {
            const double expected = std::ldexp(std::tgamma(n + 1.0), n) * kSqrtPi;
            CHECK(hermite_inner_product(n, n, Rational(1)) == doctest::Approx(expected).epsilon(1e-12));
            CHECK(std::abs(hermite_inner_product(n, n + 1, Rational(1))) < 1e-8 * expected);
        }
    }
    SUBCASE("unsupported alpha and bad node counts") {
        CHECK_THROWS_AS(hermite_inner_product(1, 1, Q("1/2")), UnsupportedAlpha);
        CHECK_THROWS_AS(hermite_inner_product(1, 1, Q("2/3")), UnsupportedAlpha);
        CHECK_THROWS_AS(hermite_inner_product(4, 4, Q("1/3"), QuadratureSpec{4, QuadratureSpec::Mode::hermite_substitution}),
                        MalformedInput);
        CHECK_NOTHROW(hermite_inner_product(4, 4, Q("1/3"), QuadratureSpec{5, QuadratureSpec::Mode::hermite_substitution}));
        CHECK_THROWS_AS(hermite_inner_product(-1, 0, Q("1/3")), DomainError);
    }
}

TEST_CASE("gaussian_integral_alpha of the weight alone") {
    // integral e^{-x^{2a}} d_a x = sqrt(pi) / a
    for (const char* a : {"1", "1/3", "1/5", "3/5"}) {
        const Rational alpha = Q(a);
        const double v = gaussian_integral_alpha([](double) { return 1.0; }, alpha,
                                                 {8, QuadratureSpec::Mode::hermite_substitution});
        CHECK(v == doctest::Approx(kSqrtPi / to_double(alpha)).epsilon(1e-14));
    }
}

}
