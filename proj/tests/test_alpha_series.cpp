#include "confrac/alpha_series.hpp"
#include "confrac/errors.hpp"
#include "confrac/suites.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace confrac;
using confrac::test::Q;
using confrac::test::series;

TEST_SUITE("alpha-series") {

TEST_CASE("construction validates alpha and coefficients") {
    CHECK_THROWS_AS(AlphaSeries(Rational(0), 0, {Rational(1)}), DomainError);
    CHECK_THROWS_AS(AlphaSeries(Q("3/2"), 0, {Rational(1)}), DomainError);
    CHECK_THROWS_AS(AlphaSeries(Rational(1), 0, {}), MalformedInput);
    CHECK_NOTHROW(AlphaSeries(Rational(1), 0, {Rational(1)}));
}

TEST_CASE("order is structural and trailing zeros are kept") {
    const auto s = series("1/2", {"1", "0", "0"});
    CHECK(s.order() == 2);
    CHECK(s.degree() == 0);
    CHECK(series("1/2", {"0", "0"}).degree() == std::nullopt);
    CHECK(s != series("1/2", {"1"}));
}

TEST_CASE("add") {
    SUBCASE("additive identity") {
        const auto a = series("1/2", {"1", "1"});
        CHECK(a + series("1/2", {"0", "0"}) == a);
    }
    SUBCASE("additive inverse of 1/k!") {
        std::vector<Rational> pos;
        std::vector<Rational> neg;
        for (unsigned k = 0; k <= 8; ++k) {
            pos.emplace_back(Rational(1) / Rational(factorial(k)));
            neg.emplace_back(-pos.back());
        }
        const auto sum = AlphaSeries(Q("1/3"), 0, pos) + AlphaSeries(Q("1/3"), 0, neg);
        CHECK(sum.is_zero());
        CHECK(sum.order() == 8);
    }
    SUBCASE("result order is the smaller order") {
        const auto sum = series("1/2", {"1", "2"}) + series("1/2", {"3", "1", "1"});
        CHECK(sum == series("1/2", {"4", "3"}));
    }
    SUBCASE("incompatible operands") {
        CHECK_THROWS_AS(series("1/2", {"1"}) + series("1/3", {"1"}), IncompatibleSeries);
        CHECK_THROWS_AS(series("1/2", {"1"}) + series("1/2", {"1"}, "1"), IncompatibleSeries);
        CHECK_THROWS_AS(series("1/2", {"1"}) * series("1/3", {"1"}), IncompatibleSeries);
    }
}

TEST_CASE("mul") {
    SUBCASE("multiplicative identity") {
        const auto s = series("3/4", {"2", "-1/3", "5"});
        CHECK(s * series("3/4", {"1", "0", "0"}) == s);
    }
    SUBCASE("difference of squares") {
        CHECK(series("1/2", {"1", "1", "0"}) * series("1/2", {"1", "-1", "0"}) == series("1/2", {"1", "0", "-1"}));
    }
    SUBCASE("Gaussian weight times its reciprocal is 1 to the truncation order") {
        const std::size_t n = 12;
        const auto minus = gaussian_weight_series(Q("1/3"), n, WeightSign::minus);
        const auto plus = gaussian_weight_series(Q("1/3"), n, WeightSign::plus);
        // Brute-force coefficient sum on plain vectors.
        const auto expected = oracle::product(minus.coeffs(), plus.coeffs(), n);
        CHECK(expected[0] == 1);
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(expected[k] == 0);
        }
        CHECK(minus * plus == AlphaSeries::constant(Q("1/3"), 0, 1, n));
    }
}

TEST_CASE("deriv_alpha") {
    SUBCASE("constant goes to zero") {
        CHECK(deriv_alpha(series("1/2", {"7"})) == series("1/2", {"0"}));
        CHECK(deriv_alpha(series("1/2", {"7", "0", "0"})) == series("1/2", {"0", "0"}));
    }
    SUBCASE("x^{2 alpha} at alpha = 1/2 gives x^{alpha}") {
        CHECK(deriv_alpha(series("1/2", {"0", "0", "1"})) == series("1/2", {"0", "1"}));
    }
    SUBCASE("twice on x^{2 alpha} gives 2 alpha^2") {
        for (const auto& alpha : test::test_alphas()) {
            const auto mono = AlphaSeries::monomial(alpha, 0, 2, 2);
            CHECK(deriv_alpha(mono, 2) == AlphaSeries::constant(alpha, 0, 2 * alpha * alpha));
        }
    }
    SUBCASE("result coefficient k is alpha (k+1) c_{k+1}") {
        const auto d = deriv_alpha(series("1/3", {"5", "3", "-2", "9/7"}));
        CHECK(d == series("1/3", {"1", "-4/3", "9/7"}));
    }
}

TEST_CASE("eval") {
    CHECK(series("1/2", {"5"}).eval(-3.0) == 5.0);
    CHECK(series("1/2", {"5", "0", "0"}).eval(-3.0) == 5.0);
    CHECK(series("1/2", {"1", "1"}).eval(4.0) == doctest::Approx(3.0).epsilon(1e-15));

    std::vector<Rational> exp_coeffs;
    for (unsigned k = 0; k <= 20; ++k) {
        exp_coeffs.emplace_back(Rational(1) / Rational(factorial(k)));
    }
    CHECK(std::abs(AlphaSeries(Rational(1), 0, exp_coeffs).eval(1.0) - std::numbers::e) < 1e-12);

    SUBCASE("left of x0 needs an odd denominator") {
        CHECK_THROWS_AS(series("1/2", {"0", "1"}).eval(-1.0), DomainError);
        CHECK(series("1/3", {"0", "1"}).eval(-8.0) == doctest::Approx(-2.0).epsilon(1e-14));
        CHECK(series("2/3", {"0", "1"}).eval(-8.0) == doctest::Approx(4.0).epsilon(1e-14));
        CHECK(series("1/3", {"0", "1"}, "1").eval(-7.0) == doctest::Approx(-2.0).epsilon(1e-14));
    }
}

TEST_CASE("scale and monomial_shift") {
    CHECK(monomial_shift(series("1/2", {"1"})) == series("1/2", {"0", "1"}));
    CHECK(monomial_shift(monomial_shift(series("1/2", {"1"}))) == series("1/2", {"0", "0", "1"}));
    CHECK(monomial_shift(series("1/2", {"2", "3"})) == series("1/2", {"0", "2", "3"}));
    CHECK(scale(series("1/2", {"2", "3"}), Q("-1/2")) == series("1/2", {"-1", "-3/2"}));
}

TEST_CASE("gaussian_weight_series") {
    CHECK(gaussian_weight_series(Q("1/2"), 0, WeightSign::minus) == series("1/2", {"1"}));
    CHECK(gaussian_weight_series(Q("1/2"), 4, WeightSign::minus) == series("1/2", {"1", "0", "-1", "0", "1/2"}));
    CHECK(gaussian_weight_series(Q("1/2"), 5, WeightSign::plus) == series("1/2", {"1", "0", "1", "0", "1/2", "0"}));
}

TEST_CASE("from_polynomial and truncated") {
    CHECK(AlphaSeries::from_polynomial(Q("1/2"), 0, test::ints({1, 2}), 3) == series("1/2", {"1", "2", "0", "0"}));
    CHECK_THROWS_AS(AlphaSeries::from_polynomial(Q("1/2"), 0, test::ints({1, 2}), 0), TruncationError);
    CHECK(AlphaSeries::from_polynomial(Q("1/2"), 0, test::ints({1, 0}), 0) == series("1/2", {"1"}));
    CHECK_THROWS_AS(series("1/2", {"1"}).truncated(2), TruncationError);
    CHECK(series("1/2", {"1", "2", "3"}).truncated(1) == series("1/2", {"1", "2"}));
}

TEST_CASE("calculus rules on random series") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational alpha = test::test_alphas()[static_cast<std::size_t>(trial) % 4];
        const Rational x0 = abs(random_rational(rng, 3, 2));
        const auto f = random_series(rng, alpha, x0, 2 + static_cast<std::size_t>(trial % 9));
        const auto g = random_series(rng, alpha, x0, 2 + static_cast<std::size_t>((trial * 5) % 9));
        const auto h = random_series(rng, alpha, x0, 1 + static_cast<std::size_t>((trial * 3) % 9));
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);

        CHECK(deriv_alpha(scale(f, a) + scale(g, b)) == scale(deriv_alpha(f), a) + scale(deriv_alpha(g), b));

        const auto lhs = deriv_alpha(f * g);
        const auto rhs = f * deriv_alpha(g) + g * deriv_alpha(f);
        CHECK(lhs == rhs);
        CHECK(lhs.order() == std::min(f.order(), g.order()) - 1);

        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("power rule on monomials") {
    for (const auto& alpha : test::test_alphas()) {
        for (std::size_t k = 1; k <= 12; ++k) {
            const auto d = deriv_alpha(AlphaSeries::monomial(alpha, Q("2/5"), k, k + 3));
            CHECK(d == AlphaSeries::monomial(alpha, Q("2/5"), k - 1, k + 2, alpha * static_cast<unsigned long>(k)));
        }
    }
}

TEST_CASE("alpha = 1 coincides with classical truncated Taylor arithmetic") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 10);
        const auto f = random_series(rng, 1, 0, n);
        const auto g = random_series(rng, 1, 0, n);
        CHECK((f * g).coeffs() == oracle::product(f.coeffs(), g.coeffs(), n));
        CHECK(deriv_alpha(f).coeffs() == oracle::derivative(f.coeffs()));
    }
}

TEST_CASE("Horner evaluation agrees with term-by-term summation") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational alpha = test::test_alphas()[static_cast<std::size_t>(trial) % 4];
        const auto s = random_series(rng, alpha, Q("1/2"), 6);
        const double x = 0.5 + 0.03 * trial;
        double direct = 0.0;
        for (std::size_t k = 0; k <= s.order(); ++k) {
            direct += to_double(s[k]) * std::pow(x - 0.5, to_double(alpha) * static_cast<double>(k));
        }
        CHECK(s.eval(x) == doctest::Approx(direct).epsilon(1e-12));
    }
}

}
