#include "confrac/hermite.hpp"

#include "confrac/errors.hpp"

#include <string>

namespace confrac {

namespace {

void require_nonnegative(int m) {
    if (m < 0) {
        throw DomainError("Hermite order must be nonnegative, got " + std::to_string(m));
    }
}

Integer signed_power_of_two(unsigned exponent) {
    Integer r = 1;
    r <<= exponent;
    return exponent % 2 == 1 ? Integer(-r) : r;
}

} // namespace

AlphaSeries HermitePolyAlpha::padded(std::size_t order) const {
    return AlphaSeries::from_polynomial(poly.alpha(), poly.x0(), poly.coeffs(), order);
}

AlphaODE2 hermite_ode(int m, const Rational& alpha, std::size_t order) {
    require_nonnegative(m);
    auto p = AlphaSeries::monomial(alpha, 0, 1, std::max<std::size_t>(order, 1), -2 * alpha);
    auto q = AlphaSeries::constant(alpha, 0, 2 * alpha * alpha * m, std::max<std::size_t>(order, 1));
    return {std::move(p), std::move(q)};
}

std::pair<Integer, Integer> hermite_initial_conditions(int m) {
    require_nonnegative(m);
    if (m % 2 == 0) {
        // (-2)^{m/2} (m-1)!!
        return {signed_power_of_two(static_cast<unsigned>(m / 2)) * double_factorial(m - 1), 0};
    }
    // -(-2)^{(m+1)/2} m!!
    return {0, -signed_power_of_two(static_cast<unsigned>((m + 1) / 2)) * double_factorial(m)};
}

HermitePolyAlpha hermite_from_ode(int m, const Rational& alpha) {
    require_nonnegative(m);
    const auto [c0, c1] = hermite_initial_conditions(m);
    const std::size_t order = static_cast<std::size_t>(m) + 2;
    const auto report = solve_series(hermite_ode(m, alpha, order), Rational(c0), Rational(c1), order);
    const auto& y = report.solution;
    // Opposite-parity coefficients vanish with the seed, and c_{m+2} carries
    // the factor (m - m).
    if (y[order - 1] != 0 || y[order] != 0) {
        throw Error("Hermite recurrence failed to terminate at degree " + std::to_string(m));
    }
    return {m, y.truncated(static_cast<std::size_t>(m))};
}

HermitePolyAlpha hermite_three_term(int m, const Rational& alpha) {
    require_nonnegative(m);
    const auto order = static_cast<std::size_t>(m);
    AlphaSeries prev = AlphaSeries::constant(alpha, 0, 1, order);
    if (m == 0) {
        return {0, prev};
    }
    AlphaSeries curr = AlphaSeries::monomial(alpha, 0, 1, order, 2);
    for (int k = 1; k < m; ++k) {
        // Degree of H_k is k < m, so the shifted series still fits in `order`.
        auto next = scale(monomial_shift(curr).truncated(order), 2) - scale(prev, 2 * k);
        prev = std::move(curr);
        curr = std::move(next);
    }
    return {m, curr};
}

HermitePolyAlpha hermite_rodrigues(int m, const Rational& alpha, std::optional<std::size_t> order) {
    require_nonnegative(m);
    const auto mm = static_cast<std::size_t>(m);
    const std::size_t n = order.value_or(2 * mm + 8);
    if (n < 2 * mm + 4) {
        throw MalformedInput("Rodrigues construction needs order >= 2m + 4 = " + std::to_string(2 * mm + 4));
    }
    const auto derived = deriv_alpha(gaussian_weight_series(alpha, n, WeightSign::minus), mm);
    const auto product = mul(derived, gaussian_weight_series(alpha, n - mm, WeightSign::plus));
    const Rational factor = pow(Rational(-1) / alpha, static_cast<unsigned>(m));
    const auto full = scale(product, factor);
    for (std::size_t k = mm + 1; k <= full.order(); ++k) {
        if (full[k] != 0) {
            throw RodriguesMismatch("Rodrigues series for m = " + std::to_string(m) +
                                    " has nonzero coefficient " + to_string(full[k]) + " at index " +
                                    std::to_string(k));
        }
    }
    return {m, full.truncated(mm)};
}

std::vector<Integer> classical_hermite(int m) {
    require_nonnegative(m);
    std::vector<Integer> coeffs(static_cast<std::size_t>(m) + 1);
    const Integer mfact = factorial(static_cast<unsigned>(m));
    for (int k = 0; 2 * k <= m; ++k) {
        const int power = m - 2 * k;
        Integer term = mfact / (factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(power)));
        term <<= static_cast<unsigned>(power);
        coeffs[static_cast<std::size_t>(power)] = k % 2 == 0 ? term : Integer(-term);
    }
    return coeffs;
}

HermitePolyAlpha substitution_oracle(int m, const Rational& alpha) {
    const auto classical = classical_hermite(m);
    std::vector<Rational> coeffs(classical.begin(), classical.end());
    return {m, AlphaSeries(alpha, 0, std::move(coeffs))};
}

} // namespace confrac
