#pragma once

#include "confrac/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace confrac {

using RealFunction = std::function<double(double)>;

struct QuadratureSpec {
    enum class Mode {
        /// Gauss-Legendre after the substitution u = (x - a)^alpha.
        finite_interval_weighted,
        /// Gauss-Hermite after the substitution u = x^alpha over the real line.
        hermite_substitution,
    };

    int node_count = 64;
    Mode mode = Mode::finite_interval_weighted;
};

/// Nodes and weights of an n-point Gauss rule.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// Gauss-Hermite rule for the weight exp(-u^2) on the real line. Nodes are
/// found by Newton iteration on the normalized Hermite recurrence starting
/// from asymptotic guesses.
QuadratureRule gauss_hermite(int n);

/// Left conformable derivative of a differentiable black-box function,
/// (x - a)^{1 - alpha} f'(x), with f' from a central difference of step
/// h = max(1e-6, 1e-8 |x|). Throws DomainError when x <= a.
double t_alpha_numeric(const RealFunction& f, double x, const Rational& alpha, double a = 0.0);

/// Conformable integral of f over [a, b] with weight (x - a)^{alpha - 1}.
/// The endpoint singularity is removed by u = (x - a)^alpha, giving
/// (1/alpha) * integral_0^{(b-a)^alpha} f(a + u^{1/alpha}) du.
double integral_alpha(const RealFunction& f, double a, double b, const Rational& alpha,
                      QuadratureSpec spec = {});

/// integral_{-inf}^{inf} f(x) exp(-x^{2 alpha}) d_alpha x for alpha = p/q with
/// p and q odd, so that x -> x^alpha is a bijection of the real line. Reduces
/// to (1/alpha) * integral f(u^{1/alpha}) exp(-u^2) du by Gauss-Hermite.
/// Throws UnsupportedAlpha for other alpha.
double gaussian_integral_alpha(const RealFunction& f, const Rational& alpha, QuadratureSpec spec);

/// integral H_m^alpha(x) H_n^alpha(x) exp(-x^{2 alpha}) d_alpha x.
/// Defaults to m + n + 8 Gauss-Hermite nodes; requires at least
/// ceil((m + n) / 2) + 1 so the rule is exact for the polynomial integrand.
double hermite_inner_product(int m, int n, const Rational& alpha,
                             std::optional<QuadratureSpec> spec = std::nullopt);

} // namespace confrac
