#include "confrac/conformable_calc.hpp"

#include "confrac/errors.hpp"
#include "confrac/hermite.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace confrac {

namespace {

constexpr int kMaxNewtonIterations = 100;

void require_nodes(int n) {
    if (n < 1) {
        throw MalformedInput("quadrature needs at least one node, got " + std::to_string(n));
    }
}

bool is_bijective_power(const Rational& alpha) {
    return has_odd_denominator(alpha) && mpz_odd_p(alpha.get_num_mpz_t()) != 0;
}

} // namespace

QuadratureRule gauss_legendre(int n) {
    require_nodes(n);
    QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < kMaxNewtonIterations; ++it) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            dp = n * (z * p1 - p2) / (z * z - 1.0);
            const double step = p1 / dp;
            z -= step;
            if (std::abs(step) < 1e-15) {
                break;
            }
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

QuadratureRule gauss_hermite(int n) {
    require_nodes(n);
    const double pim4 = std::pow(std::numbers::pi, -0.25);
    QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
    // Nodes are symmetric; compute the nonnegative half, largest first.
    std::vector<double> z_found;
    const int half = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * z_found[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * z_found[1];
        } else {
            z = 2.0 * z - z_found[i - 2];
        }
        double pp = 0.0;
        for (int it = 0; it < kMaxNewtonIterations; ++it) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double step = p1 / pp;
            z -= step;
            if (std::abs(step) < 3e-15 * std::max(1.0, std::abs(z))) {
                break;
            }
        }
        z_found.push_back(z);
        rule.nodes[i] = z;
        rule.nodes[n - 1 - i] = -z;
        rule.weights[i] = 2.0 / (pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

double t_alpha_numeric(const RealFunction& f, double x, const Rational& alpha, double a) {
    require_valid_alpha(alpha);
    if (!(x > a)) {
        throw DomainError("conformable derivative needs x > a (x = " + std::to_string(x) +
                          ", a = " + std::to_string(a) + ")");
    }
    const double h = std::max(1e-6, 1e-8 * std::abs(x));
    const double slope = (f(x + h) - f(x - h)) / (2.0 * h);
    return std::pow(x - a, 1.0 - to_double(alpha)) * slope;
}

double integral_alpha(const RealFunction& f, double a, double b, const Rational& alpha, QuadratureSpec spec) {
    require_valid_alpha(alpha);
    if (spec.mode != QuadratureSpec::Mode::finite_interval_weighted) {
        throw MalformedInput("integral_alpha integrates over a finite interval; "
                             "use gaussian_integral_alpha for the real line");
    }
    if (!(a < b)) {
        throw DomainError("integral_alpha needs a < b");
    }
    const double al = to_double(alpha);
    const double inv_alpha = to_double(1 / alpha);
    const double upper = std::pow(b - a, al);
    const auto rule = gauss_legendre(spec.node_count);
    const double half = 0.5 * upper;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = half * (rule.nodes[i] + 1.0);
        sum += rule.weights[i] * f(a + std::pow(u, inv_alpha));
    }
    return half * sum / al;
}

double gaussian_integral_alpha(const RealFunction& f, const Rational& alpha, QuadratureSpec spec) {
    require_valid_alpha(alpha);
    if (!is_bijective_power(alpha)) {
        throw UnsupportedAlpha("the real-line conformable integral needs alpha = p/q with p, q odd; got " +
                               to_string(alpha));
    }
    const Rational inv_alpha = 1 / alpha;
    const auto rule = gauss_hermite(spec.node_count);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(real_power(rule.nodes[i], inv_alpha));
    }
    return sum / to_double(alpha);
}

double hermite_inner_product(int m, int n, const Rational& alpha, std::optional<QuadratureSpec> spec) {
    if (m < 0 || n < 0) {
        throw DomainError("Hermite indices must be nonnegative");
    }
    require_valid_alpha(alpha);
    if (!is_bijective_power(alpha)) {
        throw UnsupportedAlpha("Hermite inner product needs alpha = p/q with p, q odd; got " + to_string(alpha));
    }
    QuadratureSpec rule = spec.value_or(QuadratureSpec{m + n + 8, QuadratureSpec::Mode::hermite_substitution});
    if (rule.mode != QuadratureSpec::Mode::hermite_substitution) {
        throw MalformedInput("Hermite inner product requires the hermite-substitution mode");
    }
    const int minimum = (m + n + 1) / 2 + 1;
    if (rule.node_count < minimum) {
        throw MalformedInput("Hermite inner product of degrees " + std::to_string(m) + ", " +
                             std::to_string(n) + " needs at least " + std::to_string(minimum) + " nodes");
    }
    const auto hm = hermite_from_ode(m, alpha);
    const auto hn = hermite_from_ode(n, alpha);
    return gaussian_integral_alpha([&](double x) { return hm.poly.eval(x) * hn.poly.eval(x); }, alpha, rule);
}

} // namespace confrac
