#include "confrac/ode_solver.hpp"

#include "confrac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace confrac {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) {
        p.pop_back();
    }
}

bool is_zero_poly(const Poly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

// Polynomial division over Q; returns {quotient, remainder}.
std::pair<Poly, Poly> divmod(Poly num, Poly den) {
    trim(num);
    trim(den);
    if (num.size() < den.size()) {
        return {Poly{Rational(0)}, num};
    }
    Poly quot(num.size() - den.size() + 1);
    const Rational& lead = den.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Rational coef = num[i + den.size() - 1] / lead;
        quot[i] = coef;
        if (coef != 0) {
            for (std::size_t j = 0; j < den.size(); ++j) {
                num[i + j] -= coef * den[j];
            }
        }
    }
    num.resize(den.size() > 1 ? den.size() - 1 : 1);
    trim(num);
    trim(quot);
    return {quot, num};
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!is_zero_poly(b)) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    const Rational lead = a.back();
    for (auto& c : a) {
        c /= lead;
    }
    return a;
}

Rational eval_exact(const Poly& p, const Rational& t) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

// Re-expands sum a_k (x - c)^k about x = c + shift.
Poly taylor_shift(const Poly& p, const Rational& shift) {
    Poly out(p);
    const std::size_t n = out.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) {
            out[j - 1] += shift * out[j];
        }
    }
    return out;
}

// True when the polynomial vanishes at t = (x0 - base)^alpha, or when that
// point is undefined.
bool denominator_vanishes(const Poly& den, const Rational& alpha, const Rational& dx) {
    if (auto t = exact_power(dx, alpha)) {
        return eval_exact(den, *t) == 0;
    }
    double t = 0.0;
    try {
        t = real_power(to_double(dx), alpha);
    } catch (const DomainError&) {
        return true;
    }
    double value = 0.0;
    double magnitude = 0.0;
    for (auto it = den.rbegin(); it != den.rend(); ++it) {
        value = value * t + to_double(*it);
        magnitude = magnitude * std::abs(t) + std::abs(to_double(*it));
    }
    return std::abs(value) <= 1e-12 * magnitude;
}

double log_abs(const Rational& c) {
    long num_exp = 0;
    long den_exp = 0;
    const double num = mpz_get_d_2exp(&num_exp, c.get_num_mpz_t());
    const double den = mpz_get_d_2exp(&den_exp, c.get_den_mpz_t());
    return std::log(std::abs(num)) - std::log(den) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

} // namespace

AlphaODE2::AlphaODE2(AlphaSeries p, AlphaSeries q) : p_(std::move(p)), q_(std::move(q)) {
    if (!p_.compatible_with(q_)) {
        throw IncompatibleSeries("p and q must share alpha and x0");
    }
}

RationalAlphaFunction::RationalAlphaFunction(AlphaSeries numerator, AlphaSeries denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (!num_.compatible_with(den_)) {
        throw IncompatibleSeries("numerator and denominator must share alpha and base point");
    }
    if (den_.is_zero()) {
        throw MalformedInput("denominator polynomial is identically zero");
    }
}

RationalAlphaFunction::RationalAlphaFunction(AlphaSeries numerator)
    : RationalAlphaFunction(numerator, AlphaSeries::constant(numerator.alpha(), numerator.x0(), 1)) {}

RationalAlphaFunction RationalAlphaFunction::reduced() const {
    Poly num = num_.coeffs();
    Poly den = den_.coeffs();
    trim(num);
    trim(den);
    if (is_zero_poly(num)) {
        return {AlphaSeries::constant(alpha(), base(), 0), AlphaSeries::constant(alpha(), base(), 1)};
    }
    const Poly g = poly_gcd(num, den);
    auto n = divmod(num, g).first;
    auto d = divmod(den, g).first;
    return {AlphaSeries(alpha(), base(), std::move(n)), AlphaSeries(alpha(), base(), std::move(d))};
}

PointKind classify_point(const RationalAlphaFunction& p, const RationalAlphaFunction& q, const Rational& x0) {
    for (const auto* f : {&p, &q}) {
        const auto r = f->reduced();
        if (denominator_vanishes(r.denominator().coeffs(), f->alpha(), x0 - f->base())) {
            return PointKind::alpha_singular;
        }
    }
    return PointKind::alpha_ordinary;
}

AlphaSeries expand_series(const RationalAlphaFunction& f, const Rational& at, std::size_t order) {
    const auto r = f.reduced();
    Poly num = r.numerator().coeffs();
    Poly den = r.denominator().coeffs();
    if (at != f.base()) {
        if (f.alpha() != 1) {
            throw UnsupportedAlpha("re-centering an alpha-polynomial away from its base point needs alpha = 1");
        }
        num = taylor_shift(num, at - f.base());
        den = taylor_shift(den, at - f.base());
    }
    if (den[0] == 0) {
        throw DomainError("cannot expand about an alpha-singular point " + to_string(at));
    }
    std::vector<Rational> out(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = k < num.size() ? num[k] : Rational(0);
        for (std::size_t j = 1; j <= k && j < den.size(); ++j) {
            acc -= den[j] * out[k - j];
        }
        out[k] = acc / den[0];
    }
    return {f.alpha(), at, std::move(out)};
}

SolveReport solve_series(const AlphaODE2& ode, const Rational& c0, const Rational& c1, std::size_t order,
                         std::size_t radius_window) {
    if (order < 1) {
        throw MalformedInput("solve_series needs order >= 1 to hold both initial coefficients");
    }
    for (const auto& [name, s] : {std::pair{"p", &ode.p()}, std::pair{"q", &ode.q()}}) {
        if (s->order() < order) {
            throw TruncationError(std::string("coefficient ") + name + " is known only through order " +
                                  std::to_string(s->order()) + ", solving to order " + std::to_string(order) +
                                  " needs " + std::to_string(order));
        }
    }
    const Rational& alpha = ode.alpha();
    const auto& p = ode.p();
    const auto& q = ode.q();
    std::vector<Rational> c(order + 1);
    c[0] = c0;
    c[1] = c1;
    for (std::size_t k = 0; k + 2 <= order; ++k) {
        Rational acc = 0;
        for (std::size_t j = 0; j <= k; ++j) {
            if (p[k - j] != 0 && c[j + 1] != 0) {
                acc += alpha * static_cast<unsigned long>(j + 1) * p[k - j] * c[j + 1];
            }
            if (q[k - j] != 0 && c[j] != 0) {
                acc += q[k - j] * c[j];
            }
        }
        const Rational lead = alpha * alpha * static_cast<unsigned long>((k + 2) * (k + 1));
        c[k + 2] = -acc / lead;
    }
    SolveReport report{AlphaSeries(alpha, ode.x0(), std::move(c)), std::nullopt, -1};
    report.residual_ok_through = vanishing_prefix(residual(ode, report.solution));
    try {
        report.radius = radius_estimate(report.solution, radius_window);
    } catch (const InsufficientData&) {
        report.radius = std::nullopt;
    }
    return report;
}

AlphaSeries residual(const AlphaODE2& ode, const AlphaSeries& y) {
    const auto dy = deriv_alpha(y);
    return deriv_alpha(dy) + mul(ode.p(), dy) + mul(ode.q(), y);
}

long vanishing_prefix(const AlphaSeries& r) {
    for (std::size_t k = 0; k <= r.order(); ++k) {
        if (r[k] != 0) {
            return static_cast<long>(k) - 1;
        }
    }
    return static_cast<long>(r.order());
}

double radius_estimate(const AlphaSeries& s, std::size_t window) {
    const auto& c = s.coeffs();
    if (window == 0 || c.size() < window + 2) {
        throw InsufficientData("ratio test over a window of " + std::to_string(window) + " needs at least " +
                               std::to_string(window + 2) + " coefficients, have " + std::to_string(c.size()));
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t last = s.order();
    if (std::all_of(c.end() - static_cast<long>(window), c.end(), [](const Rational& v) { return v == 0; })) {
        return inf;
    }

    struct Step {
        double position;
        double log_ratio;
    };
    std::vector<std::size_t> nonzero;
    for (std::size_t k = last - window; k <= last; ++k) {
        if (c[k] != 0) {
            nonzero.push_back(k);
        }
    }
    // Each nonzero c_i is paired with the next nonzero c_j, j >= i + 2. The
    // two-step span averages out the period-2 oscillation of solutions that
    // mix an even and an odd sub-series.
    std::vector<Step> steps;
    for (std::size_t a = 0; a < nonzero.size(); ++a) {
        const auto i = nonzero[a];
        const auto next = std::find_if(nonzero.begin() + static_cast<long>(a) + 1, nonzero.end(),
                                       [&](std::size_t j) { return j >= i + 2; });
        if (next == nonzero.end()) {
            break;
        }
        const auto j = *next;
        const double gap = static_cast<double>(j - i);
        steps.push_back({0.5 * static_cast<double>(i + j), (log_abs(c[j]) - log_abs(c[i])) / gap});
    }
    if (steps.size() < 3) {
        throw InsufficientData("only " + std::to_string(steps.size()) +
                               " nonzero coefficient ratios in the window; need 3");
    }

    const double log_cutoff = std::log(1e-8);
    if (std::all_of(steps.begin(), steps.end(), [&](const Step& st) { return st.log_ratio < log_cutoff; })) {
        return inf;
    }

    // Least-squares slope of log(ratio) against log(index).
    double mx = 0.0;
    double my = 0.0;
    for (const auto& st : steps) {
        mx += std::log(st.position);
        my += st.log_ratio;
    }
    mx /= static_cast<double>(steps.size());
    my /= static_cast<double>(steps.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& st : steps) {
        const double dx = std::log(st.position) - mx;
        sxy += dx * (st.log_ratio - my);
        sxx += dx * dx;
    }
    if (sxx > 0.0 && sxy / sxx < -0.25) {
        return inf;
    }

    std::vector<double> logs;
    logs.reserve(steps.size());
    for (const auto& st : steps) {
        logs.push_back(st.log_ratio);
    }
    std::sort(logs.begin(), logs.end());
    const std::size_t mid = logs.size() / 2;
    const double log_median = logs.size() % 2 == 1 ? logs[mid] : 0.5 * (logs[mid - 1] + logs[mid]);
    // radius = (1 / L)^{1/alpha}
    return std::exp(-log_median / to_double(s.alpha()));
}

} // namespace confrac
