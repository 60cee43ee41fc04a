#include "confrac/suites.hpp"

#include "confrac/conformable_calc.hpp"
#include "confrac/errors.hpp"
#include "confrac/hermite.hpp"
#include "confrac/ode_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace confrac {

namespace {

const std::vector<Rational>& default_alphas() {
    static const std::vector<Rational> alphas{Rational(1), Rational(1, 2), Rational(1, 3), Rational(3, 4)};
    return alphas;
}

std::vector<Rational> alphas_for(const SuiteOptions& options) {
    if (options.alpha) {
        return {*options.alpha};
    }
    return default_alphas();
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& values) {
    std::uniform_int_distribution<std::size_t> dist(0, values.size() - 1);
    return values[dist(rng)];
}

std::size_t random_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Runs `trial` `count` times and folds the outcome into one check item that
// names the first failing instance.
CheckItem repeated(const std::string& name, int count, const std::function<std::string(int)>& trial) {
    for (int i = 0; i < count; ++i) {
        std::string failure;
        try {
            failure = trial(i);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (!failure.empty()) {
            return {name, false, "instance " + std::to_string(i) + ": " + failure};
        }
    }
    return {name, true, std::to_string(count) + " instances"};
}

std::string describe(const AlphaSeries& s) { return to_json(s).dump(); }

std::string expect_same(const AlphaSeries& lhs, const AlphaSeries& rhs) {
    if (lhs == rhs) {
        return {};
    }
    return describe(lhs) + " != " + describe(rhs);
}

// T^2 y - x^alpha T y - y = 0 about 0.
AlphaODE2 shifted_exponential_ode(const Rational& alpha, std::size_t order) {
    return {AlphaSeries::monomial(alpha, 0, 1, order, -1), AlphaSeries::constant(alpha, 0, -1, order)};
}

// ---------------------------------------------------------------------------

void calculus_rules(SuiteReport& report, const SuiteOptions& options) {
    std::mt19937_64 rng(options.seed);
    const auto alphas = alphas_for(options);
    const int count = options.instances;

    report.checks.push_back(repeated("linearity of T_alpha", count, [&](int) {
        const auto& alpha = pick(rng, alphas);
        const Rational x0 = abs(random_rational(rng, 3, 2));
        const auto order = random_index(rng, 2, 10);
        const auto f = random_series(rng, alpha, x0, order);
        const auto g = random_series(rng, alpha, x0, random_index(rng, 2, 10));
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        return expect_same(deriv_alpha(scale(f, a) + scale(g, b)),
                           scale(deriv_alpha(f), a) + scale(deriv_alpha(g), b));
    }));

    report.checks.push_back(repeated("product rule of T_alpha", count, [&](int) {
        const auto& alpha = pick(rng, alphas);
        const Rational x0 = abs(random_rational(rng, 3, 2));
        const auto f = random_series(rng, alpha, x0, random_index(rng, 2, 10));
        const auto g = random_series(rng, alpha, x0, random_index(rng, 2, 10));
        return expect_same(deriv_alpha(f * g), f * deriv_alpha(g) + g * deriv_alpha(f));
    }));

    report.checks.push_back(repeated("power rule on monomials", count, [&](int) {
        const auto& alpha = pick(rng, alphas);
        const auto k = random_index(rng, 1, 12);
        const auto order = k + random_index(rng, 0, 4);
        const auto mono = AlphaSeries::monomial(alpha, 0, k, order);
        return expect_same(deriv_alpha(mono),
                           AlphaSeries::monomial(alpha, 0, k - 1, order - 1, alpha * static_cast<unsigned long>(k)));
    }));

    report.checks.push_back(repeated("mul commutative and associative", count, [&](int) {
        const auto& alpha = pick(rng, alphas);
        const auto f = random_series(rng, alpha, 0, random_index(rng, 0, 8));
        const auto g = random_series(rng, alpha, 0, random_index(rng, 0, 8));
        const auto h = random_series(rng, alpha, 0, random_index(rng, 0, 8));
        auto failure = expect_same(f * g, g * f);
        if (failure.empty()) {
            failure = expect_same((f * g) * h, f * (g * h));
        }
        return failure;
    }));

    report.checks.push_back(repeated("t_alpha_numeric matches series derivative", count, [&](int) -> std::string {
        const auto& alpha = pick(rng, alphas);
        const Rational x0 = abs(random_rational(rng, 3, 2));
        const auto f = random_series(rng, alpha, x0, random_index(rng, 1, 4), 5, 2);
        const double x = to_double(x0) + std::uniform_real_distribution<double>(0.05, 2.0)(rng);
        const double numeric = t_alpha_numeric([&](double t) { return f.eval(t); }, x, alpha, to_double(x0));
        const double exact = deriv_alpha(f).eval(x);
        if (std::abs(numeric - exact) > 1e-6 * std::max(1.0, std::abs(exact))) {
            std::ostringstream os;
            os.precision(17);
            os << "x = " << x << ": numeric " << numeric << " vs series " << exact;
            return os.str();
        }
        return {};
    }));

    for (const Rational& alpha : {Rational(1, 2), Rational(1, 3), Rational(1)}) {
        const double value = integral_alpha([](double) { return 1.0; }, 0.0, 1.0, alpha);
        const double expected = to_double(1 / alpha);
        report.checks.push_back({"integral of d_alpha x over [0,1] at alpha " + to_string(alpha),
                                 std::abs(value - expected) <= 1e-12,
                                 "value " + std::to_string(value)});
    }
}

// ---------------------------------------------------------------------------

void solver(SuiteReport& report, const SuiteOptions& options) {
    std::mt19937_64 rng(options.seed);
    constexpr std::size_t N = 30;

    for (const auto& alpha : default_alphas()) {
        const auto y = solve_series(shifted_exponential_ode(alpha, 4), 1, 0, 4).solution;
        report.checks.push_back({"T^2y - x^a Ty - y = 0: c2 = 1/(2 alpha^2) at alpha " + to_string(alpha),
                                 y[2] == 1 / (2 * alpha * alpha), "c2 = " + to_string(y[2])});
    }
    {
        const auto y = solve_series(shifted_exponential_ode(Rational(1, 2), 4), 1, 0, 4).solution;
        report.checks.push_back({"T^2y - x^a Ty - y = 0 at alpha 1/2: c2 = 2, c4 = 4/3",
                                 y[2] == 2 && y[4] == Rational(4, 3),
                                 "c2 = " + to_string(y[2]) + ", c4 = " + to_string(y[4])});
    }
    {
        const auto y = solve_series(shifted_exponential_ode(Rational(1), 19), 1, 0, 19).solution;
        std::string failure;
        for (std::size_t k = 0; k <= 19 && failure.empty(); ++k) {
            Rational expected = 0;
            if (k % 2 == 0) {
                expected = Rational(1) / (pow(Rational(2), static_cast<unsigned>(k / 2)) *
                                          Rational(factorial(static_cast<unsigned>(k / 2))));
            }
            if (y[k] != expected) {
                failure = "c" + std::to_string(k) + " = " + to_string(y[k]) + ", expected " + to_string(expected);
            }
        }
        report.checks.push_back({"alpha = 1 solution equals exp(x^2/2) Taylor coefficients", failure.empty(), failure});
    }

    const std::vector<Rational> alphas{Rational(1, 2), Rational(1, 3), Rational(3, 4)};
    const auto random_ode = [&](const Rational& alpha) {
        auto p = AlphaSeries::from_polynomial(alpha, 0, random_series(rng, alpha, 0, random_index(rng, 0, 4)).coeffs(), N);
        auto q = AlphaSeries::from_polynomial(alpha, 0, random_series(rng, alpha, 0, random_index(rng, 0, 4)).coeffs(), N);
        return AlphaODE2(std::move(p), std::move(q));
    };

    report.checks.push_back(repeated("residual vanishes through N-2", options.instances, [&](int) -> std::string {
        const auto ode = random_ode(pick(rng, alphas));
        const auto rep = solve_series(ode, random_rational(rng), random_rational(rng), N);
        if (rep.residual_ok_through != static_cast<long>(N) - 2) {
            return "residual vanishes only through " + std::to_string(rep.residual_ok_through);
        }
        return {};
    }));

    report.checks.push_back(repeated("perturbing c_k moves the first residual to k-2", options.instances,
                                     [&](int) -> std::string {
        const auto ode = random_ode(pick(rng, alphas));
        const auto y = solve_series(ode, random_rational(rng), random_rational(rng), N).solution;
        const auto k = random_index(rng, 2, N);
        auto coeffs = y.coeffs();
        coeffs[k] += 1;
        const long first = vanishing_prefix(residual(ode, AlphaSeries(y.alpha(), y.x0(), coeffs))) + 1;
        if (first != static_cast<long>(k) - 2) {
            return "perturbed c" + std::to_string(k) + ", first nonzero residual at " + std::to_string(first);
        }
        return {};
    }));

    report.checks.push_back(repeated("solution is linear in (c0, c1)", options.instances, [&](int) {
        const auto ode = random_ode(pick(rng, alphas));
        const Rational c0 = random_rational(rng);
        const Rational c1 = random_rational(rng);
        const auto y = solve_series(ode, c0, c1, N).solution;
        const auto e0 = solve_series(ode, 1, 0, N).solution;
        const auto e1 = solve_series(ode, 0, 1, N).solution;
        return expect_same(y, scale(e0, c0) + scale(e1, c1));
    }));

    {
        const auto y = solve_series(shifted_exponential_ode(Rational(1, 2), N), 1, 1, N);
        report.checks.push_back({"entire solution reports infinite radius", y.radius && std::isinf(*y.radius),
                                 to_json(y).at("radius").dump()});
        const auto geometric = AlphaSeries(Rational(1, 2), 0, std::vector<Rational>(N + 1, Rational(1)));
        const double r = radius_estimate(geometric);
        report.checks.push_back({"geometric series reports radius 1", std::abs(r - 1.0) < 1e-12, std::to_string(r)});
    }

    // x^a T y - y = 0 and x^{2a} T^2 y - 2 x^a T y + x^{2a} y = 0, and the same
    // equations with x replaced by x - 1, in normalized form.
    const Rational alpha(1, 2);
    const auto poly = [&](std::vector<Rational> c, const Rational& base) {
        return AlphaSeries(alpha, base, std::move(c));
    };
    struct Case {
        std::string name;
        RationalAlphaFunction p;
        RationalAlphaFunction q;
        Rational base;
    };
    std::vector<Case> cases;
    for (const Rational& base : {Rational(0), Rational(1)}) {
        const std::string shift = base == 0 ? "x" : "(x-1)";
        cases.push_back({shift + "^a T y - y = 0",
                         RationalAlphaFunction(poly({0}, base)),
                         RationalAlphaFunction(poly({-1}, base), poly({0, 1}, base)), base});
        cases.push_back({shift + "^{2a} T^2 y - 2 " + shift + "^a T y + " + shift + "^{2a} y = 0",
                         RationalAlphaFunction(poly({0, -2}, base), poly({0, 0, 1}, base)),
                         RationalAlphaFunction(poly({0, 0, 1}, base), poly({0, 0, 1}, base)), base});
    }
    for (const auto& c : cases) {
        std::string failure;
        for (const Rational& offset : {Rational(1, 3), Rational(1), Rational(5, 2), Rational(9)}) {
            if (classify_point(c.p, c.q, c.base + offset) != PointKind::alpha_ordinary) {
                failure += "x0 = " + to_string(c.base + offset) + " not ordinary; ";
            }
        }
        if (classify_point(c.p, c.q, c.base) != PointKind::alpha_singular) {
            failure += "x0 = " + to_string(c.base) + " not singular; ";
        }
        report.checks.push_back({"classification of " + c.name, failure.empty(), failure});
    }
}

// ---------------------------------------------------------------------------

void hermite(SuiteReport& report, const SuiteOptions& options) {
    const int m_max = options.m_max;
    const auto alphas = alphas_for(options);
    for (const auto& alpha : alphas) {
        const std::string at = " (alpha " + to_string(alpha) + ")";
        report.checks.push_back(repeated("four constructions agree" + at, m_max + 1, [&](int m) -> std::string {
            const auto ode = hermite_from_ode(m, alpha);
            if (auto f = expect_same(ode.poly, hermite_three_term(m, alpha).poly); !f.empty()) {
                return "three-term: " + f;
            }
            if (auto f = expect_same(ode.poly, hermite_rodrigues(m, alpha).poly); !f.empty()) {
                return "Rodrigues: " + f;
            }
            if (auto f = expect_same(ode.poly, substitution_oracle(m, alpha).poly); !f.empty()) {
                return "substitution: " + f;
            }
            return {};
        }));
        for (auto prop : {HermiteProperty::I, HermiteProperty::II, HermiteProperty::III, HermiteProperty::IV,
                          HermiteProperty::V, HermiteProperty::VI}) {
            const auto r = verify_property(prop, std::max(m_max, 1), alpha);
            std::string detail = std::to_string(r.checked) + " identities";
            if (!r.ok()) {
                detail = "m = " + std::to_string(r.failures.front().m) + ": " + r.failures.front().detail;
            }
            report.checks.push_back({"Property " + to_string(prop) + at, r.ok(), detail});
        }
        report.checks.push_back(repeated("H_m solves the Hermite equation" + at, m_max + 1, [&](int m) -> std::string {
            const auto order = static_cast<std::size_t>(m) + 4;
            const auto r = residual(hermite_ode(m, alpha, order), hermite_from_ode(m, alpha).padded(order));
            if (!r.is_zero()) {
                return "residual " + describe(r);
            }
            return {};
        }));
        report.checks.push_back(repeated("leading coefficient 2^m and parity" + at, m_max + 1, [&](int m) -> std::string {
            const auto h = hermite_from_ode(m, alpha).poly;
            if (h[static_cast<std::size_t>(m)] != pow(Rational(2), static_cast<unsigned>(m))) {
                return "leading coefficient " + to_string(h[static_cast<std::size_t>(m)]);
            }
            for (std::size_t k = 0; k <= h.order(); ++k) {
                if ((k + static_cast<std::size_t>(m)) % 2 == 1 && h[k] != 0) {
                    return "opposite-parity coefficient at " + std::to_string(k);
                }
                if (h[k].get_den() != 1) {
                    return "non-integer coefficient at " + std::to_string(k);
                }
            }
            return {};
        }));
    }
    report.checks.push_back(repeated("coefficients independent of alpha", m_max + 1, [&](int m) -> std::string {
        const auto reference = hermite_from_ode(m, Rational(1)).poly.coeffs();
        for (const auto& alpha : default_alphas()) {
            if (hermite_from_ode(m, alpha).poly.coeffs() != reference) {
                return "alpha " + to_string(alpha) + " differs";
            }
        }
        return {};
    }));
}

// ---------------------------------------------------------------------------

void orthogonality(SuiteReport& report, const SuiteOptions& options) {
    const auto r = verify_orthogonality(options.m_max, options.j);
    for (const auto& e : r.entries) {
        std::ostringstream detail;
        detail.precision(17);
        detail << "value " << e.value;
        if (e.m == e.n) {
            detail << ", expected " << e.expected;
        }
        report.checks.push_back({"I(" + std::to_string(e.m) + "," + std::to_string(e.n) + ") at alpha " +
                                     to_string(r.alpha),
                                 e.ok, detail.str()});
    }
    for (const auto& q : r.norm_ratios) {
        std::ostringstream detail;
        detail.precision(17);
        detail << "ratio " << q.ratio;
        report.checks.push_back({"I(" + std::to_string(q.n) + "," + std::to_string(q.n) + ")/I(" +
                                     std::to_string(q.n - 1) + "," + std::to_string(q.n - 1) + ") = 2n",
                                 q.ok, detail.str()});
    }
}

} // namespace

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
    const long num = std::uniform_int_distribution<long>(-max_num, max_num)(rng);
    const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

AlphaSeries random_series(std::mt19937_64& rng, const Rational& alpha, const Rational& x0, std::size_t order,
                          long max_num, long max_den) {
    std::vector<Rational> coeffs(order + 1);
    for (auto& c : coeffs) {
        c = random_rational(rng, max_num, max_den);
    }
    return {alpha, x0, std::move(coeffs)};
}

bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.ok; });
}

Json SuiteReport::to_json() const {
    Json items = Json::array();
    std::size_t failed = 0;
    for (const auto& c : checks) {
        items.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        failed += c.ok ? 0 : 1;
    }
    return {{"suite", suite},
            {"ok", ok()},
            {"passed", checks.size() - failed},
            {"failed", failed},
            {"checks", std::move(items)}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"calculus-rules", "solver", "hermite", "orthogonality"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    SuiteReport report{name, {}};
    if (name == "calculus-rules") {
        calculus_rules(report, options);
    } else if (name == "solver") {
        solver(report, options);
    } else if (name == "hermite") {
        hermite(report, options);
    } else if (name == "orthogonality") {
        orthogonality(report, options);
    } else {
        throw MalformedInput("unknown suite '" + name + "'");
    }
    return report;
}

} // namespace confrac
