#include "confrac/conformable_calc.hpp"
#include "confrac/errors.hpp"
#include "confrac/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace confrac {

namespace {

// First index where the two series differ; -1 when they are identical.
long first_mismatch(const AlphaSeries& a, const AlphaSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= n; ++k) {
        if (a[k] != b[k]) {
            return static_cast<long>(k);
        }
    }
    if (a.order() != b.order() || !a.compatible_with(b)) {
        return static_cast<long>(n) + 1;
    }
    return -1;
}

void expect_equal(PropertyReport& report, int m, const AlphaSeries& lhs, const AlphaSeries& rhs,
                  const std::string& what) {
    ++report.checked;
    const long idx = first_mismatch(lhs, rhs);
    if (idx >= 0) {
        std::string detail = what + ": mismatch at coefficient " + std::to_string(idx);
        if (static_cast<std::size_t>(idx) <= std::min(lhs.order(), rhs.order())) {
            detail += " (" + to_string(lhs[static_cast<std::size_t>(idx)]) + " vs " +
                      to_string(rhs[static_cast<std::size_t>(idx)]) + ")";
        }
        report.failures.push_back({m, idx, std::move(detail)});
    }
}

} // namespace

std::string to_string(HermiteProperty p) {
    switch (p) {
    case HermiteProperty::I: return "I";
    case HermiteProperty::II: return "II";
    case HermiteProperty::III: return "III";
    case HermiteProperty::IV: return "IV";
    case HermiteProperty::V: return "V";
    case HermiteProperty::VI: return "VI";
    }
    return "?";
}

HermiteProperty parse_hermite_property(const std::string& name) {
    for (auto p : {HermiteProperty::I, HermiteProperty::II, HermiteProperty::III, HermiteProperty::IV,
                   HermiteProperty::V, HermiteProperty::VI}) {
        if (to_string(p) == name) {
            return p;
        }
    }
    throw MalformedInput("unknown Hermite property '" + name + "' (expected I..VI)");
}

PropertyReport verify_property(HermiteProperty property, int m_max, const Rational& alpha) {
    if (m_max < 1) {
        throw DomainError("verify_property needs m_max >= 1");
    }
    require_valid_alpha(alpha);
    PropertyReport report{property, alpha, m_max, 0, {}};

    // H_0 .. H_{m_max + 1}; IV and V reach one past m_max.
    std::vector<HermitePolyAlpha> h;
    for (int m = 0; m <= m_max + 1; ++m) {
        h.push_back(hermite_from_ode(m, alpha));
    }
    const auto at = [&](int m) -> const HermitePolyAlpha& { return h[static_cast<std::size_t>(m)]; };

    for (int m = 0; m <= m_max; ++m) {
        const auto mm = static_cast<std::size_t>(m);
        switch (property) {
        case HermiteProperty::I:
            expect_equal(report, m, at(m).poly, substitution_oracle(m, alpha).poly, "H_m^alpha vs H_m(x^alpha)");
            break;
        case HermiteProperty::II:
            if (m >= 1) {
                expect_equal(report, m, deriv_alpha(at(m).poly),
                             scale(at(m - 1).poly, 2 * alpha * m), "T H_m vs 2 m alpha H_{m-1}");
            }
            break;
        case HermiteProperty::III: {
            const Rational expected = pow(Rational(2), static_cast<unsigned>(m)) *
                                      Rational(factorial(static_cast<unsigned>(m))) *
                                      pow(alpha, static_cast<unsigned>(m));
            const auto constant = AlphaSeries::constant(alpha, 0, expected);
            expect_equal(report, m, deriv_alpha(at(m).poly, mm), constant, "T^m H_m vs 2^m m! alpha^m");
            // Fold II: T^m H_m = prod_{i=1..m} (2 i alpha) H_0.
            Rational folded = at(0).poly[0];
            for (int i = 1; i <= m; ++i) {
                folded *= 2 * alpha * i;
            }
            expect_equal(report, m, AlphaSeries::constant(alpha, 0, folded), constant, "folded II vs III");
            break;
        }
        case HermiteProperty::IV: {
            auto rhs = scale(monomial_shift(at(m).poly), 2);
            if (m >= 1) {
                rhs = rhs - scale(at(m - 1).padded(mm + 1), 2 * m);
            }
            expect_equal(report, m, at(m + 1).poly, rhs, "H_{m+1} vs 2x^a H_m - 2m H_{m-1}");
            break;
        }
        case HermiteProperty::V: {
            const auto rhs = scale(monomial_shift(at(m).poly), 2) -
                             scale(deriv_alpha(at(m).padded(mm + 2)), 1 / alpha);
            expect_equal(report, m, at(m + 1).poly, rhs, "H_{m+1} vs 2x^a H_m - a^{-1} T H_m");
            break;
        }
        case HermiteProperty::VI:
            try {
                expect_equal(report, m, hermite_rodrigues(m, alpha).poly, at(m).poly, "Rodrigues vs ODE");
            } catch (const RodriguesMismatch& e) {
                ++report.checked;
                report.failures.push_back({m, -1, e.what()});
            }
            break;
        }
    }
    return report;
}

bool OrthogonalityReport::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; }) &&
           std::all_of(norm_ratios.begin(), norm_ratios.end(), [](const auto& r) { return r.ok; });
}

double hermite_norm(int n, const Rational& alpha) {
    return std::ldexp(std::tgamma(n + 1.0), n) * std::sqrt(std::numbers::pi) / to_double(alpha);
}

OrthogonalityReport verify_orthogonality(int n_max, int j) {
    if (n_max < 0 || j < 0) {
        throw DomainError("verify_orthogonality needs n_max >= 0 and j >= 0");
    }
    const Rational alpha(1, 2 * j + 1);
    OrthogonalityReport report{alpha, n_max, {}, {}};
    std::vector<double> diagonal(static_cast<std::size_t>(n_max) + 1);
    for (int m = 0; m <= n_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            const double value = hermite_inner_product(m, n, alpha);
            InnerProductEntry e{m, n, value, 0.0, false};
            if (m == n) {
                e.expected = hermite_norm(n, alpha);
                e.ok = std::abs(value - e.expected) <= kDiagonalTolerance * e.expected;
                diagonal[static_cast<std::size_t>(n)] = value;
            } else {
                e.ok = std::abs(value) < kOffDiagonalTolerance * hermite_norm(std::max(m, n), alpha);
            }
            report.entries.push_back(e);
        }
    }
    for (int n = 1; n <= n_max; ++n) {
        const double ratio = diagonal[static_cast<std::size_t>(n)] / diagonal[static_cast<std::size_t>(n) - 1];
        report.norm_ratios.push_back({n, ratio, std::abs(ratio - 2.0 * n) <= kNormRecurrenceTolerance * 2.0 * n});
    }
    return report;
}

} // namespace confrac
