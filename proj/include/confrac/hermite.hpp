#pragma once

#include "confrac/alpha_series.hpp"
#include "confrac/ode_solver.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace confrac {

/// Conformable fractional Hermite polynomial H_m^alpha: a degree-m polynomial
/// in x^alpha (x0 = 0) stored with order m. Coefficients are integers and do
/// not depend on alpha; the leading one is 2^m.
struct HermitePolyAlpha {
    int m = 0;
    AlphaSeries poly;

    /// The polynomial zero-padded to `order` (>= m).
    AlphaSeries padded(std::size_t order) const;

    friend bool operator==(const HermitePolyAlpha&, const HermitePolyAlpha&) = default;
};

/// The equation T^2 y - 2 alpha x^alpha T y + 2 alpha^2 m y = 0 about x0 = 0,
/// with coefficient series known through `order`.
AlphaODE2 hermite_ode(int m, const Rational& alpha, std::size_t order);

/// Initial data (c0, c1) selecting H_m^alpha:
/// m even: c0 = (-2)^{m/2} (m-1)!!, c1 = 0;
/// m odd:  c0 = 0, c1 = -(-2)^{(m+1)/2} m!!.
std::pair<Integer, Integer> hermite_initial_conditions(int m);

/// Solves the Hermite equation with the initial data above and cuts the
/// terminating series at degree m.
HermitePolyAlpha hermite_from_ode(int m, const Rational& alpha);

/// H_0 = 1, H_1 = 2 x^alpha, H_{k+1} = 2 x^alpha H_k - 2k H_{k-1}.
HermitePolyAlpha hermite_three_term(int m, const Rational& alpha);

/// (-1/alpha)^m exp(x^{2 alpha}) T^m exp(-x^{2 alpha}) with exact truncated
/// series of order N (default 2m + 8, at least 2m + 4). Coefficients m+1..N-m
/// of the product must vanish; otherwise RodriguesMismatch.
HermitePolyAlpha hermite_rodrigues(int m, const Rational& alpha, std::optional<std::size_t> order = std::nullopt);

/// Classical physicists' Hermite polynomial coefficients (in u), from the
/// explicit sum m! sum_k (-1)^k (2u)^{m-2k} / (k! (m-2k)!).
std::vector<Integer> classical_hermite(int m);

/// H_m(x^alpha): classical coefficients placed at powers x^{k alpha}.
HermitePolyAlpha substitution_oracle(int m, const Rational& alpha);

enum class HermiteProperty { I, II, III, IV, V, VI };

std::string to_string(HermiteProperty p);
HermiteProperty parse_hermite_property(const std::string& name);

struct PropertyFailure {
    int m = 0;
    /// First mismatching coefficient index, -1 when the failure is not
    /// coefficient-wise (e.g. an exception).
    long index = -1;
    std::string detail;
};

struct PropertyReport {
    HermiteProperty property = HermiteProperty::I;
    Rational alpha;
    int m_max = 0;
    int checked = 0;
    std::vector<PropertyFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Checks one of Properties I-VI as exact series identities for m <= m_max.
///   I   H_m^alpha = H_m(x^alpha)
///   II  T H_m^alpha = 2 m alpha H_{m-1}^alpha
///   III T^m H_m^alpha = 2^m m! alpha^m (directly and by folding II)
///   IV  H_{m+1}^alpha = 2 x^alpha H_m^alpha - 2m H_{m-1}^alpha
///   V   H_{m+1}^alpha = 2 x^alpha H_m^alpha - alpha^{-1} T H_m^alpha
///   VI  Rodrigues construction equals the ODE construction
PropertyReport verify_property(HermiteProperty property, int m_max, const Rational& alpha);

inline constexpr double kOffDiagonalTolerance = 1e-8;
inline constexpr double kDiagonalTolerance = 1e-10;
inline constexpr double kNormRecurrenceTolerance = 1e-9;

struct InnerProductEntry {
    int m = 0;
    int n = 0;
    double value = 0.0;
    double expected = 0.0;
    bool ok = false;
};

struct NormRatioEntry {
    int n = 0;
    double ratio = 0.0;
    bool ok = false;
};

struct OrthogonalityReport {
    Rational alpha;
    int n_max = 0;
    std::vector<InnerProductEntry> entries;
    /// I_{n,n} / I_{n-1,n-1} against 2n for n = 1..n_max.
    std::vector<NormRatioEntry> norm_ratios;

    bool ok() const;
};

/// (1/alpha) 2^n n! sqrt(pi)
double hermite_norm(int n, const Rational& alpha);

/// Inner products for all 0 <= m, n <= n_max at alpha = 1/(2j+1).
/// Off-diagonal entries must satisfy |I| < 1e-8 * hermite_norm(max(m, n)),
/// diagonal entries must match hermite_norm(n) to relative 1e-10.
OrthogonalityReport verify_orthogonality(int n_max, int j);

} // namespace confrac
