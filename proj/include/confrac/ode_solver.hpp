#pragma once

#include "confrac/alpha_series.hpp"

#include <cstddef>
#include <optional>

namespace confrac {

/// Sequential conformable equation T_a T_a y + p(x) T_a y + q(x) y = 0 with
/// p and q already expanded about a common x0.
class AlphaODE2 {
public:
    AlphaODE2(AlphaSeries p, AlphaSeries q);

    const AlphaSeries& p() const noexcept { return p_; }
    const AlphaSeries& q() const noexcept { return q_; }
    const Rational& alpha() const noexcept { return p_.alpha(); }
    const Rational& x0() const noexcept { return p_.x0(); }

private:
    AlphaSeries p_;
    AlphaSeries q_;
};

/// Ratio of two finite polynomials in (x - c)^alpha, where c is the common
/// x0 of numerator and denominator. All stored coefficients are taken as
/// the complete polynomial.
class RationalAlphaFunction {
public:
    RationalAlphaFunction(AlphaSeries numerator, AlphaSeries denominator);

    /// numerator / 1
    explicit RationalAlphaFunction(AlphaSeries numerator);

    const AlphaSeries& numerator() const noexcept { return num_; }
    const AlphaSeries& denominator() const noexcept { return den_; }
    const Rational& alpha() const noexcept { return num_.alpha(); }
    const Rational& base() const noexcept { return num_.x0(); }

    /// Numerator and denominator divided by their monic polynomial gcd.
    RationalAlphaFunction reduced() const;

private:
    AlphaSeries num_;
    AlphaSeries den_;
};

enum class PointKind { alpha_ordinary, alpha_singular };

/// A point is alpha-ordinary when both normalized coefficients, after
/// cancelling common factors, have a denominator that does not vanish there.
/// Points where (x0 - c)^alpha is undefined are alpha-singular.
PointKind classify_point(const RationalAlphaFunction& p, const RationalAlphaFunction& q, const Rational& x0);

/// Expands f as an AlphaSeries of the given order about `at` by geometric
/// division. Supported when `at` equals the base point of f, or when
/// alpha = 1 (classical Taylor shift). Throws DomainError when `at` is not
/// an ordinary point of f and UnsupportedAlpha for other re-centerings.
AlphaSeries expand_series(const RationalAlphaFunction& f, const Rational& at, std::size_t order);

struct SolveReport {
    AlphaSeries solution;
    /// nullopt when the ratio test had too little data; +inf for entire series.
    std::optional<double> radius;
    /// Largest index through which the residual vanished, -1 if it does not
    /// vanish at index 0.
    long residual_ok_through = -1;
};

inline constexpr std::size_t kDefaultRadiusWindow = 10;

/// Coefficients c_{k+2} from
///   alpha^2 (k+2)(k+1) c_{k+2} = -sum_{j=0..k} [alpha (j+1) p_{k-j} c_{j+1} + q_{k-j} c_j]
/// for k = 0..N-2, with c_0 = y(x0) and alpha c_1 = T_alpha y(x0).
/// Requires N >= 1 and p, q of order >= N (TruncationError otherwise).
SolveReport solve_series(const AlphaODE2& ode, const Rational& c0, const Rational& c1, std::size_t order,
                         std::size_t radius_window = kDefaultRadiusWindow);

/// T_a T_a y + p T_a y + q y by direct series substitution.
AlphaSeries residual(const AlphaODE2& ode, const AlphaSeries& y);

/// Index through which `r` vanishes exactly, -1 if r_0 != 0.
long vanishing_prefix(const AlphaSeries& r);

/// Empirical ratio test over the last `window` + 1 coefficients.
///
/// Each nonzero c_i is paired with the next nonzero c_j with j >= i + 2 and
/// contributes the per-step ratio |c_j / c_i|^{1/(j-i)}; lacunary series such
/// as even functions are handled and parity oscillations are smoothed. L is
/// the median ratio and the radius in x is (1/L)^{1/alpha}.
/// The radius is infinite when the last `window` coefficients are all zero,
/// when every ratio is below 1e-8, or when the ratios decay like a power of
/// the index (log-log slope below -1/4, the signature of an entire series).
/// Throws InsufficientData with fewer than window + 2 coefficients or fewer
/// than 3 usable ratios.
double radius_estimate(const AlphaSeries& s, std::size_t window = kDefaultRadiusWindow);

} // namespace confrac
