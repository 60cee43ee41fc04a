#pragma once

#include "confrac/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace confrac {

/// Truncated fractional power series
///
///     c_0 + c_1 (x - x0)^alpha + c_2 (x - x0)^{2 alpha} + ... + c_N (x - x0)^{N alpha}
///
/// with exact rational coefficients. The order N is structural: it records how
/// far the coefficients are known, and coefficients beyond it are unknown rather
/// than zero. Trailing zero coefficients are therefore kept. Binary operations
/// return results of order min(a.order(), b.order()).
///
/// Values are immutable once built; every operation returns a new series.
class AlphaSeries {
public:
    /// Throws DomainError unless 0 < alpha <= 1, and MalformedInput when
    /// `coeffs` is empty.
    AlphaSeries(Rational alpha, Rational x0, std::vector<Rational> coeffs);

    /// Constant series of the given order.
    static AlphaSeries constant(Rational alpha, Rational x0, Rational value, std::size_t order = 0);

    static AlphaSeries zero(Rational alpha, Rational x0, std::size_t order);

    /// `scale * (x - x0)^{index * alpha}`, known exactly through `order`
    /// (which must be >= index).
    static AlphaSeries monomial(Rational alpha, Rational x0, std::size_t index, std::size_t order,
                                Rational scale = 1);

    /// A finite polynomial in (x - x0)^alpha whose tail is known to vanish,
    /// zero-padded up to `order`. Throws TruncationError if `coeffs` has
    /// nonzero entries past `order`.
    static AlphaSeries from_polynomial(Rational alpha, Rational x0, std::vector<Rational> coeffs,
                                       std::size_t order);

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& x0() const noexcept { return x0_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }

    /// Largest index with a nonzero coefficient; nullopt for the zero series.
    std::optional<std::size_t> degree() const;

    bool is_zero() const;

    /// Keeps coefficients 0..order. Throws TruncationError if order exceeds
    /// the current order.
    AlphaSeries truncated(std::size_t order) const;

    bool compatible_with(const AlphaSeries& other) const noexcept;

    /// Horner evaluation in t = (x - x0)^alpha. x < x0 is allowed only when
    /// alpha has an odd denominator or the series is constant; otherwise
    /// DomainError.
    double eval(double x) const;

    friend bool operator==(const AlphaSeries& a, const AlphaSeries& b) {
        return a.alpha_ == b.alpha_ && a.x0_ == b.x0_ && a.coeffs_ == b.coeffs_;
    }

private:
    Rational alpha_;
    Rational x0_;
    std::vector<Rational> coeffs_;
};

AlphaSeries add(const AlphaSeries& a, const AlphaSeries& b);
AlphaSeries sub(const AlphaSeries& a, const AlphaSeries& b);
AlphaSeries negate(const AlphaSeries& s);

/// Cauchy product: c_k = sum_{j=0..k} a_j b_{k-j}, order min(a, b).
AlphaSeries mul(const AlphaSeries& a, const AlphaSeries& b);

AlphaSeries scale(const AlphaSeries& s, const Rational& lambda);

/// Multiplies by (x - x0)^alpha; the order grows by one.
AlphaSeries monomial_shift(const AlphaSeries& s);

/// Term-wise left conformable derivative with base point x0:
/// result_k = alpha (k + 1) c_{k+1}, order s.order() - 1.
/// An order-0 input yields the zero series of order 0.
AlphaSeries deriv_alpha(const AlphaSeries& s);

/// deriv_alpha applied `times` times.
AlphaSeries deriv_alpha(const AlphaSeries& s, std::size_t times);

enum class WeightSign { minus = -1, plus = 1 };

/// Truncation of exp(sign * x^{2 alpha}) = sum_j sign^j x^{2 j alpha} / j!
/// about x0 = 0, order N.
AlphaSeries gaussian_weight_series(const Rational& alpha, std::size_t order, WeightSign sign);

inline AlphaSeries operator+(const AlphaSeries& a, const AlphaSeries& b) { return add(a, b); }
inline AlphaSeries operator-(const AlphaSeries& a, const AlphaSeries& b) { return sub(a, b); }
inline AlphaSeries operator-(const AlphaSeries& s) { return negate(s); }
inline AlphaSeries operator*(const AlphaSeries& a, const AlphaSeries& b) { return mul(a, b); }
inline AlphaSeries operator*(const Rational& lambda, const AlphaSeries& s) { return scale(s, lambda); }

} // namespace confrac
