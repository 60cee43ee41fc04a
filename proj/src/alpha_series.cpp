#include "confrac/alpha_series.hpp"

#include "confrac/errors.hpp"

#include <algorithm>
#include <utility>

namespace confrac {

namespace {

void require_compatible(const AlphaSeries& a, const AlphaSeries& b, const char* op) {
    if (!a.compatible_with(b)) {
        throw IncompatibleSeries(std::string(op) + ": series differ in alpha or x0 (alpha " +
                                 to_string(a.alpha()) + " vs " + to_string(b.alpha()) + ", x0 " +
                                 to_string(a.x0()) + " vs " + to_string(b.x0()) + ")");
    }
}

} // namespace

AlphaSeries::AlphaSeries(Rational alpha, Rational x0, std::vector<Rational> coeffs)
    : alpha_(std::move(alpha)), x0_(std::move(x0)), coeffs_(std::move(coeffs)) {
    require_valid_alpha(alpha_);
    if (coeffs_.empty()) {
        throw MalformedInput("an AlphaSeries needs at least one coefficient");
    }
    alpha_.canonicalize();
    x0_.canonicalize();
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
}

AlphaSeries AlphaSeries::constant(Rational alpha, Rational x0, Rational value, std::size_t order) {
    std::vector<Rational> coeffs(order + 1);
    coeffs[0] = std::move(value);
    return {std::move(alpha), std::move(x0), std::move(coeffs)};
}

AlphaSeries AlphaSeries::zero(Rational alpha, Rational x0, std::size_t order) {
    return {std::move(alpha), std::move(x0), std::vector<Rational>(order + 1)};
}

AlphaSeries AlphaSeries::monomial(Rational alpha, Rational x0, std::size_t index, std::size_t order,
                                  Rational scale) {
    if (index > order) {
        throw TruncationError("monomial index exceeds the requested order");
    }
    std::vector<Rational> coeffs(order + 1);
    coeffs[index] = std::move(scale);
    return {std::move(alpha), std::move(x0), std::move(coeffs)};
}

AlphaSeries AlphaSeries::from_polynomial(Rational alpha, Rational x0, std::vector<Rational> coeffs,
                                         std::size_t order) {
    for (std::size_t k = order + 1; k < coeffs.size(); ++k) {
        if (coeffs[k] != 0) {
            throw TruncationError("polynomial has a nonzero coefficient at index " + std::to_string(k) +
                                  " beyond order " + std::to_string(order));
        }
    }
    coeffs.resize(order + 1);
    return {std::move(alpha), std::move(x0), std::move(coeffs)};
}

std::optional<std::size_t> AlphaSeries::degree() const {
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] != 0) {
            return k;
        }
    }
    return std::nullopt;
}

bool AlphaSeries::is_zero() const { return !degree().has_value(); }

AlphaSeries AlphaSeries::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw TruncationError("cannot extend a series from order " + std::to_string(this->order()) +
                              " to " + std::to_string(order));
    }
    return {alpha_, x0_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1)};
}

bool AlphaSeries::compatible_with(const AlphaSeries& other) const noexcept {
    return alpha_ == other.alpha_ && x0_ == other.x0_;
}

double AlphaSeries::eval(double x) const {
    const auto deg = degree();
    if (!deg || *deg == 0) {
        return to_double(coeffs_.front());
    }
    const double dx = x - to_double(x0_);
    if (dx < 0.0 && !has_odd_denominator(alpha_)) {
        throw DomainError("x = " + std::to_string(x) + " lies left of x0 and alpha " + to_string(alpha_) +
                          " has an even denominator");
    }
    const double t = real_power(dx, alpha_);
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + to_double(*it);
    }
    return acc;
}

AlphaSeries add(const AlphaSeries& a, const AlphaSeries& b) {
    require_compatible(a, b, "add");
    const std::size_t n = std::min(a.order(), b.order()) + 1;
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = a[k] + b[k];
    }
    return {a.alpha(), a.x0(), std::move(out)};
}

AlphaSeries sub(const AlphaSeries& a, const AlphaSeries& b) {
    require_compatible(a, b, "sub");
    const std::size_t n = std::min(a.order(), b.order()) + 1;
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = a[k] - b[k];
    }
    return {a.alpha(), a.x0(), std::move(out)};
}

AlphaSeries negate(const AlphaSeries& s) { return scale(s, Rational(-1)); }

AlphaSeries mul(const AlphaSeries& a, const AlphaSeries& b) {
    require_compatible(a, b, "mul");
    const std::size_t n = std::min(a.order(), b.order()) + 1;
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc;
        for (std::size_t j = 0; j <= k; ++j) {
            if (a[j] != 0 && b[k - j] != 0) {
                acc += a[j] * b[k - j];
            }
        }
        out[k] = std::move(acc);
    }
    return {a.alpha(), a.x0(), std::move(out)};
}

AlphaSeries scale(const AlphaSeries& s, const Rational& lambda) {
    std::vector<Rational> out(s.coeffs());
    for (auto& c : out) {
        c *= lambda;
    }
    return {s.alpha(), s.x0(), std::move(out)};
}

AlphaSeries monomial_shift(const AlphaSeries& s) {
    std::vector<Rational> out;
    out.reserve(s.order() + 2);
    out.emplace_back(0);
    out.insert(out.end(), s.coeffs().begin(), s.coeffs().end());
    return {s.alpha(), s.x0(), std::move(out)};
}

AlphaSeries deriv_alpha(const AlphaSeries& s) {
    if (s.order() == 0) {
        return AlphaSeries::zero(s.alpha(), s.x0(), 0);
    }
    std::vector<Rational> out(s.order());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = s.alpha() * static_cast<unsigned long>(k + 1) * s[k + 1];
    }
    return {s.alpha(), s.x0(), std::move(out)};
}

AlphaSeries deriv_alpha(const AlphaSeries& s, std::size_t times) {
    AlphaSeries out = s;
    for (std::size_t i = 0; i < times; ++i) {
        out = deriv_alpha(out);
    }
    return out;
}

AlphaSeries gaussian_weight_series(const Rational& alpha, std::size_t order, WeightSign sign) {
    std::vector<Rational> coeffs(order + 1);
    Rational term = 1;
    for (std::size_t j = 0; 2 * j <= order; ++j) {
        if (j > 0) {
            term /= static_cast<unsigned long>(j);
            if (sign == WeightSign::minus) {
                term = -term;
            }
        }
        coeffs[2 * j] = term;
    }
    return {alpha, Rational(0), std::move(coeffs)};
}

} // namespace confrac
