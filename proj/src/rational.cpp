#include "confrac/rational.hpp"

#include "confrac/errors.hpp"

#include <cctype>
#include <cmath>

namespace confrac {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

// Exact integer k-th root of a nonnegative integer, if it exists.
std::optional<Integer> exact_root(const Integer& value, unsigned long k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) == 0) {
        return std::nullopt;
    }
    return root;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw MalformedInput("invalid rational: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(num_text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
        throw MalformedInput("invalid rational: '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den == 0) {
        throw MalformedInput("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(parse_integer(num_text), den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

Rational pow(const Rational& base, unsigned exponent) {
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer double_factorial(int n) {
    if (n < -1) {
        throw DomainError("double factorial undefined for n < -1");
    }
    if (n <= 0) {
        return 1;
    }
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

bool has_odd_denominator(const Rational& value) { return mpz_odd_p(value.get_den_mpz_t()) != 0; }

void require_valid_alpha(const Rational& alpha) {
    if (alpha <= 0 || alpha > 1) {
        throw DomainError("alpha must lie in (0, 1], got " + to_string(alpha));
    }
}

double real_power(double base, const Rational& exponent) {
    if (base >= 0.0) {
        return std::pow(base, to_double(exponent));
    }
    if (!has_odd_denominator(exponent)) {
        throw DomainError("negative base with even-denominator exponent " + to_string(exponent));
    }
    const double q = exponent.get_den().get_d();
    const double p = exponent.get_num().get_d();
    // Real odd root of a negative number, then the integer power.
    const double root = -std::pow(-base, 1.0 / q);
    return std::pow(root, p);
}

std::optional<Rational> exact_power(const Rational& base, const Rational& exponent) {
    if (!exponent.get_den().fits_ulong_p() || !exponent.get_num().fits_slong_p()) {
        return std::nullopt;
    }
    const unsigned long q = exponent.get_den().get_ui();
    const long p = exponent.get_num().get_si();
    if (base == 0) {
        if (p > 0) {
            return Rational(0);
        }
        return std::nullopt;
    }
    const bool negative = base < 0;
    if (negative && q % 2 == 0) {
        return std::nullopt;
    }
    Integer num = abs(base.get_num());
    auto num_root = exact_root(num, q);
    auto den_root = exact_root(base.get_den(), q);
    if (!num_root || !den_root) {
        return std::nullopt;
    }
    Rational root(*num_root, *den_root);
    root.canonicalize();
    if (negative) {
        root = -root;
    }
    Rational result = pow(root, static_cast<unsigned>(p >= 0 ? p : -p));
    if (p < 0) {
        result = 1 / result;
    }
    return result;
}

} // namespace confrac
