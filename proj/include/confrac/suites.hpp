#pragma once

#include "confrac/alpha_series.hpp"
#include "confrac/json_io.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace confrac {

/// Uniform rational with numerator in [-max_num, max_num] and denominator in
/// [1, max_den].
Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 5);

AlphaSeries random_series(std::mt19937_64& rng, const Rational& alpha, const Rational& x0, std::size_t order,
                          long max_num = 9, long max_den = 5);

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckItem> checks;

    bool ok() const;
    Json to_json() const;
};

struct SuiteOptions {
    int m_max = 10;
    int j = 1;
    /// Restricts alpha-parameterized suites to one alpha.
    std::optional<Rational> alpha;
    std::uint64_t seed = 20161015;
    int instances = 50;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs "calculus-rules", "solver", "hermite" or "orthogonality".
/// Throws MalformedInput for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

} // namespace confrac
