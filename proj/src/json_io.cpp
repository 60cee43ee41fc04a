#include "confrac/json_io.hpp"

#include "confrac/errors.hpp"

#include <cmath>

namespace confrac {

namespace {

Rational rational_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) {
        throw MalformedInput(std::string("series JSON needs a string field '") + key + "'");
    }
    return parse_rational(j[key].get<std::string>());
}

} // namespace

Json to_json(const AlphaSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return {{"alpha", to_string(s.alpha())}, {"x0", to_string(s.x0())}, {"coeffs", std::move(coeffs)}};
}

AlphaSeries series_from_json(const Json& j) {
    if (!j.is_object()) {
        throw MalformedInput("series JSON must be an object");
    }
    Rational alpha = rational_field(j, "alpha");
    Rational x0 = rational_field(j, "x0");
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw MalformedInput("series JSON needs an array field 'coeffs'");
    }
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (c.is_string()) {
            coeffs.push_back(parse_rational(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            coeffs.emplace_back(Integer(std::to_string(c.get<long long>())));
        } else {
            throw MalformedInput("series coefficients must be rational strings");
        }
    }
    return {std::move(alpha), std::move(x0), std::move(coeffs)};
}

Json to_json(const HermitePolyAlpha& h) {
    Json j = to_json(h.poly);
    j["m"] = h.m;
    return j;
}

HermitePolyAlpha hermite_from_json(const Json& j) {
    if (!j.contains("m") || !j["m"].is_number_integer()) {
        throw MalformedInput("Hermite JSON needs an integer field 'm'");
    }
    return {j["m"].get<int>(), series_from_json(j)};
}

Json to_json(const SolveReport& r) {
    Json radius;
    if (!r.radius) {
        radius = nullptr;
    } else if (std::isinf(*r.radius)) {
        radius = "inf";
    } else {
        radius = *r.radius;
    }
    return {{"solution", to_json(r.solution)}, {"radius", radius}, {"residual_ok_through", r.residual_ok_through}};
}

Json to_json(const PropertyReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"m", f.m}, {"index", f.index}, {"detail", f.detail}});
    }
    return {{"property", to_string(r.property)},
            {"alpha", to_string(r.alpha)},
            {"m_max", r.m_max},
            {"checked", r.checked},
            {"ok", r.ok()},
            {"failures", std::move(failures)}};
}

Json to_json(const OrthogonalityReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"m", e.m}, {"n", e.n}, {"value", e.value}, {"expected", e.expected}, {"ok", e.ok}});
    }
    Json ratios = Json::array();
    for (const auto& q : r.norm_ratios) {
        ratios.push_back({{"n", q.n}, {"ratio", q.ratio}, {"expected", 2.0 * q.n}, {"ok", q.ok}});
    }
    return {{"alpha", to_string(r.alpha)},
            {"n_max", r.n_max},
            {"ok", r.ok()},
            {"entries", std::move(entries)},
            {"norm_ratios", std::move(ratios)}};
}

} // namespace confrac
