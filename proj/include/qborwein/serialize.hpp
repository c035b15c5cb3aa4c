#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qborwein/dpoly.hpp"
#include "qborwein/interval.hpp"
#include "qborwein/quadratic.hpp"
#include "qborwein/rational.hpp"
#include "qborwein/ring.hpp"
#include "qborwein/series.hpp"

namespace qborwein {

using json = nlohmann::json;

/// Coefficient encodings, one per ring:
///   rational   "p/q" (or "p" for integers), exact
///   quadratic  {"a": rational, "b": rational, "D": int}, meaning a + b*sqrt(D)
///   dpoly      [rational, ...] ascending in d
///   interval   {"lo": hex-float, "hi": hex-float, "bits": int}, endpoints
///              round-trip exactly through mpfr's %Ra format

inline json coeff_to_json(const Rational& x) { return json(x.to_string()); }

inline Rational coeff_from_json(const json& j, const Rational*) {
    if (!j.is_string()) throw std::invalid_argument("rational: expected string");
    return Rational::from_string(j.get<std::string>());
}

inline json coeff_to_json(const Quadratic& x) {
    return json{{"a", x.a().to_string()}, {"b", x.b().to_string()}, {"D", x.radicand()}};
}

inline Quadratic coeff_from_json(const json& j, const Quadratic*) {
    if (!j.is_object()) throw std::invalid_argument("quadratic: expected object");
    return Quadratic(Rational::from_string(j.at("a").get<std::string>()),
                     Rational::from_string(j.at("b").get<std::string>()),
                     j.at("D").get<unsigned long>());
}

inline json coeff_to_json(const DPoly& p) {
    json arr = json::array();
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) arr.push_back(p.coeff(k).to_string());
    return arr;
}

inline DPoly coeff_from_json(const json& j, const DPoly*) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("dpoly: expected nonempty array");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(Rational::from_string(e.get<std::string>()));
    return DPoly(std::move(c));
}

inline json coeff_to_json(const Interval& x) {
    return json{{"lo", x.lo_hex()}, {"hi", x.hi_hex()}, {"bits", x.precision()}};
}

inline Interval coeff_from_json(const json& j, const Interval*) {
    if (!j.is_object()) throw std::invalid_argument("interval: expected object");
    return Interval::from_hex(j.at("lo").get<std::string>(), j.at("hi").get<std::string>(),
                              j.at("bits").get<unsigned>());
}

template <CoefficientRing R>
json series_to_json(const Series<R>& f) {
    json coeffs = json::array();
    for (int k = 0; k <= f.order(); ++k) coeffs.push_back(coeff_to_json(f[k]));
    return json{{"order", f.order()}, {"ring", ring_traits<R>::name}, {"coeffs", coeffs}};
}

template <CoefficientRing R>
Series<R> series_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("series: expected object");
    const std::string ring = j.at("ring").get<std::string>();
    if (ring != ring_traits<R>::name)
        throw std::invalid_argument("series: ring mismatch, stored '" + ring + "' requested '" +
                                    std::string(ring_traits<R>::name) + "'");
    const int order = j.at("order").get<int>();
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || int(coeffs.size()) != order + 1)
        throw std::invalid_argument("series: coefficient count does not match order");
    std::vector<R> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) c.push_back(coeff_from_json(e, static_cast<const R*>(nullptr)));
    return Series<R>(std::move(c));
}

} // namespace qborwein
