#pragma once

// JSON wire format for measures and coefficient vectors.
//
// Measure documents are objects with a "type" discriminator:
//   {"type": "atomic",    "points": [...], "weights": [...]}
//   {"type": "power",     "gamma": g, "scale": c}
//   {"type": "logpower",  "s": s, "alpha": a, "scale": c}
//   {"type": "tabulated", "grid": [...], "density": [...]}
// "scale" defaults to 1.  Coefficient vectors are arrays whose entries are
// plain numbers or [re, im] pairs; they always serialize as [re, im] pairs.

#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbertmu/measure.hpp"

namespace hmu {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& require_field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("measure spec: missing field '") + name + "'");
    return *it;
}

inline double number_field(const json& j, const char* name) {
    const json& v = require_field(j, name);
    if (!v.is_number())
        throw std::invalid_argument(std::string("measure spec: field '") + name +
                                    "' must be a number");
    return v.get<double>();
}

inline double number_field_or(const json& j, const char* name, double fallback) {
    const auto it = j.find(name);
    if (it == j.end()) return fallback;
    if (!it->is_number())
        throw std::invalid_argument(std::string("measure spec: field '") + name +
                                    "' must be a number");
    return it->get<double>();
}

inline std::vector<double> number_array_field(const json& j, const char* name) {
    const json& v = require_field(j, name);
    if (!v.is_array())
        throw std::invalid_argument(std::string("measure spec: field '") + name +
                                    "' must be an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number())
            throw std::invalid_argument(std::string("measure spec: field '") + name +
                                        "' must hold numbers only");
        out.push_back(e.get<double>());
    }
    return out;
}

}  // namespace detail

inline Measure measure_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("measure spec: document must be an object");
    const json& tv = detail::require_field(j, "type");
    if (!tv.is_string())
        throw std::invalid_argument("measure spec: field 'type' must be a string");
    const std::string type = tv.get<std::string>();

    Measure mu;
    if (type == "atomic") {
        AtomicMeasure m;
        m.points = detail::number_array_field(j, "points");
        m.weights = detail::number_array_field(j, "weights");
        mu = m;
    } else if (type == "power") {
        PowerWeight m;
        m.gamma = detail::number_field(j, "gamma");
        m.scale = detail::number_field_or(j, "scale", 1.0);
        mu = m;
    } else if (type == "logpower") {
        LogPowerWeight m;
        m.s = detail::number_field(j, "s");
        m.alpha = detail::number_field(j, "alpha");
        m.scale = detail::number_field_or(j, "scale", 1.0);
        mu = m;
    } else if (type == "tabulated") {
        TabulatedDensity m;
        m.grid = detail::number_array_field(j, "grid");
        m.density = detail::number_array_field(j, "density");
        mu = m;
    } else {
        throw std::invalid_argument(
            "measure spec: unknown type '" + type +
            "' (expected atomic, power, logpower, or tabulated)");
    }
    validate(mu);
    return mu;
}

inline Measure parse_measure_text(const std::string& text) {
    return measure_from_json(json::parse(text));  // parse errors carry byte context
}

inline Measure load_measure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open measure spec '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_measure_text(buf.str());
}

inline json measure_to_json(const Measure& mu) {
    json j;
    j["type"] = family_name(mu);
    if (const auto* m = std::get_if<AtomicMeasure>(&mu)) {
        j["points"] = m->points;
        j["weights"] = m->weights;
    } else if (const auto* m = std::get_if<PowerWeight>(&mu)) {
        j["gamma"] = m->gamma;
        j["scale"] = m->scale;
    } else if (const auto* m = std::get_if<LogPowerWeight>(&mu)) {
        j["s"] = m->s;
        j["alpha"] = m->alpha;
        j["scale"] = m->scale;
    } else if (const auto* m = std::get_if<TabulatedDensity>(&mu)) {
        j["grid"] = m->grid;
        j["density"] = m->density;
    }
    return j;
}

inline std::vector<std::complex<double>> coefficients_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("coefficients: document must be an array");
    std::vector<std::complex<double>> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_number()) {
            out.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            out.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw std::invalid_argument(
                "coefficients: entries must be numbers or [re, im] pairs");
        }
    }
    return out;
}

inline std::vector<std::complex<double>> load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return coefficients_from_json(json::parse(buf.str()));
}

inline json coefficients_to_json(const std::vector<std::complex<double>>& a) {
    json arr = json::array();
    for (const auto& c : a) arr.push_back(json::array({c.real(), c.imag()}));
    return arr;
}

}  // namespace hmu
