#include "ffr/poly_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ffr {

namespace {

using nlohmann::json;

Rational coeff_from_json(const json& value, const std::string& field) {
    if (value.is_string()) {
        const std::optional<Rational> parsed = parse_rational(value.get<std::string>());
        if (!parsed)
            throw std::runtime_error(field + ": not a rational \"num/den\" string");
        return *parsed;
    }
    if (value.is_number_integer())
        return Rational(Integer(value.get<std::int64_t>()));
    if (value.is_number_unsigned())
        return Rational(Integer(value.get<std::uint64_t>()));
    if (value.is_number_float()) return rational_from_double(value.get<double>());
    throw std::runtime_error(field + ": expected a rational string or a number");
}

std::string trimmed(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    std::size_t last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
}

}  // namespace

ExactPolynomial parse_polynomial_json(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(origin + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("coeffs"))
        throw std::runtime_error(origin + ": missing field \"coeffs\"");
    const json& coeffs = doc["coeffs"];
    if (!coeffs.is_array() || coeffs.empty())
        throw std::runtime_error(origin + ": field \"coeffs\" must be a nonempty array");
    ExactPolynomial p;
    p.coeffs.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        p.coeffs.push_back(
            coeff_from_json(coeffs[i], origin + ": coeffs[" + std::to_string(i) + "]"));
    p.normalize();
    return p;
}

ExactPolynomial read_polynomial_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open polynomial file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polynomial_json(buf.str(), path);
}

std::string polynomial_to_json(const ExactPolynomial& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs) arr.push_back(format_rational(c));
    if (arr.empty()) arr.push_back("0");
    json doc;
    doc["coeffs"] = arr;
    return doc.dump(2);
}

std::string polynomial_to_json(const FloatPolynomial& p) {
    json arr = json::array();
    for (const double c : p.coeffs) arr.push_back(c);
    if (arr.empty()) arr.push_back(0.0);
    json doc;
    doc["coeffs"] = arr;
    return doc.dump(2);
}

ExactPolynomial parse_root_list(const std::string& text) {
    std::vector<Rational> roots;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        if (item.empty()) throw std::runtime_error("--roots: empty entry in root list");
        const std::optional<Rational> parsed = parse_rational(item);
        if (!parsed)
            throw std::runtime_error("--roots: could not parse root '" + item + "'");
        roots.push_back(*parsed);
    }
    if (roots.empty()) throw std::runtime_error("--roots: no roots given");
    return from_roots(roots, Rational(1));
}

}  // namespace ffr
