#include <fstream>
#include <sstream>

#include "padorb/cli.hpp"

namespace padorb::cli {

using nlohmann::json;

namespace {

mpz_class parse_integer(const json& c) {
    if (c.is_number_integer()) return mpz_class(std::to_string(c.get<std::int64_t>()));
    if (c.is_number_unsigned()) return mpz_class(std::to_string(c.get<std::uint64_t>()));
    if (c.is_string()) {
        mpz_class v;
        if (v.set_str(c.get<std::string>(), 10) != 0) throw ParameterError("malformed integer string");
        return v;
    }
    throw ParameterError("coefficients must be integers");
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParameterError(std::string("map file needs an integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<IntPoly> parse_components(const json& j, int g, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != g)
        throw ParameterError(std::string("\"") + what + "\" must list " + std::to_string(g) + " polynomials");
    std::vector<IntPoly> polys;
    for (const auto& f : j) polys.push_back(parse_polynomial(f, g));
    return polys;
}

}  // namespace

IntPoly parse_polynomial(const json& j, int g) {
    if (!j.is_array()) throw ParameterError("a polynomial is a list of [coefficient, exponents] pairs");
    IntPoly f(g);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[1].is_array())
            throw ParameterError("each term must be [coefficient, [e1, ..., eg]]");
        if (static_cast<int>(term[1].size()) != g)
            throw ParameterError("exponent vector must have " + std::to_string(g) + " entries");
        Exponents e;
        for (const auto& x : term[1]) {
            if (!x.is_number_integer() || x.get<long>() < 0) throw ParameterError("exponents must be nonnegative integers");
            e.push_back(x.get<unsigned>());
        }
        f.add_term(parse_integer(term[0]), std::move(e));
    }
    return f;
}

PolySelfMap parse_map(const json& j) {
    if (!j.is_object()) throw ParameterError("map file must hold a JSON object");
    const int p = require_int(j, "p");
    const int k = require_int(j, "k");
    const int g = require_int(j, "g");
    if (g < 1) throw ParameterError("g must be positive");
    if (!j.contains("polynomials")) throw ParameterError("map file needs \"polynomials\"");
    auto polys = parse_components(j["polynomials"], g, "polynomials");
    std::optional<std::vector<IntPoly>> inverse;
    if (j.contains("inverse") && !j["inverse"].is_null()) inverse = parse_components(j["inverse"], g, "inverse");
    return PolySelfMap(std::move(polys), std::move(inverse), p, k);
}

PolySelfMap load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open map file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParameterError("malformed map file " + path + ": " + e.what());
    }
    return parse_map(j);
}

json polynomial_to_json(const IntPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json coeff = c.fits_slong_p() ? json(c.get_si()) : json(c.get_str());
        terms.push_back(json::array({coeff, e}));
    }
    return terms;
}

json map_to_json(const PolySelfMap& map) {
    json j;
    j["p"] = map.p();
    j["k"] = map.k();
    j["g"] = map.dimension();
    j["polynomials"] = json::array();
    for (const auto& f : map.polynomials()) j["polynomials"].push_back(polynomial_to_json(f));
    if (map.inverse()) {
        j["inverse"] = json::array();
        for (const auto& f : *map.inverse()) j["inverse"].push_back(polynomial_to_json(f));
    }
    return j;
}

IntPoint parse_point(const std::string& csv) {
    IntPoint x;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParameterError("empty coordinate in point \"" + csv + "\"");
        mpz_class v;
        if (v.set_str(item.substr(b, e - b + 1), 10) != 0)
            throw ParameterError("malformed coordinate in point \"" + csv + "\"");
        x.push_back(v);
    }
    if (x.empty()) throw ParameterError("empty point");
    return x;
}

}  // namespace padorb::cli
