#pragma once

#include <json.hpp>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "log_poly.hpp"
#include "padic.hpp"
#include "rational.hpp"

// JSON encodings used across the CLI boundary.  Exact values travel as
// strings, never as floats: rationals as "num/den", cyclotomic elements as
// {"m": m, "coeffs": [...]}, polynomials in L as {"L_coeffs": [...]} ordered
// by ascending power of L.  Every encoder has a decoder that reproduces the
// in-memory value exactly.

namespace lbern {

using json = nlohmann::ordered_json;

inline json to_json(const rational& q) { return q.str(); }

inline json to_json(const cyclotomic& z) {
    json coeffs = json::array();
    for (const rational& c : z.coeffs())
        coeffs.push_back(c.str());
    return json{{"m", z.order()}, {"coeffs", std::move(coeffs)}};
}

template <class K>
json to_json(const log_poly<K>& poly) {
    json coeffs = json::array();
    for (long i = 0; i <= poly.degree(); ++i)
        coeffs.push_back(to_json(poly.coeff(i)));
    return json{{"L_coeffs", std::move(coeffs)}};
}

inline json to_json(const padic_int& v) {
    json out{{"residue", v.residue().str()}, {"p", v.p()}, {"prec_guaranteed", v.guaranteed()}};
    if (v.shift() > 0)
        out["pshift"] = v.shift();
    return out;
}

inline padic_int padic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("residue") || !j.contains("p") || !j.contains("prec_guaranteed"))
        throw invalid_parameter("json: padic value must carry residue, p, prec_guaranteed");
    long p = j.at("p").get<long>();
    long guaranteed = j.at("prec_guaranteed").get<long>();
    long shift = j.contains("pshift") ? j.at("pshift").get<long>() : 0;
    if (!j.at("residue").is_string())
        throw invalid_parameter("json: padic residue must be a string");
    Int residue{j.at("residue").get<std::string>()};
    return padic_int(p, guaranteed + shift, residue, shift);
}

inline rational rational_from_json(const json& j) {
    if (!j.is_string())
        throw invalid_parameter("json: rational must be a string");
    return rational::parse(j.get<std::string>());
}

inline cyclotomic cyclotomic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
        throw invalid_parameter("json: cyclotomic must be {\"m\", \"coeffs\"}");
    long m = j.at("m").get<long>();
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != euler_phi(m))
        throw invalid_parameter("json: cyclotomic needs phi(m) coefficients");
    cyclotomic acc = cyclotomic::zero(m);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        rational c = rational_from_json(coeffs[i]);
        if (!c.is_zero())
            acc = acc + cyclotomic(c, m) * cyclotomic::root_of_unity(m, static_cast<long>(i));
    }
    return acc;
}

inline log_poly<rational> rational_poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("L_coeffs") || !j.at("L_coeffs").is_array())
        throw invalid_parameter("json: polynomial must be {\"L_coeffs\": [...]}");
    std::vector<rational> coeffs;
    for (const json& c : j.at("L_coeffs"))
        coeffs.push_back(rational_from_json(c));
    return log_poly<rational>(std::move(coeffs));
}

inline log_poly<cyclotomic> cyclotomic_poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("L_coeffs") || !j.at("L_coeffs").is_array())
        throw invalid_parameter("json: polynomial must be {\"L_coeffs\": [...]}");
    std::vector<cyclotomic> coeffs;
    for (const json& c : j.at("L_coeffs"))
        coeffs.push_back(cyclotomic_from_json(c));
    return log_poly<cyclotomic>(std::move(coeffs));
}

} // namespace lbern
