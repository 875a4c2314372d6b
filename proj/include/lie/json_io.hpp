#pragma once

#include <json.hpp>

#include "lie/laurent.hpp"
#include "lie/qseries.hpp"

namespace lie {

// Exact-series JSON schema:
// {"leading_exponent": "p/q", "order": N,
//  "coeffs": [{"qdeg": k, "terms": [{"exps": [...], "val": "p/q"}]}]}
// Rationals rendered as canonical strings, zero coefficients omitted.
inline nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["exps"] = e;
        t["val"] = c.str();
        terms.push_back(std::move(t));
    }
    return terms;
}

inline nlohmann::json to_json(const QSeries& s) {
    nlohmann::json j;
    j["leading_exponent"] = s.base().str();
    j["order"] = s.order();
    nlohmann::json coeffs = nlohmann::json::array();
    for (long k = 0; k <= s.order(); ++k) {
        if (s.coeff(k).is_zero()) continue;
        nlohmann::json c;
        c["qdeg"] = k;
        c["terms"] = to_json(s.coeff(k));
        coeffs.push_back(std::move(c));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline QSeries qseries_from_json(const nlohmann::json& j, std::size_t nvars) {
    QSeries s(Rat::parse(j.at("leading_exponent").get<std::string>()),
              j.at("order").get<long>(), nvars);
    for (const auto& c : j.at("coeffs")) {
        LaurentPoly p(nvars);
        for (const auto& t : c.at("terms"))
            p.add_term(t.at("exps").get<std::vector<long>>(),
                       Rat::parse(t.at("val").get<std::string>()));
        s.set_coeff(c.at("qdeg").get<long>(), std::move(p));
    }
    return s;
}

} // namespace lie
