#include "shuffly/json_io.hpp"

namespace shuffly {

using nlohmann::json;

json poly_to_json(const poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::object();
        for (const auto& [var, e] : m) exps[var.name()] = e;
        terms.push_back(json{{"coeff", c.str()}, {"exps", exps}});
    }
    return terms;
}

poly poly_from_json(const json& j) {
    if (!j.is_array()) throw schema_error("numerator: expected an array of terms");
    poly p;
    for (const json& t : j) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") ||
            !t.at("coeff").is_string() || !t.at("exps").is_object())
            throw schema_error("term: expected {coeff: string, exps: object}");
        scalar c = [&] {
            try {
                return scalar(t.at("coeff").get<std::string>());
            } catch (const std::exception&) {
                throw schema_error("term: bad coefficient \"" +
                                   t.at("coeff").get<std::string>() + "\"");
            }
        }();
        monomial m;
        for (const auto& [name, val] : t.at("exps").items()) {
            auto var = variable::parse(name);
            if (!var) throw schema_error("term: unknown variable \"" + name + "\"");
            if (!val.is_number_integer()) throw schema_error("term: exponent must be integer");
            int e = val.get<int>();
            if (e != 0) m.emplace_back(*var, e);
        }
        std::sort(m.begin(), m.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 1; i < m.size(); ++i)
            if (m[i].first == m[i - 1].first)
                throw schema_error("term: duplicate variable in exps");
        p.add_term(m, c);
    }
    return p;
}

json element_to_json(const shuffle_element& f) {
    return json{{"parities", f.diagram().parities()},
                {"degree", f.degree()},
                {"numerator", poly_to_json(f.numerator())}};
}

shuffle_element element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("parities") || !j.contains("degree") ||
        !j.contains("numerator"))
        throw schema_error("element: expected {parities, degree, numerator}");
    dynkin_diagram d = [&] {
        try {
            return dynkin_diagram(j.at("parities").get<std::string>());
        } catch (const shuffly_error& e) {
            throw schema_error(e.what());
        } catch (const nlohmann::json::exception& e) {
            throw schema_error(std::string("element: bad parities: ") + e.what());
        }
    }();
    std::vector<int> degree;
    try {
        degree = j.at("degree").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("element: bad degree: ") + e.what());
    }
    poly num = poly_from_json(j.at("numerator"));

    algebra_mode mode = algebra_mode::rational;
    if (num.depends_on(variable::v())) mode = algebra_mode::trigonometric;
    for (variable var : num.variables())
        if (num.min_exponent_in(var) < 0) mode = algebra_mode::trigonometric;
    try {
        return shuffle_element(d, std::move(degree), std::move(num), mode);
    } catch (const shuffly_error& e) {
        throw schema_error(e.what());
    }
}

json specialization_to_json(const specialization_result& r) {
    json dv = json::array();
    for (const auto& [beta, mult] : r.d.support())
        dv.push_back(json::array({beta.name(), mult}));
    return json{{"d", dv}, {"value", poly_to_json(r.value)}};
}

json decomposition_to_json(const decomposition& dec) {
    json coeffs = json::array();
    for (const auto& [h, c] : dec.coefficients) {
        json mono = json::array();
        for (const auto& [beta, r] : h.factors()) mono.push_back(json::array({beta.name(), r}));
        coeffs.push_back(json{{"monomial", mono}, {"coeff", c.str()}});
    }
    return json{{"coefficients", coeffs}, {"residual", "0"}};
}

json check_records_to_json(const std::vector<check_record>& records) {
    json arr = json::array();
    for (const check_record& r : records) {
        json rec{{"name", r.name}, {"instance", r.instance}, {"pass", r.pass}};
        if (!r.pass) rec["witness"] = r.witness;
        arr.push_back(rec);
    }
    return arr;
}

} // namespace shuffly
