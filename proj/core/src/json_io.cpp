#include "tca/json_io.hpp"

#include <limits>

namespace tca {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) {
    try {
        return body();
    } catch (const Json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

Json terms_object(const std::map<Partition, Rational>& terms) {
    Json out = Json::object();
    for (const auto& [lambda, c] : terms) out[lambda.to_string()] = to_string(c);
    return out;
}

Json ttpoly_terms(const TTPoly& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) arr.push_back({{"t", m.t.to_string()}, {"T", m.T.to_string()}, {"coeff", to_string(c)}});
    return arr;
}

std::string exponent_key(const Exponent& e) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
    return key;
}

Exponent parse_exponent_key(const std::string& key, int d) {
    Exponent e;
    std::size_t pos = 0;
    while (pos < key.size()) {
        const auto next = key.find(',', pos);
        const std::string piece = key.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            std::size_t used = 0;
            e.push_back(std::stoi(piece, &used));
            if (used != piece.size()) throw ParseError("bad exponent '" + key + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad exponent '" + key + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (static_cast<int>(e.size()) != d) throw ParseError("exponent '" + key + "' has the wrong length");
    return e;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return to_string(z);
}

Json to_json(const SymFunc& f) {
    Json out;
    out["basis"] = basis_tag(f.basis());
    out["truncation"] = f.truncation() ? Json(*f.truncation()) : Json(nullptr);
    out["terms"] = terms_object(f.terms());
    return out;
}

Json to_json(const SigmaExpr& e) {
    Json arr = Json::array();
    for (const auto& [m, c] : e.terms()) arr.push_back({{"s", m.s.to_string()}, {"sigma", m.sigma}, {"coeff", to_string(c)}});
    return {{"terms", arr}};
}

Json to_json(const ExpPoly& h) {
    Json out = Json::object();
    for (const auto& [r, p] : h.parts()) {
        Json coeffs = Json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
        out[std::to_string(r)] = coeffs;
    }
    return out;
}

Json to_json(const TSeries& s) { return {{"truncation", s.truncation()}, {"terms", terms_object(s.terms())}}; }

Json to_json(const TTPoly& p) { return ttpoly_terms(p); }

Json to_json(const EnhancedExpr& e) {
    Json out = Json::object();
    for (const auto& [k, p] : e.parts()) out[std::to_string(k)] = ttpoly_terms(p);
    return out;
}

Json to_json(const OdeOperator& op) {
    Json out = Json::array();
    for (const auto& p : op.coeffs) {
        Json coeffs = Json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
        out.push_back(coeffs);
    }
    return out;
}

Json to_json(const CharPolyForm& form) {
    Json entries = Json::array();
    for (const auto& [i, p] : form.entries) entries.push_back({{"i", i}, {"p", ttpoly_terms(p)}, {"text", p.to_string()}});
    return {{"m", form.m}, {"threshold", form.threshold}, {"entries", entries}};
}

Json to_json(const GrClass& c) {
    Json terms = Json::object();
    for (const auto& [alpha, v] : c.terms()) terms[alpha.to_string()] = integer_to_json(v);
    return {{"d", c.d()}, {"r", c.r()}, {"terms", terms}};
}

Json to_json(const LambdaGrClass& c) {
    Json terms = Json::object();
    for (const auto& [mu, g] : c.terms()) terms[mu.to_string()] = to_json(g);
    return {{"d", c.d()}, {"r", c.r()}, {"terms", terms}};
}

Json to_json(const LaurentPoly& f) {
    Json terms = Json::object();
    for (const auto& [e, c] : f.terms()) terms[exponent_key(e)] = to_string(c);
    return {{"d", f.nvars()}, {"terms", terms}};
}

Json to_json(const CoeffSeries& c) {
    Json out = Json::array();
    for (const auto& x : c) out.push_back(to_string(x));
    return out;
}

Json to_json(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(integer_to_json(x));
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    throw ParseError("expected a rational as string or integer");
}

Integer integer_from_json(const Json& j) {
    const Rational q = rational_from_json(j);
    if (!is_integer(q)) throw ParseError("expected an integer, got " + to_string(q));
    return q.get_num();
}

SymFunc symfunc_from_json(const Json& j) {
    return guarded("SymFunc", [&] {
        std::optional<int> trunc;
        if (j.contains("truncation") && !j.at("truncation").is_null()) trunc = j.at("truncation").get<int>();
        SymFunc f(parse_basis(j.at("basis").get<std::string>()), trunc);
        for (const auto& [key, v] : j.at("terms").items()) f.add_term(Partition::parse(key), rational_from_json(v));
        return f;
    });
}

SigmaExpr sigma_from_json(const Json& j) {
    return guarded("SigmaExpr", [&] {
        SigmaExpr e;
        for (const auto& t : j.at("terms"))
            e.add_term({Partition::parse(t.at("s").get<std::string>()), t.at("sigma").get<std::vector<int>>()},
                       rational_from_json(t.at("coeff")));
        return e;
    });
}

ExpPoly exppoly_from_json(const Json& j) {
    return guarded("ExpPoly", [&] {
        ExpPoly h;
        for (const auto& [key, v] : j.items()) {
            std::vector<Rational> c;
            for (const auto& x : v) c.push_back(rational_from_json(x));
            int r = 0;
            try {
                r = std::stoi(key);
            } catch (const std::logic_error&) {
                throw ParseError("ExpPoly: bad exponent '" + key + "'");
            }
            h.add_part(r, UPoly(std::move(c)));
        }
        return h;
    });
}

TSeries tseries_from_json(const Json& j) {
    return guarded("TSeries", [&] {
        TSeries s(j.at("truncation").get<int>());
        for (const auto& [key, v] : j.at("terms").items()) s.add_term(Partition::parse(key), rational_from_json(v));
        return s;
    });
}

OdeOperator ode_from_json(const Json& j) {
    return guarded("OdeOperator", [&] {
        OdeOperator op;
        for (const auto& p : j) {
            std::vector<Rational> c;
            for (const auto& x : p) c.push_back(rational_from_json(x));
            op.coeffs.emplace_back(std::move(c));
        }
        return op;
    });
}

GrClass grclass_from_json(const Json& j) {
    return guarded("GrClass", [&] {
        GrClass c(j.at("d").get<int>(), j.at("r").get<int>());
        for (const auto& [key, v] : j.at("terms").items()) c.add_term(Partition::parse(key), integer_from_json(v));
        return c;
    });
}

LambdaGrClass lambda_grclass_from_json(const Json& j) {
    return guarded("LambdaGrClass", [&] {
        LambdaGrClass c(j.at("d").get<int>(), j.at("r").get<int>());
        for (const auto& [key, v] : j.at("terms").items()) c.add(Partition::parse(key), grclass_from_json(v));
        return c;
    });
}

LaurentPoly laurent_from_json(const Json& j) {
    return guarded("LaurentPoly", [&] {
        const int d = j.at("d").get<int>();
        LaurentPoly f(d);
        for (const auto& [key, v] : j.at("terms").items()) f.add_term(parse_exponent_key(key, d), rational_from_json(v));
        return f;
    });
}

CoeffSeries coeffs_from_json(const Json& j) {
    return guarded("CoeffSeries", [&] {
        if (!j.is_array()) throw ParseError("CoeffSeries: expected an array");
        CoeffSeries c;
        for (const auto& x : j) c.push_back(rational_from_json(x));
        return c;
    });
}

}  // namespace tca
