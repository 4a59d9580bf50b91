#include "kleinpencil/wire.hpp"

#include <fstream>
#include <sstream>

namespace kleinpencil {

namespace {

Rational parse_rational(const std::string& text, const std::string& where) {
    Rational r;
    if (text.empty() || mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw curve_parse_error(where + ": malformed rational \"" + text + "\"");
    if (r.get_den() == 0) throw curve_parse_error(where + ": zero denominator in \"" + text + "\"");
    r.canonicalize();
    return r;
}

}  // namespace

Json cyc_to_wire(const CycNum& x) {
    Json out = Json::array();
    const std::vector<Rational>& c = x.coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        out.push_back(Json::array({j, c[j].get_str()}));
    }
    return out;
}

CycNum cyc_from_wire(const FieldCtxPtr& ctx, const Json& j) {
    if (!j.is_array()) throw curve_parse_error("coefficient: expected an array of [exp, ratio] terms");
    CycNum acc = CycNum::zero(ctx);
    for (size_t t = 0; t < j.size(); ++t) {
        std::string where = "coefficient term " + std::to_string(t);
        const Json& term = j[t];
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
            !term[1].is_string())
            throw curve_parse_error(where + ": expected [integer exponent, \"a/b\"]");
        long e = term[0].get<long>();
        long n = static_cast<long>(ctx->conductor());
        e %= n;
        if (e < 0) e += n;
        Rational r = parse_rational(term[1].get<std::string>(), where);
        acc = acc + CycNum::root_of_unity(ctx, static_cast<unsigned>(n), e) * r;
    }
    return acc;
}

Json curve_to_json(const TernaryForm& f, const std::string& label) {
    Json out;
    out["degree"] = f.degree();
    if (!label.empty()) out["label"] = label;
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json term;
        term["exps"] = Json::array({e[0], e[1], e[2]});
        term["coeff"] = cyc_to_wire(c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

TernaryForm curve_from_json(const FieldCtxPtr& ctx, const Json& j) {
    if (!j.is_object()) throw curve_parse_error("curve file: expected a JSON object");
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        throw curve_parse_error("curve file: missing integer \"degree\"");
    int degree = j["degree"].get<int>();
    if (degree < 0) throw curve_parse_error("curve file: negative degree");
    if (!j.contains("terms") || !j["terms"].is_array())
        throw curve_parse_error("curve file: missing \"terms\" array");
    std::vector<std::pair<ExpTriple, CycNum>> terms;
    const Json& arr = j["terms"];
    for (size_t t = 0; t < arr.size(); ++t) {
        std::string where = "term " + std::to_string(t);
        const Json& term = arr[t];
        if (!term.is_object() || !term.contains("exps") || !term.contains("coeff"))
            throw curve_parse_error(where + ": expected {\"exps\": [...], \"coeff\": [...]}");
        const Json& exps = term["exps"];
        if (!exps.is_array() || exps.size() != 3)
            throw curve_parse_error(where + ": \"exps\" must be an array of three integers");
        int vals[3];
        for (int i = 0; i < 3; ++i) {
            if (!exps[static_cast<size_t>(i)].is_number_integer())
                throw curve_parse_error(where + ": \"exps\" must be an array of three integers");
            vals[i] = exps[static_cast<size_t>(i)].get<int>();
            if (vals[i] < 0) throw curve_parse_error(where + ": negative exponent");
        }
        ExpTriple e{vals[0], vals[1], vals[2]};
        if (e.degree() != degree)
            throw curve_parse_error(where + ": exponents sum to " + std::to_string(e.degree()) +
                                    ", expected degree " + std::to_string(degree));
        CycNum c;
        try {
            c = cyc_from_wire(ctx, term["coeff"]);
        } catch (const curve_parse_error& err) {
            throw curve_parse_error(where + ": " + err.what());
        }
        terms.emplace_back(e, c);
    }
    TernaryForm f = TernaryForm::from_terms(ctx, terms);
    if (f.is_zero() && f.degree() != degree)
        return TernaryForm(ctx, degree);  // all terms cancelled; keep declared degree
    return f;
}

TernaryForm load_curve(const std::string& path, const FieldCtxPtr& ctx) {
    std::ifstream in(path);
    if (!in) throw curve_parse_error("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& err) {
        throw curve_parse_error(path + ": " + err.what());
    }
    try {
        return curve_from_json(ctx, j);
    } catch (const curve_parse_error& err) {
        throw curve_parse_error(path + ": " + err.what());
    }
}

void save_curve(const std::string& path, const TernaryForm& f, const std::string& label) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << curve_to_json(f, label).dump(2) << '\n';
}

Json sweep_to_json(const std::vector<ScenarioRow>& rows) {
    Json out;
    out["version"] = 1;
    Json arr = Json::array();
    for (const ScenarioRow& row : rows) {
        Json one;
        one["g"] = row.s.g;
        one["n"] = row.s.n;
        one["e_min"] = row.s.e_min;
        one["fibers"] = row.s.fibers;
        one["feasible"] = row.feasible;
        one["reason"] = row.reason;
        one["axioms"] = row.axioms;
        arr.push_back(one);
    }
    out["rows"] = arr;
    return out;
}

}  // namespace kleinpencil
