#include "lsemid/json_io.hpp"

#include <fstream>

#include "lsemid/errors.hpp"

namespace lsemid {

using nlohmann::json;

MixedGraph graph_from_json(const json& j) {
    MixedGraph g;
    g.p = j.at("p").get<int>();
    if (j.contains("directed"))
        for (const auto& e : j.at("directed"))
            g.directed.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("bidirected"))
        for (const auto& e : j.at("bidirected"))
            g.bidirected.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    normalize(g);
    return g;
}

json graph_to_json(const MixedGraph& g) {
    json j;
    j["p"] = g.p;
    j["directed"] = json::array();
    for (const auto& [u, v] : g.directed) j["directed"].push_back({u, v});
    j["bidirected"] = json::array();
    for (const auto& [u, v] : g.bidirected) j["bidirected"].push_back({u, v});
    return j;
}

MixedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error("parse error in " + path + ": " + e.what());
    }
    try {
        return graph_from_json(j);
    } catch (const json::exception& e) {
        throw Error("bad graph document " + path + ": " + e.what());
    }
}

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    const VariableTable& t = p.table();
    for (const Term& term : p.terms()) {
        json m = json::array();
        for (const auto& [var, exp] : term.mono.exps()) m.push_back({t.name(var), exp});
        terms.push_back({{"c", term.coeff.get_str()}, {"m", m}});
    }
    return {{"text", p.str()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j, const TablePtr& table) {
    std::vector<Term> terms;
    for (const auto& tj : j.at("terms")) {
        std::vector<std::pair<int, int>> exps;
        for (const auto& mj : tj.at("m")) {
            const int var = table->find(mj.at(0).get<std::string>());
            if (var < 0) throw Error("unknown variable in polynomial: " + mj.at(0).dump());
            exps.emplace_back(var, mj.at(1).get<int>());
        }
        terms.push_back({Monomial::make(*table, std::move(exps)), Rational(tj.at("c").get<std::string>())});
    }
    return Polynomial::from_terms(table, std::move(terms));
}

json report_to_json(const IdentificationReport& r, bool emit_formulas,
                    const std::optional<VerificationResult>& verification) {
    const VariableTable& t = *r.table;
    json j;
    j["verdict"] = to_string(r.verdict);
    j["method"] = r.method;
    j["graph"] = graph_to_json(r.graph);
    j["settings"] = {
        {"d", r.degree},
        {"d_prime", r.degree_budget},
        {"tian", r.tian},
        {"early_stop_lambda", r.early_stop_lambda},
        {"incremental", r.incremental},
        {"spair_cap", r.limits.spair_cap},
        {"timeout_scope", r.limits.timeout_covers_preprocessing ? "all" : "gb"},
    };
    if (r.limits.timeout_seconds) j["settings"]["timeout_seconds"] = *r.limits.timeout_seconds;
    json params = json::array();
    for (const auto& p : r.parameters) {
        json pj;
        pj["name"] = t.name(p.parameter);
        pj["status"] = p.status == ParamStatus::Identified ? "identified"
                                                           : "not_identified_within_degree";
        if (p.formula && emit_formulas) {
            const auto& f = *p.formula;
            pj["formula_numerator"] = polynomial_to_json(f.numerator);
            pj["formula_denominator"] = polynomial_to_json(f.denominator);
            pj["source"] = polynomial_to_json(f.source);
            json deps = json::array();
            for (int d : f.depends_on) deps.push_back(t.name(d));
            pj["depends_on"] = deps;
            pj["w_degree"] = f.w_degree;
            pj["plain_degree"] = f.plain_degree;
            pj["found_at_degree"] = f.found_at_degree;
        }
        params.push_back(std::move(pj));
    }
    j["parameters"] = std::move(params);
    json order = json::array();
    for (int v : r.identification_order) order.push_back(t.name(v));
    j["identification_order"] = std::move(order);
    j["timings"] = {
        {"total_s", r.total_seconds},
        {"preprocess_s", r.preprocess_seconds},
        {"groebner_s", r.groebner_seconds},
    };
    j["effort"] = {{"exceeded", r.effort_exceeded}, {"spairs_used", r.spairs_used}};
    if (verification) {
        json v = {{"trials", verification->trials}, {"passed", verification->passed}};
        if (verification->counterexample) v["counterexample"] = *verification->counterexample;
        j["verification"] = v;
    }
    return j;
}

IdentificationReport report_from_json(const json& j) {
    IdentificationReport r;
    r.graph = graph_from_json(j.at("graph"));
    validate(r.graph);
    const TrekWeights w = trek_weights(r.graph);
    r.table = VariableTable::for_graph(r.graph, w);
    r.method = j.value("method", "");
    const std::string verdict = j.at("verdict").get<std::string>();
    r.verdict = verdict == "yes" ? Verdict::Yes : (verdict == "partial" ? Verdict::Partial : Verdict::No);
    if (j.contains("settings")) {
        r.degree = j["settings"].value("d", 0);
        r.degree_budget = j["settings"].value("d_prime", 0);
        r.tian = j["settings"].value("tian", false);
        r.early_stop_lambda = j["settings"].value("early_stop_lambda", false);
    }
    for (const auto& pj : j.at("parameters")) {
        ParamResult pr;
        pr.parameter = r.table->find(pj.at("name").get<std::string>());
        if (pr.parameter < 0) throw Error("unknown parameter in report: " + pj.at("name").dump());
        if (pj.at("status").get<std::string>() == "identified") {
            pr.status = ParamStatus::Identified;
            if (pj.contains("formula_numerator")) {
                IdentifyingFormula f;
                f.parameter = pr.parameter;
                f.numerator = polynomial_from_json(pj.at("formula_numerator"), r.table);
                f.denominator = polynomial_from_json(pj.at("formula_denominator"), r.table);
                if (pj.contains("source")) f.source = polynomial_from_json(pj.at("source"), r.table);
                if (pj.contains("depends_on"))
                    for (const auto& d : pj.at("depends_on"))
                        f.depends_on.push_back(r.table->find(d.get<std::string>()));
                f.w_degree = pj.value("w_degree", 0ull);
                f.plain_degree = pj.value("plain_degree", 0u);
                f.found_at_degree = pj.value("found_at_degree", 0ull);
                pr.formula = std::move(f);
            }
        }
        r.parameters.push_back(std::move(pr));
    }
    for (const auto& name : j.at("identification_order")) {
        const int var = r.table->find(name.get<std::string>());
        if (var < 0) throw Error("unknown variable in identification order");
        r.identification_order.push_back(var);
    }
    return r;
}

}  // namespace lsemid
