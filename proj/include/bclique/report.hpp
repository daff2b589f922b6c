#pragma once

#include "bclique/bipoly.hpp"
#include "bclique/graph.hpp"
#include "bclique/numbers.hpp"
#include "bclique/roots.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bclique {

using Json = nlohmann::json;

enum class Verdict { Holds, Violated, NotApplicable, Unresolved };

inline std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::NotApplicable: return "not-applicable";
        case Verdict::Unresolved: return "unresolved";
    }
    return "unresolved";
}

// Machine-readable verdict for one theorem checker run. A Violated verdict
// always carries a witness sufficient to replay the violation.
struct CheckReport {
    std::string claim;
    Verdict verdict = Verdict::Unresolved;
    Json witness;  // null unless the verdict needs replay data
    std::string notes;

    Json to_json() const {
        Json j;
        j["claim"] = claim;
        j["verdict"] = std::string(verdict_name(verdict));
        j["witness"] = witness;
        j["notes"] = notes;
        return j;
    }
};

inline Json reports_to_json(const std::vector<CheckReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr;
}

inline Json interval_json(const RootInterval& iv) {
    return Json{{"lo", rat_string(iv.lo)}, {"hi", rat_string(iv.hi)}};
}

inline Json root_analysis_json(const RootAnalysis& ra) {
    Json roots = Json::array();
    for (const auto& iv : ra.negative_roots()) roots.push_back(interval_json(iv));
    Json j;
    j["negative_roots"] = roots;
    j["zeta"] = ra.has_negative_root() ? interval_json(ra.zeta()) : Json("neg-infinity");
    return j;
}

inline Json vertex_set_json(const Graph& g, VertexSet s) {
    Json arr = Json::array();
    for (int v : s.members()) arr.push_back(g.label(v));
    return arr;
}

// Self-contained graph payload for replayable witnesses (1-based labels).
inline Json graph_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({g.label(u), g.label(v)}));
    Json j;
    j["n"] = g.vertex_count();
    j["labels"] = g.labels();
    j["edges"] = edges;
    return j;
}

// {"terms": [{"i": int, "j": int, "c": "decimal-string"}, ...]} sorted by (i, j).
inline Json bipoly_to_json(const BivariatePoly& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back(Json{{"i", k.first}, {"j", k.second}, {"c", c.str()}});
    return Json{{"terms", terms}};
}

inline BivariatePoly bipoly_from_json(const Json& j) {
    BivariatePoly p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("i").get<int>(), t.at("j").get<int>(), Int(t.at("c").get<std::string>()));
    return p;
}

}  // namespace bclique
