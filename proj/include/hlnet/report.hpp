#ifndef HLNET_REPORT_HPP
#define HLNET_REPORT_HPP

// JSON views of the toolkit's result types.

#include "json.hpp"

#include "bounds.hpp"
#include "fault.hpp"
#include "graph.hpp"
#include "menger.hpp"

namespace hlnet {

inline constexpr const char* kToolVersion = "0.1.0";

using nlohmann::json;

inline json to_json(const Edge& e) { return json::array({e.u, e.v}); }

inline json to_json(const EdgeSet& s) {
    json out = json::array();
    for (const Edge& e : s) {
        out.push_back(to_json(e));
    }
    return out;
}

inline json to_json(const FlowResult& r) {
    return {{"source", r.source}, {"sink", r.sink}, {"value", r.value}, {"paths", r.paths}, {"cut", to_json(r.cut)}};
}

inline json to_json(const SmLambdaCounterexample& c) {
    return {{"u", c.u}, {"v", c.v}, {"flow", c.flow}, {"min_degree", c.min_degree}};
}

inline json to_json(const SmLambdaReport& r) {
    json out{{"verdict", r.verdict}, {"pairs_checked", r.pairs_checked}, {"counterexample", nullptr}};
    if (r.counterexample) {
        out["counterexample"] = to_json(*r.counterexample);
    }
    return out;
}

inline json to_json(const BoundReport& b) {
    json out{{"n", b.n}, {"g", b.g}, {"e_g", b.e_g}, {"f_g", b.f_g}, {"oracle_e_g", nullptr},
             {"verdict", b.pass ? "pass" : "fail"}};
    if (b.oracle_e_g) {
        out["oracle_e_g"] = *b.oracle_e_g;
    }
    return out;
}

inline json to_json(const SweepVerdict& v) {
    json out{{"lemma", v.lemma}, {"n", v.n}, {"verdict", v.pass ? "pass" : "fail"}, {"checked", v.checked},
             {"min_value", v.min_value}};
    if (!v.argmin.empty()) {
        out["argmin"] = v.argmin;
    }
    if (!v.violations.empty()) {
        out["violations"] = v.violations;
    }
    if (!v.violating_r_g.empty()) {
        out["violations_r_g"] = v.violating_r_g;
    }
    return out;
}

inline json to_json(const SearchResult& r) {
    json out{{"mode", to_string(r.mode)},
             {"r", r.r},
             {"m", r.m},
             {"verdict", to_string(r.verdict)},
             {"sets_examined", r.sets_examined},
             {"source", r.source},
             {"breaking", nullptr}};
    if (r.mode == SearchMode::sampled) {
        out["draws"] = r.draws;
        out["starved"] = r.starved;
    }
    if (!r.note.empty()) {
        out["note"] = r.note;
    }
    if (r.breaking) {
        out["breaking"] = {{"faults", to_json(r.breaking->faults)}, {"pair", to_json(r.breaking->pair)}};
    }
    return out;
}

inline json to_json(const ExtremalWitness& w) {
    return {{"n", w.n},
            {"r", w.r},
            {"subcube", w.subcube.vertices},
            {"u", w.u},
            {"subcube_neighbors", w.subcube_neighbors},
            {"kept", to_json(w.kept)},
            {"fault_count", w.faults.size()},
            {"faults", to_json(w.faults)},
            {"v", w.v},
            {"flow_value", w.flow_value},
            {"paths", w.flow.paths},
            {"cut", to_json(w.flow.cut)}};
}

inline json to_json(const ExhaustiveSmResult& r) {
    json out{{"r", r.r}, {"sm_lambda_r", r.value}, {"sets_examined", r.sets_examined}, {"breaking", nullptr}};
    if (!r.in_theorem_scope) {
        out["note"] = "outside paper scope";
    }
    if (r.breaking) {
        out["breaking"] = {{"faults", to_json(r.breaking->faults)}, {"pair", to_json(r.breaking->pair)}};
    }
    return out;
}

inline json to_json(const Lemma27Result& r) {
    json out{{"n", r.n},
             {"r", r.r},
             {"mode", to_string(r.mode)},
             {"max_faults", r.max_faults},
             {"threshold", r.threshold},
             {"verdict", r.pass ? "pass" : "fail"},
             {"sets_examined", r.sets_examined},
             {"smallest_largest_component", r.smallest_largest_component},
             {"violation", nullptr}};
    if (r.violation) {
        out["violation"] = to_json(*r.violation);
    }
    return out;
}

}  // namespace hlnet

#endif  // HLNET_REPORT_HPP
