#include <json.hpp>

#include "cayrec/checks.hpp"
#include "cayrec/reconstruct.hpp"

namespace cayrec {

namespace {

using nlohmann::json;

json cell_json(Cell c) { return json::array({c.row, c.col}); }

json quadrangle_json(const Quadrangle& q) {
    json out = json::array();
    for (Cell c : q.cells()) out.push_back(cell_json(c));
    return out;
}

json witness_json(const CheckWitness& w) {
    if (const auto* dup = std::get_if<DuplicateWitness>(&w)) {
        return {{"kind", "duplicate"},
                {"cells", json::array({cell_json(dup->first), cell_json(dup->second)})},
                {"value", dup->value}};
    }
    if (const auto* conflict = std::get_if<QuadrangleConflict>(&w)) {
        return {{"kind", "quadrangle_conflict"},
                {"first", quadrangle_json(conflict->first)},
                {"second", quadrangle_json(conflict->second)},
                {"values", json::array({conflict->first_value, conflict->second_value})}};
    }
    const auto& axiom = std::get<AxiomViolation>(w);
    return {{"kind", "axiom"}, {"axiom", axiom.axiom}, {"elements", axiom.elements}};
}

}  // namespace

std::string to_json(const CheckVerdict& v) {
    json out{{"pass", v.pass}};
    if (v.witness) out["witness"] = witness_json(*v.witness);
    return out.dump();
}

std::string to_json(const ReconstructionReport& report) {
    json out;
    switch (report.status) {
        case ReconstructionStatus::kComplete: out["status"] = "complete"; break;
        case ReconstructionStatus::kStuck: out["status"] = "stuck"; break;
        case ReconstructionStatus::kContradiction: out["status"] = "contradiction"; break;
    }
    out["mode"] = report.mode == ReconstructionMode::kQuadrangleOnly ? "quadrangle_only"
                                                                     : "quadrangle_plus_latin";
    if (report.at) out["at"] = cell_json(*report.at);
    json fills = json::array();
    for (const ReportFill& f : report.fills) {
        json fill{{"cell", cell_json(f.cell)}, {"value", f.value}};
        fill["target"] = f.target ? quadrangle_json(*f.target) : json();
        fill["witness"] = f.witness ? quadrangle_json(*f.witness) : json();
        fills.push_back(std::move(fill));
    }
    out["fills"] = std::move(fills);
    return out.dump();
}

std::string to_json(const HoleAnalysis& a) {
    const json out{{"n", a.n},
                   {"d", cell_json(a.d)},
                   {"t", a.t},
                   {"t0", a.t0},
                   {"tx", a.tx},
                   {"ty", a.ty},
                   {"tau_bound", a.tau_bound},
                   {"count_c1c3", a.count_c1c3},
                   {"count_c1c2c3", a.count_c1c2c3}};
    return out.dump();
}

}  // namespace cayrec
