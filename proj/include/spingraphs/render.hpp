#ifndef SPINGRAPHS_RENDER_HPP
#define SPINGRAPHS_RENDER_HPP

#include <string>

#include <json.hpp>

#include "graph.hpp"

namespace spingraphs {

/// Deterministic DOT serialization. A digraph container holds both edge
/// species: straight edges are emitted without arrowheads and labelled by
/// their multiplicity, arc decorations as dashed arrowed edges labelled by k.
inline std::string to_dot(const SpinGraph& graph) {
    std::string out;
    out += "digraph spin_graph {\n";
    out += "  label=\"" + std::string(kind_name(graph.kind()));
    if (graph.exceptional_class()) {
        out += " khat=(";
        const Partition& khat = graph.exceptional_class()->khat();
        for (std::size_t n = 0; n < khat.size(); ++n)
            out += (n ? "," : "") + std::to_string(khat[n]);
        out += ")";
    }
    out += " g=" + std::to_string(graph.genus()) + "\";\n";
    for (const auto& gv : graph.vertices())
        out += "  \"" + gv.id.name() + "\";\n";
    for (const auto& e : graph.edges()) {
        out += "  \"" + e.u.name() + "\" -> \"" + e.v.name() + "\" [dir=none, label=\"" +
               std::to_string(e.multiplicity) + "\"];\n";
        if (e.arc)
            out += "  \"" + e.arc->from.name() + "\" -> \"" + e.other(e.arc->from).name() +
                   "\" [style=dashed, label=\"" + std::to_string(e.arc->label) + "\"];\n";
    }
    out += "}\n";
    return out;
}

/// Deterministic JSON serialization:
/// {genus, kind, class: {r, khat, i, p} | null,
///  vertices: [{id, conjugate, divisor: [{point, mult}...], k0, eps_degree}...],
///  edges: [{u, v, mult, arc: {from, label} | null}...],
///  branch_number}
inline nlohmann::ordered_json to_json(const SpinGraph& graph) {
    nlohmann::ordered_json j;
    j["genus"] = graph.genus();
    j["kind"] = kind_name(graph.kind());
    if (graph.exceptional_class()) {
        const ExceptionalClass& c = *graph.exceptional_class();
        j["class"] = {{"r", c.order()}, {"khat", c.khat()}, {"i", c.i()}, {"p", c.p()}};
    } else {
        j["class"] = nullptr;
    }
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& gv : graph.vertices()) {
        nlohmann::ordered_json v;
        v["id"] = gv.id.name();
        v["conjugate"] = gv.id.conjugate().name();
        v["divisor"] = nlohmann::ordered_json::array();
        for (const auto& [point, mult] : gv.divisor.terms())
            v["divisor"].push_back({{"point", point.name()}, {"mult", mult}});
        v["k0"] = graph.self_exponent(gv.id);
        v["eps_degree"] = epsilon_degree(gv.divisor);
        j["vertices"].push_back(std::move(v));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : graph.edges()) {
        nlohmann::ordered_json edge;
        edge["u"] = e.u.name();
        edge["v"] = e.v.name();
        edge["mult"] = e.multiplicity;
        if (e.arc)
            edge["arc"] = {{"from", e.arc->from.name()}, {"label", e.arc->label}};
        else
            edge["arc"] = nullptr;
        j["edges"].push_back(std::move(edge));
    }
    j["branch_number"] = graph_branch_number(graph);
    return j;
}

} // namespace spingraphs

#endif
