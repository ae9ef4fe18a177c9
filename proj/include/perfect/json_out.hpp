#pragma once

#include <json.hpp>

#include "color.hpp"
#include "solve.hpp"

// JSON serialization of solver results and certificates.  Vertex sets are
// emitted as sorted 1-indexed arrays to match the text formats.

namespace perfect {

using json = nlohmann::json;

inline json set_to_json(const VertexSet& s) {
    VertexSet v = s;
    std::sort(v.begin(), v.end());
    json a = json::array();
    for (int x : v) a.push_back(x + 1);
    return a;
}

inline json trigraph_to_json(const Trigraph& t) {
    json j;
    j["n"] = t.n;
    j["weights"] = t.w;
    json e = json::array(), s = json::array();
    for (int u = 0; u < t.n; ++u)
        for (int v = u + 1; v < t.n; ++v) {
            if (t.theta(u, v) == kStrongEdge) e.push_back({u + 1, v + 1});
            if (t.theta(u, v) == kSwitchable) s.push_back({u + 1, v + 1});
        }
    j["edges"] = e;
    j["switchable"] = s;
    return j;
}

inline json split_to_json(const TwoJoinSplit& s) {
    json j;
    j["A1"] = set_to_json(s.A1);
    j["B1"] = set_to_json(s.B1);
    j["C1"] = set_to_json(s.C1);
    j["A2"] = set_to_json(s.A2);
    j["B2"] = set_to_json(s.B2);
    j["C2"] = set_to_json(s.C2);
    j["complemented"] = s.complemented;
    j["parity"] = s.parity == Parity::odd ? "odd" : (s.parity == Parity::even ? "even" : "unknown");
    return j;
}

inline json prelabel_to_json(const PreLabel& p) {
    json j;
    j["kind"] = decomp_kind_name(p.kind);
    if (is_complement_kind(p.kind)) {
        j["alphaA"] = p.aA;
        j["alphaB"] = p.aB;
    } else {
        j["alphaAC"] = p.aAC;
        j["alphaBC"] = p.aBC;
        j["alphaC"] = p.aC;
    }
    j["alphaX"] = p.aX;
    return j;
}

inline json trace_to_json(const TraceNode& node) {
    json j;
    j["n"] = node.n;
    switch (node.kind) {
        case TraceNode::basic_leaf:
            j["type"] = "basic-leaf";
            j["class"] = node.basic_class;
            break;
        case TraceNode::decomposition: {
            j["type"] = "decomposition";
            j["kind"] = decomp_kind_name(node.dkind);
            j["split"] = split_to_json(node.split);
            j["prelabel"] = prelabel_to_json(node.pre);
            json ch = json::array();
            for (const auto& c : node.children)
                if (c) ch.push_back(trace_to_json(*c));
            j["children"] = ch;
            break;
        }
        case TraceNode::not_in_class_leaf:
            j["type"] = "not-in-class-leaf";
            j["reasons"] = node.reasons;
            if (node.leaf) j["leaf"] = trigraph_to_json(*node.leaf);
            break;
    }
    return j;
}

inline json labeling_to_json(const std::vector<std::pair<MarkedComponent, Label>>& labeling) {
    json a = json::array();
    for (const auto& [comp, label] : labeling) {
        json j;
        j["component"] = set_to_json(comp.verts);
        j["prelabel"] = prelabel_to_json(label.pre);
        j["tag"] = basic_tag_name(label.tag);
        a.push_back(j);
    }
    return a;
}

inline json solve_to_json(const SolveOutcome& r) {
    json j;
    j["solved"] = r.ok;
    if (r.ok) {
        j["alpha"] = r.alpha;
        j["stableSet"] = set_to_json(r.stable_set);
        j["labeling"] = labeling_to_json(r.labeling);
    }
    if (r.trace) j["trace"] = trace_to_json(*r.trace);
    if (!r.ok) j["certificate"] = {{"kind", "not-in-class"}};
    return j;
}

inline json coloring_to_json(const ColoringResult& c) {
    json j;
    j["numColors"] = c.num_colors;
    json cols = json::array();
    for (int x : c.color_of) cols.push_back(x);
    j["colors"] = cols;
    json classes = json::array();
    for (const auto& k : c.classes) classes.push_back(set_to_json(k));
    j["cliqueCoverOfComplement"] = classes;
    return j;
}

inline json color_outcome_to_json(const ColorOutcome& out) {
    json j;
    if (const auto* c = std::get_if<ColoringResult>(&out)) {
        j["solved"] = true;
        j["coloring"] = coloring_to_json(*c);
        return j;
    }
    j["solved"] = false;
    if (const auto* imp = std::get_if<ImperfectionCertificate>(&out)) {
        json cliques = json::array(), stables = json::array();
        for (const auto& k : imp->cliques) cliques.push_back(set_to_json(k));
        for (const auto& s : imp->stable_sets) stables.push_back(set_to_json(s));
        j["certificate"] = {{"kind", "imperfection"}, {"cliques", cliques}, {"stableSets", stables}};
    } else if (const auto* nic = std::get_if<NotInClassCertificate>(&out)) {
        j["certificate"] = {{"kind", "not-in-class"}, {"trace", trace_to_json(*nic->trace)}};
    }
    return j;
}

inline json robust_to_json(const RobustOutcome& out) {
    json j;
    if (const auto* p = std::get_if<RobustPair>(&out)) {
        j["solved"] = true;
        j["stableSet"] = set_to_json(p->stable_set);
        json cliques = json::array();
        for (const auto& k : p->cliques) cliques.push_back(set_to_json(k));
        j["cliqueCover"] = cliques;
        return j;
    }
    j["solved"] = false;
    if (const auto* imp = std::get_if<ImperfectionCertificate>(&out)) {
        json cliques = json::array(), stables = json::array();
        for (const auto& k : imp->cliques) cliques.push_back(set_to_json(k));
        for (const auto& s : imp->stable_sets) stables.push_back(set_to_json(s));
        j["certificate"] = {{"kind", "imperfection"}, {"cliques", cliques}, {"stableSets", stables}};
    } else if (const auto* nic = std::get_if<NotInClassCertificate>(&out)) {
        j["certificate"] = {{"kind", "not-in-class"}, {"trace", trace_to_json(*nic->trace)}};
    } else if (const auto* gap = std::get_if<DualityGapCertificate>(&out)) {
        json cliques = json::array();
        for (const auto& k : gap->cliques) cliques.push_back(set_to_json(k));
        j["certificate"] = {{"kind", "duality-gap"},
                            {"stableSet", set_to_json(gap->stable_set)},
                            {"cliqueCover", cliques}};
    }
    return j;
}

} // namespace perfect
