#pragma once

#include <variant>

#include "solve.hpp"

namespace perfect {

// Sequence of maximum cliques maintained by the coloring loop.
struct CliqueList {
    std::vector<VertexSet> cliques;
};

struct ColoringResult {
    std::vector<int> color_of;
    int num_colors = 0;
    // The color classes double as a clique cover of the complement; the
    // robust output pairs them with a stable set of the complement.
    std::vector<VertexSet> classes;
    // Diagnostics for the acceptance suite: the clique list each color
    // class was built from.
    std::vector<CliqueList> cliques_per_class;
};

struct ImperfectionCertificate {
    std::vector<VertexSet> cliques;     // n+1 cliques of maximum cardinality
    std::vector<VertexSet> stable_sets; // each misses at least one clique
};

struct NotInClassCertificate {
    std::shared_ptr<TraceNode> trace;
};

using ColorOutcome = std::variant<ColoringResult, ImperfectionCertificate, NotInClassCertificate>;

struct CliqueResult {
    bool ok = false;
    VertexSet clique;
    Weight weight = 0;
    std::shared_ptr<TraceNode> cert;
};

// Maximum weighted clique via the stable-set solver on the complement (the
// class is closed under complementation).  Restrictions are expressed by
// zeroing weights.
inline CliqueResult omega_and_max_clique(const Trigraph& g, const std::vector<Weight>& w) {
    Trigraph c = complement(g);
    c.w = w;
    SolveOutcome r = alpha(c);
    CliqueResult out;
    if (!r.ok) {
        out.cert = std::shared_ptr<TraceNode>(std::move(r.trace));
        return out;
    }
    out.ok = true;
    out.weight = r.alpha;
    // drop zero-weight padding so the clique is exactly the weighted one
    for (int v : r.stable_set)
        if (w[v] > 0) out.clique.push_back(v);
    return out;
}

struct HittingResult {
    bool ok = false;
    VertexSet set;
    Weight y_weight = 0;
    std::shared_ptr<TraceNode> cert;
};

// Stable set maximizing the clique-membership weights y_v; on perfect
// in-class inputs it intersects every listed maximum clique.
inline HittingResult stable_hitting_cliques(const Trigraph& g, const CliqueList& ks) {
    Trigraph t = g;
    for (int v = 0; v < t.n; ++v) t.w[v] = 0;
    for (const auto& k : ks.cliques)
        for (int v : k) ++t.w[v];
    SolveOutcome r = alpha(t);
    HittingResult out;
    if (!r.ok) {
        out.cert = std::shared_ptr<TraceNode>(std::move(r.trace));
        return out;
    }
    out.ok = true;
    out.y_weight = r.alpha;
    out.set = r.stable_set;
    return out;
}

// Optimal coloring from the stable-set oracle: per color class, grow a list
// of maximum cliques until some maximum-y-weight stable set hits all maximum
// cliques, assign it as a class and recurse on the rest.  The clique list of
// a perfect graph cannot exceed n entries (its incidence rows stay linearly
// independent), so crossing n+1 yields an imperfection certificate.
inline ColorOutcome color(const Trigraph& g) {
    if (!g.is_graph()) throw ContractViolation{"color: input has switchable pairs"};
    int n = g.n;
    ColoringResult res;
    res.color_of.assign(n, -1);
    Bits remaining(n);
    remaining.set_all();
    auto unit_weights = [&](const Bits& on) {
        std::vector<Weight> w(n, 0);
        on.for_each([&](int v) { w[v] = 1; });
        return w;
    };
    CliqueResult om = omega_and_max_clique(g, unit_weights(remaining));
    if (!om.ok) return NotInClassCertificate{om.cert};
    Weight omega_cur = om.weight;
    while (remaining.any()) {
        CliqueList ks;
        std::vector<VertexSet> missed;
        while (true) {
            if (int(ks.cliques.size()) > n)
                return ImperfectionCertificate{ks.cliques, missed};
            Trigraph t = g;
            for (int v = 0; v < n; ++v) t.w[v] = 0;
            for (const auto& k : ks.cliques)
                for (int v : k) ++t.w[v];
            for (int v = 0; v < n; ++v)
                if (!remaining.get(v)) t.w[v] = 0;
            SolveOutcome rs = alpha(t);
            if (!rs.ok) return NotInClassCertificate{std::shared_ptr<TraceNode>(std::move(rs.trace))};
            VertexSet s;
            for (int v : rs.stable_set)
                if (remaining.get(v)) s.push_back(v);
            Bits rem_minus = remaining;
            for (int v : s) rem_minus.reset(v);
            CliqueResult step = omega_and_max_clique(g, unit_weights(rem_minus));
            if (!step.ok) return NotInClassCertificate{step.cert};
            if (step.weight < omega_cur) {
                int cls = res.num_colors++;
                for (int v : s) res.color_of[v] = cls;
                res.classes.push_back(s);
                res.cliques_per_class.push_back(ks);
                remaining = rem_minus;
                omega_cur = step.weight;
                break;
            }
            // the stable set missed some maximum clique; record and extend
            missed.push_back(s);
            ks.cliques.push_back(step.clique);
        }
    }
    return res;
}

struct RobustPair {
    VertexSet stable_set;            // k vertices
    std::vector<VertexSet> cliques;  // k cliques partitioning V
};

struct DualityGapCertificate {
    VertexSet stable_set;
    std::vector<VertexSet> cliques;
};

using RobustOutcome =
    std::variant<RobustPair, ImperfectionCertificate, NotInClassCertificate, DualityGapCertificate>;

// Robust entry point: a maximum stable set plus an equal-size partition of
// V into cliques certifies both optimality claims by duality, for any input
// graph.  Otherwise some certificate is produced.
inline RobustOutcome robust_solve(const Trigraph& g) {
    if (!g.is_graph()) throw ContractViolation{"robust_solve: input has switchable pairs"};
    Trigraph unit = g;
    for (int v = 0; v < g.n; ++v) unit.w[v] = 1;
    SolveOutcome rs = alpha(unit);
    if (!rs.ok) return NotInClassCertificate{std::shared_ptr<TraceNode>(std::move(rs.trace))};
    ColorOutcome co = color(complement(unit));
    if (auto* cert = std::get_if<ImperfectionCertificate>(&co)) return *cert;
    if (auto* cert = std::get_if<NotInClassCertificate>(&co)) return *cert;
    ColoringResult& cover = std::get<ColoringResult>(co);
    // the color classes of the complement are cliques of g
    if (Weight(cover.classes.size()) == rs.alpha) {
        bool valid = true;
        for (const auto& k : cover.classes) {
            int hit = 0;
            for (int v : k)
                if (std::find(rs.stable_set.begin(), rs.stable_set.end(), v) !=
                    rs.stable_set.end())
                    ++hit;
            if (hit != 1) valid = false;
        }
        if (valid) return RobustPair{rs.stable_set, cover.classes};
    }
    return DualityGapCertificate{rs.stable_set, cover.classes};
}

} // namespace perfect
