#pragma once

#include <array>
#include <memory>

#include "basic.hpp"
#include "blocks.hpp"
#include "detect.hpp"
#include "trigraph.hpp"

namespace perfect {

// ---------------------------------------------------------------------------
// Prelabels, labels, expansion

enum class DecompKind { complement_odd_2join, odd_2join, complement_even_2join, even_2join };

inline const char* decomp_kind_name(DecompKind k) {
    switch (k) {
        case DecompKind::complement_odd_2join: return "complement-odd-2join";
        case DecompKind::odd_2join: return "odd-2join";
        case DecompKind::complement_even_2join: return "complement-even-2join";
        case DecompKind::even_2join: return "even-2join";
    }
    return "?";
}

inline bool is_complement_kind(DecompKind k) {
    return k == DecompKind::complement_odd_2join || k == DecompKind::complement_even_2join;
}

// Stored alpha values of the decomposed-away side: aA, aB, aX for the
// complement kinds; aAC, aBC, aC, aX for the 2-join kinds.
struct PreLabel {
    DecompKind kind;
    Weight aA = 0, aB = 0, aAC = 0, aBC = 0, aC = 0, aX = 0;
};

// The inequality suite every prelabel must satisfy; failures are a
// not-in-class signal.
inline bool prelabel_inequalities_ok(const PreLabel& p) {
    if (is_complement_kind(p.kind)) return p.aA >= 0 && p.aB >= 0 && p.aX >= 0;
    if (!(0 <= p.aC && p.aC <= p.aAC && p.aC <= p.aBC)) return false;
    if (!(p.aAC <= p.aX && p.aBC <= p.aX && p.aX <= p.aAC + p.aBC)) return false;
    if (p.kind == DecompKind::odd_2join && !(p.aC + p.aX <= p.aAC + p.aBC)) return false;
    if (p.kind == DecompKind::even_2join && !(p.aAC + p.aBC <= p.aC + p.aX)) return false;
    return true;
}

enum class BasicTag {
    bipartite,
    complement_bipartite,
    line,
    complement_line,
    doubled_matching,
    doubled_antimatching
};

inline const char* basic_tag_name(BasicTag t) {
    switch (t) {
        case BasicTag::bipartite: return "bipartite";
        case BasicTag::complement_bipartite: return "complement-of-bipartite";
        case BasicTag::line: return "line";
        case BasicTag::complement_line: return "complement-of-line";
        case BasicTag::doubled_matching: return "doubled-matching";
        case BasicTag::doubled_antimatching: return "doubled-antimatching";
    }
    return "?";
}

// Tags whose odd-2-join expansion clones both endpoints (four markers);
// the others clone only the a endpoint (three markers).
inline bool odd_expansion_two_clones(BasicTag t) {
    return t == BasicTag::bipartite || t == BasicTag::complement_line ||
           t == BasicTag::doubled_matching;
}

// A prelabeled switchable component.  va/vb are the endpoint roles the
// stored alpha values refer to; vc is the path center for the even kinds.
struct MarkedComponent {
    VertexSet verts;
    int va = -1, vb = -1, vc = -1;
    PreLabel pre;
};

struct Label {
    PreLabel pre;
    BasicTag tag;
};

// Canonical vertex universe of an expansion: original ids first, clone ids
// appended per component in order (a' then b').  Lets a caller translate
// stable sets returned by a recursive call without materializing the
// expansion.
struct UniverseMap {
    int base_n = 0;
    int total = 0;
    std::vector<std::array<int, 2>> clone_ids; // per comp: a', b' (-1 absent)
};

inline UniverseMap universe_of(int n, const std::vector<MarkedComponent>& comps,
                               const std::vector<BasicTag>& tags) {
    UniverseMap u;
    u.base_n = n;
    u.total = n;
    u.clone_ids.assign(comps.size(), {-1, -1});
    for (size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].pre.kind != DecompKind::odd_2join) continue;
        u.clone_ids[i][0] = u.total++;
        if (odd_expansion_two_clones(tags[i])) u.clone_ids[i][1] = u.total++;
    }
    return u;
}

// Gadget weights the expansion assigns to a component's vertices and clones
// (before the activity mask).  Returns {w(va), w(vb), w(vc), w(a'), w(b')}.
inline std::array<Weight, 5> expansion_weights(const PreLabel& p, BasicTag tag) {
    switch (p.kind) {
        case DecompKind::complement_odd_2join:
        case DecompKind::complement_even_2join:
            return {p.aA, p.aB, 0, 0, 0};
        case DecompKind::odd_2join:
            if (odd_expansion_two_clones(tag)) {
                Weight w1 = p.aAC + p.aBC - p.aC - p.aX;
                return {w1, w1, 0, p.aX - p.aBC, p.aX - p.aAC};
            }
            return {p.aAC - p.aC, p.aBC - p.aC, 0, p.aX - p.aBC, 0};
        case DecompKind::even_2join:
            return {p.aX - p.aBC, p.aX - p.aAC, p.aX + p.aC - p.aAC - p.aBC, 0, 0};
    }
    return {};
}

struct Expansion {
    Trigraph t;
    std::vector<int> to_univ; // materialized id -> universe id
    UniverseMap umap;
};

// The expansion of (T, comps, tags): switchable components are replaced by
// their gadgets.  `active` masks gadget weights of vertices that a target
// restriction zeroed out (clones inherit the mask of their base vertex).
// Returns nullopt when a computed weight is negative, which signals violated
// prelabel invariants.
inline std::optional<Expansion> expand(const Trigraph& t, const std::vector<MarkedComponent>& comps,
                                       const std::vector<BasicTag>& tags,
                                       const std::vector<char>& active) {
    int n = t.n;
    UniverseMap umap = universe_of(n, comps, tags);
    std::vector<char> deleted(n, 0);
    // clone records: (universe id, base, excluded partner, attach_to_base)
    struct Clone {
        int univ, base, excl;
        bool self;
        Weight w;
    };
    std::vector<Clone> clones;
    Trigraph work = t; // receives the in-place pair transformations
    for (size_t i = 0; i < comps.size(); ++i) {
        const MarkedComponent& c = comps[i];
        auto wts = expansion_weights(c.pre, tags[i]);
        for (Weight x : wts)
            if (x < 0) return std::nullopt;
        auto act = [&](int v) { return v >= 0 && active[v]; };
        switch (c.pre.kind) {
            case DecompKind::complement_odd_2join:
                work.set_theta(c.va, c.vb, kStrongEdge);
                work.w[c.va] = act(c.va) ? wts[0] : 0;
                work.w[c.vb] = act(c.vb) ? wts[1] : 0;
                break;
            case DecompKind::complement_even_2join:
                deleted[c.vc] = 1;
                work.w[c.va] = act(c.va) ? wts[0] : 0;
                work.w[c.vb] = act(c.vb) ? wts[1] : 0;
                break;
            case DecompKind::even_2join:
                work.set_theta(c.va, c.vc, kStrongEdge);
                work.set_theta(c.vc, c.vb, kStrongEdge);
                work.w[c.va] = act(c.va) ? wts[0] : 0;
                work.w[c.vb] = act(c.vb) ? wts[1] : 0;
                work.w[c.vc] = act(c.vc) ? wts[2] : 0;
                break;
            case DecompKind::odd_2join: {
                work.set_theta(c.va, c.vb, kStrongEdge);
                work.w[c.va] = act(c.va) ? wts[0] : 0;
                work.w[c.vb] = act(c.vb) ? wts[1] : 0;
                bool two = odd_expansion_two_clones(tags[i]);
                clones.push_back({umap.clone_ids[i][0], c.va, c.vb, !two,
                                  act(c.va) ? wts[3] : 0});
                if (two)
                    clones.push_back({umap.clone_ids[i][1], c.vb, c.va, false,
                                      act(c.vb) ? wts[4] : 0});
                break;
            }
        }
    }
    // materialize: kept originals then clones
    std::vector<int> mat_of_univ(umap.total, -1);
    Expansion e;
    e.umap = umap;
    std::vector<int> kept;
    for (int v = 0; v < n; ++v)
        if (!deleted[v]) kept.push_back(v);
    int m = int(kept.size() + clones.size());
    e.t = Trigraph(m);
    e.to_univ.assign(m, -1);
    for (size_t i = 0; i < kept.size(); ++i) {
        e.to_univ[i] = kept[i];
        mat_of_univ[kept[i]] = int(i);
    }
    for (size_t i = 0; i < clones.size(); ++i) {
        int id = int(kept.size() + i);
        e.to_univ[id] = clones[i].univ;
        mat_of_univ[clones[i].univ] = id;
    }
    for (size_t i = 0; i < kept.size(); ++i) {
        e.t.w[i] = work.w[kept[i]];
        for (size_t j = i + 1; j < kept.size(); ++j)
            e.t.set_theta(int(i), int(j), work.theta(kept[i], kept[j]));
    }
    auto clone_sees = [&](const Clone& c, int orig) {
        if (orig == c.base) return c.self;
        if (orig == c.excl) return false;
        return t.theta(c.base, orig) == 1;
    };
    for (size_t i = 0; i < clones.size(); ++i) {
        int ci = int(kept.size() + i);
        e.t.w[ci] = clones[i].w;
        for (size_t k = 0; k < kept.size(); ++k)
            e.t.set_theta(ci, int(k), clone_sees(clones[i], kept[k]) ? kStrongEdge : kStrongAntiedge);
        for (size_t j = i + 1; j < clones.size(); ++j) {
            int cj = int(kept.size() + j);
            e.t.set_theta(ci, cj,
                          clone_sees(clones[i], clones[j].base) ? kStrongEdge : kStrongAntiedge);
        }
    }
    return e;
}

// The expansion X' of a vertex set X (used by tests and by split transport).
inline VertexSet expand_set(const VertexSet& x, const std::vector<MarkedComponent>& comps,
                            const UniverseMap& umap) {
    VertexSet out = x;
    Bits inx = Bits::from(umap.base_n, x);
    for (size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].pre.kind == DecompKind::complement_even_2join) {
            out.erase(std::remove(out.begin(), out.end(), comps[i].vc), out.end());
            continue;
        }
        if (comps[i].pre.kind != DecompKind::odd_2join) continue;
        if (inx.get(comps[i].va) && umap.clone_ids[i][0] != -1)
            out.push_back(umap.clone_ids[i][0]);
        if (inx.get(comps[i].vb) && umap.clone_ids[i][1] != -1)
            out.push_back(umap.clone_ids[i][1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Alpha recovery (the gadget identities)

inline Weight recover_alpha(DecompKind kind, Weight gadget_alpha, const PreLabel& pre) {
    switch (kind) {
        case DecompKind::complement_odd_2join:
        case DecompKind::complement_even_2join:
            return std::max(gadget_alpha, pre.aX);
        case DecompKind::odd_2join:
            return gadget_alpha + pre.aC;
        case DecompKind::even_2join:
            return gadget_alpha + pre.aAC + pre.aBC - pre.aX;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Decomposition trace / certificates

struct TraceNode {
    enum Kind { basic_leaf, decomposition, not_in_class_leaf } kind;
    int n = 0;
    // basic leaf
    std::string basic_class;
    // decomposition
    DecompKind dkind = DecompKind::odd_2join;
    TwoJoinSplit split;
    PreLabel pre;
    int small_side_calls = 0, big_side_calls = 0;
    int n_small = 0, n_big = 0;
    std::vector<std::unique_ptr<TraceNode>> children; // [small-side, big-side]
    // not-in-class leaf
    std::vector<std::string> reasons;
    std::optional<Trigraph> leaf; // populated for certificate leaves
    std::optional<Trigraph> node_trigraph; // populated when recording is on

    bool is_certificate() const {
        if (kind == not_in_class_leaf) return true;
        for (const auto& c : children)
            if (c && c->is_certificate()) return true;
        return false;
    }
};

struct SolveOutcome {
    bool ok = false;
    Weight alpha = 0;
    VertexSet stable_set;
    std::vector<std::pair<MarkedComponent, Label>> labeling;
    std::unique_ptr<TraceNode> trace;
};

struct SolveOptions {
    bool record_node_trigraphs = false; // keep a copy of every node's trigraph in the trace
    bool validate = false;              // expensive internal consistency checks
};

namespace detail {

struct SolveCtx {
    SolveOptions opt;
    long long nodes = 0;
};

struct InnerResult {
    bool ok = false;
    Weight alpha = 0;
    VertexSet stable; // universe ids
    std::vector<BasicTag> labels;
    std::unique_ptr<TraceNode> trace;
};

inline std::unique_ptr<TraceNode> make_fail_leaf(const Trigraph& t, std::vector<std::string> why) {
    auto node = std::make_unique<TraceNode>();
    node->kind = TraceNode::not_in_class_leaf;
    node->n = t.n;
    node->reasons = std::move(why);
    node->leaf = t;
    return node;
}

inline BasicTag tag_for_class(BasicClass c) {
    switch (c) {
        case BasicClass::bipartite: return BasicTag::bipartite;
        case BasicClass::complement_bipartite: return BasicTag::complement_bipartite;
        case BasicClass::line: return BasicTag::line;
        case BasicClass::complement_line: return BasicTag::complement_line;
        case BasicClass::doubled: return BasicTag::bipartite; // decided per pair, not used
    }
    return BasicTag::bipartite;
}

inline InnerResult main_solve_rec(const Trigraph& t, std::vector<MarkedComponent> comps,
                                  const std::vector<char>& active, SolveCtx& ctx);

// Recursive call on the small-side block with weights (and gadget-weight
// eligibility) zeroed outside the target set.
inline InnerResult solve_zeroed(const Block& blk, const std::vector<MarkedComponent>& comps,
                                const std::vector<char>& active_blk, const VertexSet& tgt_orig,
                                SolveCtx& ctx) {
    Trigraph z = blk.t;
    std::vector<char> act = active_blk;
    // mark block vertices whose original lies in tgt_orig
    std::vector<char> in_tgt(z.n, 0);
    for (int v = 0; v < z.n; ++v) {
        int orig = blk.side_map[v];
        if (orig != -1 &&
            std::binary_search(tgt_orig.begin(), tgt_orig.end(), orig))
            in_tgt[v] = 1;
    }
    for (int v = 0; v < z.n; ++v)
        if (!in_tgt[v]) {
            z.w[v] = 0;
            act[v] = 0;
        }
    return main_solve_rec(z, comps, act, ctx);
}

inline InnerResult main_solve_rec(const Trigraph& t, std::vector<MarkedComponent> comps,
                                  const std::vector<char>& active, SolveCtx& ctx) {
    ++ctx.nodes;
    InnerResult res;
    std::sort(comps.begin(), comps.end(),
              [](const MarkedComponent& a, const MarkedComponent& b) {
                  return a.verts.front() < b.verts.front();
              });

    auto rep_f = classify_class_F(t);
    if (!rep_f.in_class) {
        std::vector<std::string> why{"not in class F"};
        for (auto& [v, r] : rep_f.violations) why.push_back(r + " at vertex " + std::to_string(v));
        res.trace = make_fail_leaf(t, std::move(why));
        return res;
    }

    // Basic case: tag every prelabel, expand, and solve the basic expansion.
    if (auto rep = recognize_basic(t)) {
        std::vector<BasicTag> tags(comps.size());
        if (rep->cls == BasicClass::doubled) {
            Bits inx = Bits::from(t.n, rep->part_x);
            for (size_t i = 0; i < comps.size(); ++i) {
                assert(comps[i].verts.size() == 2);
                tags[i] = inx.get(comps[i].verts[0]) ? BasicTag::doubled_matching
                                                     : BasicTag::doubled_antimatching;
            }
        } else {
            std::fill(tags.begin(), tags.end(), tag_for_class(rep->cls));
        }
        auto exp = expand(t, comps, tags, active);
        if (!exp) {
            res.trace = make_fail_leaf(t, {"negative gadget weight during expansion"});
            return res;
        }
        auto erep = recognize_basic(exp->t);
        if (!erep) {
            res.trace = make_fail_leaf(t, {"expansion of a basic trigraph is not basic"});
            return res;
        }
        StableSetResult sr = alpha_basic(exp->t, *erep);
        res.ok = true;
        res.alpha = sr.value;
        for (int v : sr.set) res.stable.push_back(exp->to_univ[v]);
        std::sort(res.stable.begin(), res.stable.end());
        res.labels = std::move(tags);
        res.trace = std::make_unique<TraceNode>();
        res.trace->kind = TraceNode::basic_leaf;
        res.trace->n = t.n;
        res.trace->basic_class = basic_class_name(rep->cls);
        if (ctx.opt.record_node_trigraphs) res.trace->node_trigraph = t;
        return res;
    }

    // Decompose; search the sparser orientation first (a dense trigraph is
    // far more likely to carry a complement 2-join).
    long long strong = 0;
    for (int u = 0; u < t.n; ++u)
        for (int v = u + 1; v < t.n; ++v)
            if (t.theta(u, v) == 1) ++strong;
    bool dense = 4 * strong > (long long)t.n * (t.n - 1);
    std::optional<TwoJoinSplit> split =
        dense ? find_proper_complement_2join(t, true) : find_proper_2join(t, true);
    if (!split)
        split = dense ? find_proper_2join(t, true) : find_proper_complement_2join(t, true);
    if (!split) {
        res.trace = make_fail_leaf(t, {"not basic and no proper (complement) 2-join"});
        return res;
    }
    const TwoJoinSplit& s = *split;
    DecompKind kind = s.complemented
                          ? (s.parity == Parity::odd ? DecompKind::complement_odd_2join
                                                     : DecompKind::complement_even_2join)
                          : (s.parity == Parity::odd ? DecompKind::odd_2join
                                                     : DecompKind::even_2join);

    VertexSet x1 = s.side(1), x2 = s.side(2);
    int small = x1.size() < x2.size()
                    ? 1
                    : (x2.size() < x1.size() ? 2 : (x1.front() < x2.front() ? 1 : 2));
    int big = 3 - small;
    Block bx = build_block(t, s, small);
    Block by = build_block(t, s, big);

    auto node = std::make_unique<TraceNode>();
    node->kind = TraceNode::decomposition;
    node->n = t.n;
    node->dkind = kind;
    node->split = s;
    node->n_small = bx.t.n;
    node->n_big = by.t.n;
    if (ctx.opt.record_node_trigraphs) node->node_trigraph = t;

    // Distribute inherited components onto the blocks.
    std::vector<int> inv_x(t.n, -1), inv_y(t.n, -1);
    for (int i = 0; i < bx.t.n; ++i)
        if (bx.side_map[i] != -1) inv_x[bx.side_map[i]] = i;
    for (int i = 0; i < by.t.n; ++i)
        if (by.side_map[i] != -1) inv_y[by.side_map[i]] = i;
    std::vector<MarkedComponent> comps_x, comps_y;
    std::vector<int> parent_of_y; // comps_y entry -> index into comps
    std::vector<int> parent_of_x;
    for (size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        bool on_x = inv_x[c.verts.front()] != -1;
        const std::vector<int>& inv = on_x ? inv_x : inv_y;
        MarkedComponent m;
        m.pre = c.pre;
        for (int v : c.verts) {
            assert(inv[v] != -1); // switchable components cannot straddle the split
            m.verts.push_back(inv[v]);
        }
        std::sort(m.verts.begin(), m.verts.end());
        m.va = inv[c.va];
        m.vb = inv[c.vb];
        m.vc = c.vc == -1 ? -1 : inv[c.vc];
        if (on_x) {
            comps_x.push_back(std::move(m));
            parent_of_x.push_back(int(i));
        } else {
            comps_y.push_back(std::move(m));
            parent_of_y.push_back(int(i));
        }
    }
    std::vector<char> act_x(bx.t.n, 1), act_y(by.t.n, 1);
    for (int v = 0; v < bx.t.n; ++v)
        if (bx.side_map[v] != -1) act_x[v] = active[bx.side_map[v]];
    for (int v = 0; v < by.t.n; ++v)
        if (by.side_map[v] != -1) act_y[v] = active[by.side_map[v]];

    // Targets on the small side, in original vertex ids (sorted).
    const VertexSet& As = small == 1 ? s.A1 : s.A2;
    const VertexSet& Bs = small == 1 ? s.B1 : s.B2;
    const VertexSet& Cs = small == 1 ? s.C1 : s.C2;
    auto sorted_union = [](std::initializer_list<const VertexSet*> parts) {
        VertexSet u;
        for (auto* p : parts) u.insert(u.end(), p->begin(), p->end());
        std::sort(u.begin(), u.end());
        return u;
    };
    std::vector<VertexSet> tgts;
    if (!is_complement_kind(kind)) {
        tgts = {sorted_union({&As, &Cs}), sorted_union({&Bs, &Cs}), sorted_union({&Cs}),
                sorted_union({&As, &Bs, &Cs})};
    } else {
        tgts = {sorted_union({&As}), sorted_union({&Bs}), sorted_union({&As, &Bs, &Cs})};
    }

    std::vector<Weight> vals;
    std::vector<VertexSet> sets;
    std::vector<std::vector<BasicTag>> all_labels;
    std::unique_ptr<TraceNode> small_trace;
    for (const VertexSet& tgt : tgts) {
        InnerResult r = solve_zeroed(bx, comps_x, act_x, tgt, ctx);
        if (!r.ok) {
            node->children.push_back(std::move(r.trace));
            res.trace = std::move(node);
            return res;
        }
        vals.push_back(r.alpha);
        sets.push_back(std::move(r.stable));
        all_labels.push_back(std::move(r.labels));
        small_trace = std::move(r.trace); // keep the alpha_X call's trace
    }
    node->small_side_calls = int(tgts.size());
    for (size_t i = 1; i < all_labels.size(); ++i)
        if (all_labels[i] != all_labels[0]) {
            res.trace = make_fail_leaf(t, {"small-side recursive calls produced different labelings"});
            return res;
        }
    const std::vector<BasicTag>& labels_x = all_labels.back();

    PreLabel pre;
    pre.kind = kind;
    if (!is_complement_kind(kind)) {
        pre.aAC = vals[0];
        pre.aBC = vals[1];
        pre.aC = vals[2];
        pre.aX = vals[3];
    } else {
        pre.aA = vals[0];
        pre.aB = vals[1];
        pre.aX = vals[2];
    }
    node->pre = pre;
    if (!prelabel_inequalities_ok(pre)) {
        node->children.push_back(make_fail_leaf(t, {"prelabel inequality suite violated"}));
        res.trace = std::move(node);
        return res;
    }

    // Prelabel the marker component of the big block and recurse.
    MarkedComponent marker;
    marker.verts = by.markers;
    marker.va = by.markers[0];
    marker.vb = by.markers[1];
    marker.vc = by.markers.size() > 2 ? by.markers[2] : -1;
    marker.pre = pre;
    std::vector<MarkedComponent> comps_y_full = comps_y;
    std::vector<int> parent_of_y_full = parent_of_y;
    comps_y_full.push_back(marker);
    parent_of_y_full.push_back(-1);
    // canonical order within the child
    {
        std::vector<size_t> order(comps_y_full.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return comps_y_full[a].verts.front() < comps_y_full[b].verts.front();
        });
        std::vector<MarkedComponent> cs;
        std::vector<int> ps;
        for (size_t i : order) {
            cs.push_back(comps_y_full[i]);
            ps.push_back(parent_of_y_full[i]);
        }
        comps_y_full = std::move(cs);
        parent_of_y_full = std::move(ps);
    }
    int marker_idx = -1;
    for (size_t i = 0; i < parent_of_y_full.size(); ++i)
        if (parent_of_y_full[i] == -1) marker_idx = int(i);

    InnerResult ry = main_solve_rec(by.t, comps_y_full, act_y, ctx);
    node->big_side_calls = 1;
    if (!ry.ok) {
        node->children.push_back(std::move(small_trace));
        node->children.push_back(std::move(ry.trace));
        res.trace = std::move(node);
        return res;
    }
    BasicTag marker_tag = ry.labels[marker_idx];
    Weight alpha = recover_alpha(kind, ry.alpha, pre);

    // Final labels for this node's components.
    std::vector<BasicTag> labels(comps.size(), BasicTag::bipartite);
    for (size_t i = 0; i < comps_x.size(); ++i) labels[parent_of_x[i]] = labels_x[i];
    for (size_t i = 0; i < parent_of_y_full.size(); ++i)
        if (parent_of_y_full[i] != -1) labels[parent_of_y_full[i]] = ry.labels[i];

    // ---- stable set reconstruction ----
    UniverseMap parent_univ = universe_of(t.n, comps, labels);
    UniverseMap y_univ = universe_of(by.t.n, comps_y_full, ry.labels);
    std::vector<BasicTag> labels_x_only = labels_x;
    UniverseMap x_univ = universe_of(bx.t.n, comps_x, labels_x_only);

    // Gadget vertex weights in the Y child: marker vertices and their clones.
    auto gw = expansion_weights(pre, marker_tag);
    std::vector<std::pair<int, Weight>> gadget; // (child universe id, weight)
    gadget.push_back({marker.va, gw[0]});
    gadget.push_back({marker.vb, gw[1]});
    if (marker.vc != -1) gadget.push_back({marker.vc, gw[2]});
    if (y_univ.clone_ids[marker_idx][0] != -1)
        gadget.push_back({y_univ.clone_ids[marker_idx][0], gw[3]});
    if (y_univ.clone_ids[marker_idx][1] != -1)
        gadget.push_back({y_univ.clone_ids[marker_idx][1], gw[4]});

    // Translate the Y stable set into the parent universe, dropping gadget
    // vertices and tallying their weight.
    Weight w0 = ry.alpha;
    VertexSet z0;
    for (int id : ry.stable) {
        bool is_gadget = false;
        for (auto& [gid, gwt] : gadget)
            if (gid == id) {
                w0 -= gwt;
                is_gadget = true;
            }
        if (is_gadget) continue;
        if (id < by.t.n) {
            int orig = by.side_map[id];
            assert(orig != -1);
            z0.push_back(orig);
        } else {
            // clone of some inherited component
            for (size_t j = 0; j < comps_y_full.size(); ++j)
                for (int role = 0; role < 2; ++role)
                    if (y_univ.clone_ids[j][role] == id) {
                        int pidx = parent_of_y_full[j];
                        assert(pidx != -1);
                        z0.push_back(parent_univ.clone_ids[pidx][role]);
                    }
        }
    }

    // Strip and translate a small-side target set.
    auto translate_x = [&](const VertexSet& zx, const VertexSet& tgt) {
        Bits tgt_bits = Bits::from(t.n, tgt);
        VertexSet out;
        for (int id : zx) {
            if (id < bx.t.n) {
                int orig = bx.side_map[id];
                if (orig == -1 || !tgt_bits.get(orig)) continue; // markers / zeroed
                out.push_back(orig);
            } else {
                for (size_t j = 0; j < comps_x.size(); ++j)
                    for (int role = 0; role < 2; ++role)
                        if (x_univ.clone_ids[j][role] == id) {
                            int base_blk = role == 0 ? comps_x[j].va : comps_x[j].vb;
                            int base_orig = bx.side_map[base_blk];
                            if (base_orig == -1 || !tgt_bits.get(base_orig)) continue;
                            out.push_back(parent_univ.clone_ids[parent_of_x[j]][role]);
                        }
            }
        }
        return out;
    };

    // Expanded big-side sets for the feasibility checks.
    auto expanded = [&](const VertexSet& orig_set) {
        Bits b = Bits::from(t.n, orig_set);
        Bits out(parent_univ.total);
        for (int v : orig_set) out.set(v);
        for (size_t i = 0; i < comps.size(); ++i)
            for (int role = 0; role < 2; ++role) {
                int cid = parent_univ.clone_ids[i][role];
                if (cid == -1) continue;
                int base = role == 0 ? comps[i].va : comps[i].vb;
                if (b.get(base)) out.set(cid);
            }
        return out;
    };
    const VertexSet& Ao = big == 1 ? s.A1 : s.A2;
    const VertexSet& Bo = big == 1 ? s.B1 : s.B2;
    const VertexSet& Co = big == 1 ? s.C1 : s.C2;
    Bits z0b(parent_univ.total);
    for (int v : z0) z0b.set(v);

    struct Cand {
        Weight total;
        int tgt_idx; // -1: take z0 alone; -2: take Z_X alone (complement kinds)
    };
    std::vector<Cand> cands;
    if (!is_complement_kind(kind)) {
        bool a_free = !z0b.intersects(expanded(Ao));
        bool b_free = !z0b.intersects(expanded(Bo));
        if (a_free) cands.push_back({w0 + vals[0], 0});
        if (b_free) cands.push_back({w0 + vals[1], 1});
        cands.push_back({w0 + vals[2], 2});
        if (a_free && b_free) cands.push_back({w0 + vals[3], 3});
    } else {
        VertexSet bc = sorted_union({&Bo, &Co}), ac = sorted_union({&Ao, &Co});
        if (!z0b.intersects(expanded(bc))) cands.push_back({w0 + vals[0], 0});
        if (!z0b.intersects(expanded(ac))) cands.push_back({w0 + vals[1], 1});
        cands.push_back({w0, -1});
        cands.push_back({vals[2], -2});
    }
    Cand best = cands.front();
    for (const Cand& c : cands)
        if (c.total > best.total) best = c;
    if (best.total != alpha) {
        res.trace = make_fail_leaf(t, {"stable-set reconstruction mismatch"});
        return res;
    }
    VertexSet final_set;
    if (best.tgt_idx == -1) {
        final_set = z0;
    } else if (best.tgt_idx == -2) {
        final_set = translate_x(sets[2], tgts[2]);
    } else {
        final_set = z0;
        VertexSet part = translate_x(sets[best.tgt_idx], tgts[best.tgt_idx]);
        final_set.insert(final_set.end(), part.begin(), part.end());
    }
    std::sort(final_set.begin(), final_set.end());

    node->children.push_back(std::move(small_trace));
    node->children.push_back(std::move(ry.trace));
    res.ok = true;
    res.alpha = alpha;
    res.stable = std::move(final_set);
    res.labels = std::move(labels);
    res.trace = std::move(node);
    return res;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Public solver entry points

// The kind/shape compatibility every prelabeled component must satisfy:
// the odd kinds take a single switchable pair (the plain odd kind also needs
// no vertex complete to it), the even kinds a heavy resp. light component.
inline bool prelabel_shape_ok(const Trigraph& t, const MarkedComponent& c) {
    for (const auto& sc : switchable_components(t)) {
        if (sc.vertices != c.verts) continue;
        switch (c.pre.kind) {
            case DecompKind::complement_odd_2join:
                return sc.shape == CompShape::single_pair;
            case DecompKind::odd_2join: {
                if (sc.shape != CompShape::single_pair) return false;
                for (int v = 0; v < t.n; ++v) {
                    if (v == c.va || v == c.vb) continue;
                    if (t.adjacent(v, c.va) && t.adjacent(v, c.vb)) return false;
                }
                return true;
            }
            case DecompKind::complement_even_2join:
                return sc.shape == CompShape::two_pair_path &&
                       sc.weight_class == WeightClass::heavy;
            case DecompKind::even_2join:
                return sc.shape == CompShape::two_pair_path &&
                       sc.weight_class == WeightClass::light;
        }
    }
    return false;
}

inline SolveOutcome main_solve(const Trigraph& t, std::vector<MarkedComponent> comps,
                               const SolveOptions& opt = {}) {
    detail::SolveCtx ctx{opt, 0};
    std::vector<char> active(t.n, 1);
    std::sort(comps.begin(), comps.end(),
              [](const MarkedComponent& a, const MarkedComponent& b) {
                  return a.verts.front() < b.verts.front();
              });
    for (const auto& c : comps)
        if (!prelabel_shape_ok(t, c) || !prelabel_inequalities_ok(c.pre)) {
            SolveOutcome bad;
            bad.trace = detail::make_fail_leaf(t, {"prelabeled component shape or values invalid"});
            return bad;
        }
    auto r = detail::main_solve_rec(t, comps, active, ctx);
    SolveOutcome out;
    out.ok = r.ok;
    out.alpha = r.alpha;
    out.trace = std::move(r.trace);
    if (r.ok) {
        out.stable_set = r.stable;
        for (size_t i = 0; i < comps.size(); ++i)
            out.labeling.push_back({comps[i], Label{comps[i].pre, r.labels[i]}});
    }
    return out;
}

// Maximum weighted strong stable set of a trigraph in class F with no
// balanced skew-partition; certificates otherwise.
inline SolveOutcome alpha(const Trigraph& t, const SolveOptions& opt = {}) {
    SolveOutcome out = main_solve(t, {}, opt);
    if (out.ok) {
        assert(t.is_strong_stable_set(out.stable_set));
        assert(t.weight_of(out.stable_set) == out.alpha);
    }
    return out;
}

// The stable set of the original trigraph (the top-level expansion is the
// trigraph itself, so the outcome's set already lives in t).
inline VertexSet extract_stable_set(const Trigraph& t, const SolveOutcome& outcome) {
    (void)t;
    assert(outcome.ok);
    assert(t.is_strong_stable_set(outcome.stable_set));
    assert(t.weight_of(outcome.stable_set) == outcome.alpha);
    return outcome.stable_set;
}

// Self-reduction fallback: decide vertex by vertex whether it belongs to
// some optimum, using only alpha values.  Cross-checked against the
// constructive path in tests.
template <class AlphaFn>
inline VertexSet stable_set_by_self_reduction(const Trigraph& t, AlphaFn&& alpha_value) {
    Trigraph cur = t;
    Weight target = alpha_value(cur);
    VertexSet out;
    for (int v = 0; v < t.n; ++v) {
        if (cur.w[v] == 0) continue;
        // v is in some optimum iff w(v) + alpha(zeroed to strong antineighbors) == alpha
        Trigraph probe = cur;
        VertexSet keep;
        for (int u = 0; u < t.n; ++u)
            if (u != v && cur.theta(u, v) == -1) keep.push_back(u);
        probe = zero_outside(cur, keep);
        Weight rest = alpha_value(probe);
        if (rest + cur.w[v] == target) {
            out.push_back(v);
            target = rest;
            cur = probe;
        }
    }
    return out;
}

} // namespace perfect
