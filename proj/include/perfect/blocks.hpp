#pragma once

#include "detect.hpp"
#include "trigraph.hpp"

namespace perfect {

// A block of decomposition: one side of the split plus marker vertices that
// stand in for the other side.  side_map sends block vertices to original
// vertices (-1 for markers).  Markers carry weight 0; the expansion assigns
// their gadget weights later.
struct Block {
    Trigraph t;
    std::vector<int> side_map;
    std::vector<int> markers; // role order a, b [, c]
};

// Blocks for 2-joins and complement 2-joins.  `side` selects which half is
// kept.  For an odd (complement) 2-join two markers are added, for an even
// one three; attachments follow the construction for the respective kind.
inline Block build_block(const Trigraph& t, const TwoJoinSplit& s, int side) {
    const VertexSet& A = side == 1 ? s.A1 : s.A2;
    const VertexSet& B = side == 1 ? s.B1 : s.B2;
    const VertexSet& C = side == 1 ? s.C1 : s.C2;
    VertexSet x = s.side(side);
    bool even = s.parity == Parity::even;
    int nk = int(x.size());
    int extra = even ? 3 : 2;
    Block blk;
    blk.t = Trigraph(nk + extra);
    blk.side_map.assign(nk + extra, -1);
    std::vector<int> inv(t.n, -1);
    for (int i = 0; i < nk; ++i) {
        blk.side_map[i] = x[i];
        inv[x[i]] = i;
        blk.t.w[i] = t.w[x[i]];
        for (int j = i + 1; j < nk; ++j) blk.t.set_theta(i, j, t.theta(x[i], x[j]));
    }
    int a = nk, b = nk + 1, c = even ? nk + 2 : -1;
    blk.markers = even ? std::vector<int>{a, b, c} : std::vector<int>{a, b};
    for (int m : blk.markers) blk.t.w[m] = 0;
    if (!s.complemented) {
        for (int v : A) blk.t.set_theta(a, inv[v], kStrongEdge);
        for (int v : B) blk.t.set_theta(b, inv[v], kStrongEdge);
        if (!even) {
            blk.t.set_theta(a, b, kSwitchable);
        } else {
            blk.t.set_theta(a, c, kSwitchable);
            blk.t.set_theta(c, b, kSwitchable);
        }
    } else {
        // complement kind: a mimics an A-vertex of the other side, which is
        // strongly complete to B and C here
        for (int v : B) blk.t.set_theta(a, inv[v], kStrongEdge);
        for (int v : C) blk.t.set_theta(a, inv[v], kStrongEdge);
        for (int v : A) blk.t.set_theta(b, inv[v], kStrongEdge);
        for (int v : C) blk.t.set_theta(b, inv[v], kStrongEdge);
        if (!even) {
            blk.t.set_theta(a, b, kSwitchable);
        } else {
            for (int i = 0; i < nk; ++i) blk.t.set_theta(c, i, kStrongEdge);
            blk.t.set_theta(a, c, kSwitchable);
            blk.t.set_theta(c, b, kSwitchable);
            blk.t.set_theta(a, b, kStrongEdge);
        }
    }
    return blk;
}

// Homogeneous-pair blocks: the A|B side gets markers c, d (complete to A and
// to B, cd switchable); the outer side gets markers a (complete to C|E) and
// b (complete to D|E), ab switchable.
inline Block build_block_homogeneous(const Trigraph& t, const HomogeneousPairSplit& s,
                                     bool pair_side) {
    VertexSet x;
    if (pair_side) {
        x = s.side();
    } else {
        for (const VertexSet* part : {&s.C, &s.D, &s.E, &s.F})
            x.insert(x.end(), part->begin(), part->end());
        std::sort(x.begin(), x.end());
    }
    int nk = int(x.size());
    Block blk;
    blk.t = Trigraph(nk + 2);
    blk.side_map.assign(nk + 2, -1);
    std::vector<int> inv(t.n, -1);
    for (int i = 0; i < nk; ++i) {
        blk.side_map[i] = x[i];
        inv[x[i]] = i;
        blk.t.w[i] = t.w[x[i]];
        for (int j = i + 1; j < nk; ++j) blk.t.set_theta(i, j, t.theta(x[i], x[j]));
    }
    int ma = nk, mb = nk + 1;
    blk.markers = {ma, mb};
    blk.t.w[ma] = blk.t.w[mb] = 0;
    if (pair_side) {
        for (int v : s.A) blk.t.set_theta(ma, inv[v], kStrongEdge);
        for (int v : s.B) blk.t.set_theta(mb, inv[v], kStrongEdge);
    } else {
        for (int v : s.C) blk.t.set_theta(ma, inv[v], kStrongEdge);
        for (int v : s.E) blk.t.set_theta(ma, inv[v], kStrongEdge);
        for (int v : s.D) blk.t.set_theta(mb, inv[v], kStrongEdge);
        for (int v : s.E) blk.t.set_theta(mb, inv[v], kStrongEdge);
    }
    blk.t.set_theta(ma, mb, kSwitchable);
    return blk;
}

struct EndWithBlock {
    EndResult end;
    Block block;
};

// An end of T (minimum-cardinality proper fragment over all three searches)
// together with its block of decomposition.
inline std::optional<EndWithBlock> find_end(const Trigraph& t) {
    auto e = find_end_fragment(t);
    if (!e) return std::nullopt;
    Block b = e->two_join ? build_block(t, *e->two_join, 1)
                          : build_block_homogeneous(t, *e->homogeneous, true);
    return EndWithBlock{std::move(*e), std::move(b)};
}

} // namespace perfect
