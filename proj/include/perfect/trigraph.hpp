#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bits.hpp"

namespace perfect {

using Weight = long long;

// Pair values of the adjacency function.
constexpr int8_t kStrongAntiedge = -1;
constexpr int8_t kSwitchable = 0;
constexpr int8_t kStrongEdge = 1;

constexpr int kMaxVertices = 4096;

// A trigraph: every unordered pair of distinct vertices is a strong edge
// (+1), a switchable pair (0) or a strong antiedge (-1).  Weights are
// nonnegative integers.  theta is stored as a dense symmetric byte matrix.
struct Trigraph {
    int n = 0;
    std::vector<int8_t> adj; // n*n, diagonal 0
    std::vector<Weight> w;

    Trigraph() = default;
    explicit Trigraph(int n_, int8_t fill = kStrongAntiedge)
        : n(n_), adj(static_cast<size_t>(n_) * n_, fill), w(n_, 1) {
        assert(n_ <= kMaxVertices);
        for (int i = 0; i < n; ++i) adj[size_t(i) * n + i] = 0;
    }

    int8_t theta(int u, int v) const { return adj[size_t(u) * n + v]; }
    void set_theta(int u, int v, int8_t t) {
        assert(u != v);
        adj[size_t(u) * n + v] = t;
        adj[size_t(v) * n + u] = t;
    }

    bool strongly_adjacent(int u, int v) const { return theta(u, v) == 1; }
    bool strongly_antiadjacent(int u, int v) const { return theta(u, v) == -1; }
    bool semiadjacent(int u, int v) const { return u != v && theta(u, v) == 0; }
    bool adjacent(int u, int v) const { return u != v && theta(u, v) >= 0; }
    bool antiadjacent(int u, int v) const { return u != v && theta(u, v) <= 0; }

    bool is_graph() const {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (theta(u, v) == 0) return false;
        return true;
    }

    Weight weight_of(const std::vector<int>& s) const {
        Weight t = 0;
        for (int v : s) t += w[v];
        return t;
    }

    bool is_strong_stable_set(const std::vector<int>& s) const {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (theta(s[i], s[j]) != -1) return false;
        return true;
    }

    bool is_strong_clique(const std::vector<int>& s) const {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (theta(s[i], s[j]) != 1) return false;
        return true;
    }

    // Induced subtrigraph; keep must be sorted.
    Trigraph induced(const std::vector<int>& keep) const {
        Trigraph r(int(keep.size()));
        for (size_t i = 0; i < keep.size(); ++i) {
            r.w[i] = w[keep[i]];
            for (size_t j = i + 1; j < keep.size(); ++j)
                r.set_theta(int(i), int(j), theta(keep[i], keep[j]));
        }
        return r;
    }
};

using VertexSet = std::vector<int>;

inline Trigraph complement(const Trigraph& t) {
    Trigraph r = t;
    for (int u = 0; u < t.n; ++u)
        for (int v = 0; v < t.n; ++v)
            if (u != v) r.adj[size_t(u) * t.n + v] = -t.adj[size_t(u) * t.n + v];
    return r;
}

// Full realization: every switchable pair becomes an edge.  The result is a
// graph (sigma empty).
inline Trigraph full_realization(const Trigraph& t) {
    Trigraph r = t;
    for (int u = 0; u < t.n; ++u)
        for (int v = 0; v < t.n; ++v)
            if (u != v && r.adj[size_t(u) * t.n + v] == 0)
                r.adj[size_t(u) * t.n + v] = 1;
    return r;
}

inline Trigraph zero_outside(const Trigraph& t, const VertexSet& keep) {
    Trigraph r = t;
    Bits k = Bits::from(t.n, keep);
    for (int v = 0; v < t.n; ++v)
        if (!k.get(v)) r.w[v] = 0;
    return r;
}

// Per-vertex strong/soft neighborhoods as bitsets; shared by the search
// routines so they are computed once per trigraph.
struct TrigraphBits {
    int n;
    std::vector<Bits> eta;   // strong neighbors
    std::vector<Bits> sigma; // switchable partners
    std::vector<Bits> nu;    // strong antineighbors
    std::vector<Bits> nbr;   // eta | sigma (neighbors)
    std::vector<Bits> anti;  // nu | sigma (antineighbors)

    explicit TrigraphBits(const Trigraph& t) : n(t.n) {
        eta.assign(n, Bits(n));
        sigma.assign(n, Bits(n));
        nu.assign(n, Bits(n));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                int8_t th = t.theta(u, v);
                if (th == 1)
                    eta[u].set(v);
                else if (th == 0)
                    sigma[u].set(v);
                else
                    nu[u].set(v);
            }
        nbr.reserve(n);
        anti.reserve(n);
        for (int u = 0; u < n; ++u) {
            nbr.push_back(eta[u] | sigma[u]);
            anti.push_back(nu[u] | sigma[u]);
        }
    }
};

// ---------------------------------------------------------------------------
// Switchable components

enum class CompShape { single_pair, two_pair_path, other };
enum class WeightClass { plain, heavy, light };

struct SwitchableComponent {
    VertexSet vertices;      // sorted
    CompShape shape = CompShape::other;
    WeightClass weight_class = WeightClass::plain;
    // Endpoints/center of the Sigma-path; for a single pair center = -1.
    int end_a = -1, end_b = -1, center = -1;
};

// Connected components of Sigma(T), restricted to vertices incident to at
// least one switchable pair.
inline std::vector<SwitchableComponent> switchable_components(const Trigraph& t) {
    std::vector<int> comp(t.n, -1);
    std::vector<SwitchableComponent> out;
    for (int s = 0; s < t.n; ++s) {
        if (comp[s] != -1) continue;
        bool incident = false;
        for (int v = 0; v < t.n && !incident; ++v)
            if (v != s && t.theta(s, v) == 0) incident = true;
        if (!incident) continue;
        // BFS over switchable pairs.
        std::vector<int> stack{s}, verts;
        comp[s] = int(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (int v = 0; v < t.n; ++v)
                if (v != u && t.theta(u, v) == 0 && comp[v] == -1) {
                    comp[v] = comp[s];
                    stack.push_back(v);
                }
        }
        std::sort(verts.begin(), verts.end());
        SwitchableComponent c;
        c.vertices = verts;
        int edges = 0;
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (t.theta(verts[i], verts[j]) == 0) ++edges;
        if (verts.size() == 2 && edges == 1) {
            c.shape = CompShape::single_pair;
            c.end_a = verts[0];
            c.end_b = verts[1];
        } else if (verts.size() == 3 && edges == 2) {
            // Path x - c - y: the center has sigma-degree 2.
            for (int v : verts) {
                int d = 0;
                for (int u : verts)
                    if (u != v && t.theta(u, v) == 0) ++d;
                if (d == 2) c.center = v;
            }
            for (int v : verts)
                if (v != c.center) (c.end_a == -1 ? c.end_a : c.end_b) = v;
            c.shape = CompShape::two_pair_path;
            int x = c.end_a, y = c.end_b, m = c.center;
            bool heavy = t.theta(x, y) == 1, light = t.theta(x, y) == -1;
            for (int v = 0; v < t.n && (heavy || light); ++v) {
                if (v == x || v == y || v == m) continue;
                if (t.theta(m, v) != 1) heavy = false;
                if (t.theta(m, v) != -1) light = false;
            }
            if (heavy)
                c.weight_class = WeightClass::heavy;
            else if (light)
                c.weight_class = WeightClass::light;
        } else {
            c.shape = CompShape::other;
        }
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Class F membership

struct ClassFReport {
    bool in_class = true;
    // (vertex or representative vertex of an offending component, reason)
    std::vector<std::pair<int, std::string>> violations;
};

// T is in class F iff every switchable component has at most two sigma-edges
// and every Sigma-degree-2 vertex is heavy or light.  Berge-ness is not
// checked here.
inline ClassFReport classify_class_F(const Trigraph& t) {
    ClassFReport rep;
    for (const auto& c : switchable_components(t)) {
        if (c.shape == CompShape::other) {
            rep.violations.push_back({c.vertices.front(), "switchable component with more than two edges"});
        } else if (c.shape == CompShape::two_pair_path &&
                   c.weight_class == WeightClass::plain) {
            rep.violations.push_back({c.center, "degree-2 switchable vertex neither heavy nor light"});
        }
    }
    rep.in_class = rep.violations.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Small-scale exact Berge check

namespace detail {

// DFS for an odd hole whose minimum vertex is `start`.  Path vertices must be
// pairwise antiadjacent except consecutive ones, which are adjacent.
inline bool odd_hole_dfs(const Trigraph& t, std::vector<int>& path, Bits& used, int start) {
    int m = int(path.size());
    int last = path.back();
    // Try to close: need >= 5 vertices, odd count, closer adjacent to both
    // ends and antiadjacent to the interior of the path.
    if (m + 1 >= 5 && (m + 1) % 2 == 1) {
        for (int v = start + 1; v < t.n; ++v) {
            if (used.get(v)) continue;
            if (!t.adjacent(last, v) || !t.adjacent(path[0], v)) continue;
            bool ok = true;
            for (int i = 1; i + 1 < m && ok; ++i)
                if (!t.antiadjacent(path[i], v)) ok = false;
            if (ok) return true;
        }
    }
    if (m >= t.n) return false;
    for (int v = start + 1; v < t.n; ++v) {
        if (used.get(v) || !t.adjacent(last, v)) continue;
        bool ok = true;
        for (int i = 0; i + 1 < m && ok; ++i)
            if (!t.antiadjacent(path[i], v)) ok = false;
        if (!ok) continue;
        path.push_back(v);
        used.set(v);
        if (odd_hole_dfs(t, path, used, start)) return true;
        used.reset(v);
        path.pop_back();
    }
    return false;
}

inline bool has_odd_hole(const Trigraph& t) {
    for (int s = 0; s + 4 < t.n + 0; ++s) {
        std::vector<int> path{s};
        Bits used(t.n);
        used.set(s);
        if (odd_hole_dfs(t, path, used, s)) return true;
    }
    return false;
}

} // namespace detail

struct SizeCapError {
    std::string what;
};

// Exhaustive odd hole / odd antihole search; intended for test sizes.
// Throws SizeCapError above the cap.
inline bool is_berge_small(const Trigraph& t, int cap = 14) {
    if (t.n > cap) throw SizeCapError{"is_berge_small: n exceeds cap"};
    if (detail::has_odd_hole(t)) return false;
    if (detail::has_odd_hole(complement(t))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Parity of side paths of a 2-join

enum class Parity { odd, even, not_found };

// Parity of the length of some path with one end in a_side, one end in
// b_side and interior in `interior`.  Paths are found as shortest paths in
// the full realization restricted to {a} + interior + b_side with edges
// inside b_side removed; shortest paths are chordless, hence trigraph paths.
inline Parity find_path_parity(const Trigraph& t, const VertexSet& a_side,
                               const VertexSet& b_side, const VertexSet& interior) {
    Bits bset = Bits::from(t.n, b_side);
    Bits cset = Bits::from(t.n, interior);
    for (int a : a_side) {
        std::vector<int> dist(t.n, -1);
        std::vector<int> queue{a};
        dist[a] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (bset.get(u)) return (dist[u] % 2) ? Parity::odd : Parity::even;
            if (u != a && !cset.get(u)) continue; // only a and interior expand
            for (int v = 0; v < t.n; ++v) {
                if (dist[v] != -1 || v == u) continue;
                if (!t.adjacent(u, v)) continue;
                if (!cset.get(v) && !bset.get(v)) continue;
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return Parity::not_found;
}

} // namespace perfect
