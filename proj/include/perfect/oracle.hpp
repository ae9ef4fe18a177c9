#pragma once

#include <cstdlib>
#include <optional>

#include "trigraph.hpp"

// Exhaustive reference oracles.  Exponential; guarded by a size cap that the
// PERFECTSOLVE_BF_CAP environment variable overrides.

namespace perfect {

inline int bf_cap_default() {
    if (const char* e = std::getenv("PERFECTSOLVE_BF_CAP")) {
        int v = std::atoi(e);
        if (v > 0) return v;
    }
    return 14;
}

inline void bf_check_cap(const Trigraph& t, int cap) {
    if (t.n > (cap > 0 ? cap : bf_cap_default()))
        throw SizeCapError{"brute-force oracle: n exceeds cap"};
}

inline std::pair<Weight, VertexSet> alpha_bf_set(const Trigraph& t, int cap = 0) {
    bf_check_cap(t, cap);
    Weight best = 0;
    VertexSet best_set;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from, Weight w) -> void {
        if (w > best) {
            best = w;
            best_set = cur;
        }
        for (int v = from; v < t.n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (t.theta(u, v) != -1) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1, w + t.w[v]);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return {best, best_set};
}

// Maximum weight of a strong stable set, by exhaustive enumeration.
inline Weight alpha_bf(const Trigraph& t, int cap = 0) {
    return alpha_bf_set(t, cap).first;
}

// Maximum cardinality of a (trigraph) clique of the full realization; for
// graphs this is the usual omega.
inline int omega_bf(const Trigraph& t, int cap = 0) {
    bf_check_cap(t, cap);
    Trigraph c = complement(full_realization(t));
    for (int v = 0; v < c.n; ++v) c.w[v] = 1;
    return int(alpha_bf(c, cap));
}

// Exact chromatic number of the full realization by branch and bound.
inline int chi_bf(const Trigraph& t, int cap = 0) {
    bf_check_cap(t, cap);
    Trigraph g = full_realization(t);
    int n = g.n;
    if (n == 0) return 0;
    std::vector<int> color(n, -1);
    int best = n + 1;
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (used >= best) return;
        if (v == n) {
            best = used;
            return;
        }
        for (int c = 0; c < used; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (color[u] == c && g.adjacent(u, v)) ok = false;
            if (ok) {
                color[v] = c;
                self(self, v + 1, used);
                color[v] = -1;
            }
        }
        color[v] = used;
        self(self, v + 1, used + 1);
        color[v] = -1;
    };
    rec(rec, 0, 0);
    return best;
}

namespace detail {

// Is the set connected in the full realization of T restricted to it?
inline bool connected_in(const Trigraph& t, const Bits& set, bool anti) {
    int s = set.first();
    if (s < 0) return true;
    Bits seen(t.n);
    seen.set(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < t.n; ++v) {
            if (!set.get(v) || seen.get(v) || v == u) continue;
            bool link = anti ? t.antiadjacent(u, v) : t.adjacent(u, v);
            if (link) {
                seen.set(v);
                stack.push_back(v);
            }
        }
    }
    Bits missing = set;
    missing.subtract(seen);
    return missing.none();
}

// Exists a trigraph path of odd length > 1 with both ends in `ends` and all
// interior vertices in `mid`?  (Antipath search runs this on the complement.)
inline bool odd_path_dfs(const Trigraph& t, const Bits& ends, const Bits& mid,
                         std::vector<int>& path, Bits& used) {
    int last = path.back();
    int m = int(path.size());
    // close on an end vertex: length m >= 3 edges... length = m edges when
    // the closer is appended; odd length > 1 means an even vertex count >= 4.
    if (m >= 3 && m % 2 == 1) {
        // appending a closer gives m edges? path of k vertices has k-1 edges:
        // with closer, k = m+1 vertices, length m.  m odd and m >= 3.
        for (int v = 0; v < t.n; ++v) {
            if (used.get(v) || !ends.get(v)) continue;
            if (!t.adjacent(last, v)) continue;
            bool ok = true;
            for (int i = 0; i + 1 < m && ok; ++i)
                if (!t.antiadjacent(path[i], v)) ok = false;
            if (ok) return true;
        }
    }
    for (int v = 0; v < t.n; ++v) {
        if (used.get(v) || !mid.get(v)) continue;
        if (!t.adjacent(last, v)) continue;
        bool ok = true;
        for (int i = 0; i + 1 < m && ok; ++i)
            if (!t.antiadjacent(path[i], v)) ok = false;
        if (!ok) continue;
        path.push_back(v);
        used.set(v);
        if (odd_path_dfs(t, ends, mid, path, used)) return true;
        used.reset(v);
        path.pop_back();
    }
    return false;
}

inline bool has_odd_path(const Trigraph& t, const Bits& ends, const Bits& mid) {
    std::vector<int> starters;
    ends.for_each([&](int v) { starters.push_back(v); });
    for (int s : starters) {
        std::vector<int> path{s};
        Bits used(t.n);
        used.set(s);
        if (odd_path_dfs(t, ends, mid, path, used)) return true;
    }
    return false;
}

} // namespace detail

// (A,B) is balanced: no odd path of length > 1 with ends in B and interior
// in A, and no odd antipath of length > 1 with ends in A and interior in B.
inline bool is_balanced_pair(const Trigraph& t, const Bits& a, const Bits& b) {
    if (detail::has_odd_path(t, b, a)) return false;
    Trigraph tc = complement(t);
    if (detail::has_odd_path(tc, a, b)) return false;
    return true;
}

// Exhaustive balanced-skew-partition test: enumerate all cutsets B, check
// that A = V \ B is disconnected, B is not anticonnected, and (A,B) is
// balanced.
inline bool has_bsp_bf(const Trigraph& t, int cap = 0) {
    bf_check_cap(t, cap);
    if (t.n > 30) throw SizeCapError{"has_bsp_bf: n too large"};
    for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << t.n); ++mask) {
        Bits b(t.n), a(t.n);
        for (int v = 0; v < t.n; ++v)
            (mask >> v & 1 ? b : a).set(v);
        if (a.count() < 2 || b.count() < 2) continue;
        if (detail::connected_in(t, a, false)) continue;
        if (detail::connected_in(t, b, true)) continue;
        if (is_balanced_pair(t, a, b)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Weak fragments by enumeration (section-10 structure, used as the oracle
// for the forcing search).

struct WeakSplitBf {
    VertexSet A1, B1, C1, D1, A2, B2, C2, D2;
};

// Given X and the seed roles a1 in A1, b1 in B1, the split is forced:
// A2|D2 = eta(a1) \ X, B2|D2 = eta(b1) \ X, D2 their intersection.  Returns
// the split if every condition of the weak-fragment definition holds.
inline std::optional<WeakSplitBf> weak_split_for(const Trigraph& t, const TrigraphBits& tb,
                                                 const Bits& x, int a1, int b1) {
    int n = t.n;
    Bits s(n);
    s.set_all();
    s.subtract(x);
    if (x.count() < 4 || s.count() < 4) return std::nullopt;
    Bits ad = tb.eta[a1] & s, bd = tb.eta[b1] & s;
    Bits d2 = ad & bd;
    Bits a2 = andnot(ad, d2), b2 = andnot(bd, d2);
    Bits c2 = andnot(andnot(s, ad), bd);
    if (a2.none() || b2.none()) return std::nullopt;
    // classify X
    Bits A1(n), B1(n), C1(n), D1(n);
    bool ok = true;
    x.for_each([&](int v) {
        if (!ok) return;
        Bits es = tb.eta[v] & s; // strong neighbors outside
        bool no_sigma_out = !(tb.sigma[v] & s).any();
        // A1: strongly complete to A2|D2, strongly anticomplete to B2|C2
        if (es == (a2 | d2) && no_sigma_out) {
            A1.set(v);
            return;
        }
        if (es == (b2 | d2) && no_sigma_out) {
            B1.set(v);
            return;
        }
        // C1: strongly anticomplete to A2|B2|C2.  Relations to D2 are free
        // by the definition, but every admissible type empties one side, so
        // a switchable pair there can never survive the type check.
        Bits abc = a2 | b2 | c2;
        if (!(tb.nbr[v] & abc).any() && !(tb.sigma[v] & d2).any()) {
            C1.set(v);
            return;
        }
        // D1: strongly complete to A2|B2|D2; relations to C2 free.
        Bits abd = a2 | b2 | d2;
        if ((tb.eta[v] & abd) == abd && !(tb.sigma[v] & c2).any()) {
            D1.set(v);
            return;
        }
        ok = false;
    });
    if (!ok) return std::nullopt;
    if (!A1.get(a1) || !B1.get(b1)) return std::nullopt;
    // C1 vertices must also be strongly anticomplete on the C side: already
    // enforced; now the D1/C1 cross conditions with C2/D2 are free by the
    // definition.  Type condition:
    bool hp = !C1.any() && !D1.any() && c2.any() && d2.any();
    bool tj = !D1.any() && !d2.any();
    bool ctj = !C1.any() && !c2.any();
    if (!hp && !tj && !ctj) return std::nullopt;
    WeakSplitBf w;
    w.A1 = A1.to_vector();
    w.B1 = B1.to_vector();
    w.C1 = C1.to_vector();
    w.D1 = D1.to_vector();
    w.A2 = a2.to_vector();
    w.B2 = b2.to_vector();
    w.C2 = c2.to_vector();
    w.D2 = d2.to_vector();
    return w;
}

// All weak fragments of T (as vertex sets, with one witnessing split each).
inline std::vector<std::pair<VertexSet, WeakSplitBf>> weak_fragments_bf(const Trigraph& t,
                                                                        int cap = 0) {
    bf_check_cap(t, cap);
    if (t.n > 24) throw SizeCapError{"weak_fragments_bf: n too large"};
    TrigraphBits tb(t);
    std::vector<std::pair<VertexSet, WeakSplitBf>> out;
    for (uint32_t mask = 0; mask < (uint32_t(1) << t.n); ++mask) {
        Bits x(t.n);
        for (int v = 0; v < t.n; ++v)
            if (mask >> v & 1) x.set(v);
        int cx = x.count();
        if (cx < 4 || t.n - cx < 4) continue;
        bool found = false;
        std::vector<int> xs = x.to_vector();
        for (int a1 : xs) {
            for (int b1 : xs) {
                if (a1 == b1) continue;
                if (auto w = weak_split_for(t, tb, x, a1, b1)) {
                    out.push_back({xs, *w});
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    return out;
}

// Is X a weak fragment compatible with the proper 4-tuple (a1,b1,a2,b2)?
inline bool weak_fragment_compatible_bf(const Trigraph& t, const TrigraphBits& tb,
                                        const Bits& x, int a1, int b1, int a2, int b2) {
    if (x.get(a2) || x.get(b2) || !x.get(a1) || !x.get(b1)) return false;
    auto w = weak_split_for(t, tb, x, a1, b1);
    if (!w) return false;
    auto has = [](const VertexSet& v, int i) {
        return std::find(v.begin(), v.end(), i) != v.end();
    };
    return has(w->A2, a2) && has(w->B2, b2);
}

} // namespace perfect
