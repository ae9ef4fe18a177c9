#pragma once

#include <random>
#include <string>

#include "trigraph.hpp"

namespace perfect {

// Deterministic instance generator.  Composite recipes glue basic pieces by
// the inverse of the block construction: a closed chain of pieces with
// strong-complete A/B interfaces, with matched path parities so the result
// stays Berge.  The basic recipe emits single-class instances.
struct GeneratorSpec {
    uint64_t seed = 1;
    int target_size = 12;
    int max_weight = 10;
    std::string recipe = "mixed"; // mixed | chain | basic
};

namespace detail {

struct Piece {
    Trigraph t;
    VertexSet A, B;
    int parity; // parity of every A-B path length
};

// Adds an apex vertex over a strong edge, forming a triangle.  The new
// vertex sits in no induced A-B path (the thickened edge chords it), so the
// piece parity is unchanged, but the piece stops being bipartite.
inline void thicken_edge(Piece& p, int u, int v) {
    Trigraph t(p.t.n + 1);
    for (int i = 0; i < p.t.n; ++i)
        for (int j = i + 1; j < p.t.n; ++j) t.set_theta(i, j, p.t.theta(i, j));
    t.set_theta(p.t.n, u, kStrongEdge);
    t.set_theta(p.t.n, v, kStrongEdge);
    p.t = std::move(t);
}

// A path piece; at most one decoration: a switchable edge, a light mid
// vertex (both incident edges switchable), or a triangle apex.
inline Piece piece_path(std::mt19937_64& rng, int len, bool allow_sigma) {
    Piece p;
    p.t = Trigraph(len + 1);
    for (int i = 0; i < len; ++i) p.t.set_theta(i, i + 1, kStrongEdge);
    p.A = {0};
    p.B = {len};
    p.parity = len % 2;
    int r = int(rng() % 4);
    if (r == 0 && allow_sigma && len >= 3) {
        int e = 1 + int(rng() % (len - 2));
        p.t.set_theta(e, e + 1, kSwitchable);
    } else if (r == 1 && allow_sigma && len >= 4) {
        int c = 2 + int(rng() % (len - 3));
        p.t.set_theta(c - 1, c, kSwitchable);
        p.t.set_theta(c, c + 1, kSwitchable);
    } else if (r == 2 && len >= 2) {
        int e = int(rng() % len);
        thicken_edge(p, e, e + 1);
    }
    return p;
}

// Two interior strands of the same parity between shared end vertices a, b.
inline Piece piece_theta(std::mt19937_64& rng, int k, bool allow_sigma) {
    int n = 2 + 2 * k;
    Piece p;
    p.t = Trigraph(n);
    int a = 0, b = 1;
    for (int s = 0; s < 2; ++s) {
        int first = 2 + s * k, last = first + k - 1;
        p.t.set_theta(a, first, kStrongEdge);
        for (int i = first; i < last; ++i) p.t.set_theta(i, i + 1, kStrongEdge);
        p.t.set_theta(last, b, kStrongEdge);
    }
    int r = int(rng() % 3);
    if (r == 0 && allow_sigma && k >= 2) {
        int s = int(rng() % 2);
        int first = 2 + s * k;
        int e = first + int(rng() % (k - 1));
        p.t.set_theta(e, e + 1, kSwitchable);
    } else if (r == 1 && k >= 2) {
        int s = int(rng() % 2);
        int first = 2 + s * k;
        int e = first + int(rng() % (k - 1));
        p.A = {a};
        p.B = {b};
        p.parity = (k + 1) % 2;
        thicken_edge(p, e, e + 1);
        return p;
    }
    p.A = {a};
    p.B = {b};
    p.parity = (k + 1) % 2;
    return p;
}

// Two disjoint rails of the same parity; A and B each get two vertices.
inline Piece piece_rails(std::mt19937_64& rng, int len, bool allow_sigma) {
    int m = len + 1;
    Piece p;
    p.t = Trigraph(2 * m);
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < len; ++i) p.t.set_theta(s * m + i, s * m + i + 1, kStrongEdge);
    p.A = {0, m};
    p.B = {len, m + len};
    p.parity = len % 2;
    int r = int(rng() % 3);
    if (r == 0 && allow_sigma && len >= 3) {
        int e = 1 + int(rng() % (len - 2));
        p.t.set_theta(e, e + 1, kSwitchable);
    } else if (r == 1) {
        int e = int(rng() % len);
        thicken_edge(p, e, e + 1);
    }
    return p;
}

inline Piece make_piece(std::mt19937_64& rng, bool sigma_ok, int want_parity = -1) {
    int type = int(rng() % 3);
    auto pick_len = [&](int lo, int hi) {
        int len = lo + int(rng() % (hi - lo + 1));
        if (want_parity >= 0 && len % 2 != want_parity) {
            if (len + 1 <= hi)
                ++len;
            else
                --len;
        }
        return len;
    };
    if (type == 0) return piece_path(rng, pick_len(2, 5), sigma_ok);
    if (type == 1) {
        int k = pick_len(1, 4);
        // theta parity is (k+1) mod 2
        if (want_parity >= 0 && (k + 1) % 2 != want_parity) k = k + 1 <= 4 ? k + 1 : k - 1;
        return piece_theta(rng, std::max(1, k), sigma_ok);
    }
    return piece_rails(rng, pick_len(2, 4), sigma_ok);
}

inline Trigraph close_chain(const std::vector<Piece>& pieces) {
    int n = 0;
    std::vector<int> off;
    for (const auto& p : pieces) {
        off.push_back(n);
        n += p.t.n;
    }
    Trigraph t(n);
    for (size_t i = 0; i < pieces.size(); ++i)
        for (int u = 0; u < pieces[i].t.n; ++u)
            for (int v = u + 1; v < pieces[i].t.n; ++v)
                t.set_theta(off[i] + u, off[i] + v, pieces[i].t.theta(u, v));
    for (size_t i = 0; i < pieces.size(); ++i) {
        size_t j = (i + 1) % pieces.size();
        for (int u : pieces[i].B)
            for (int v : pieces[j].A) t.set_theta(off[i] + u, off[j] + v, kStrongEdge);
    }
    return t;
}

// Basic standalone instances (the same constructions double as recipe
// building blocks).
inline Trigraph gen_bipartite(std::mt19937_64& rng, int n) {
    Trigraph t(n);
    std::vector<int> side(n);
    for (int v = 0; v < n; ++v) side[v] = int(rng() % 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (side[u] != side[v] && rng() % 2) t.set_theta(u, v, kStrongEdge);
    // switchable pairs form a matching so the result stays in class F
    std::vector<char> in_sigma(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (side[u] != side[v] && !in_sigma[u] && !in_sigma[v] && rng() % 8 == 0) {
                t.set_theta(u, v, kSwitchable);
                in_sigma[u] = in_sigma[v] = 1;
            }
    return t;
}

inline Trigraph gen_line(std::mt19937_64& rng, int want) {
    int a = 2 + int(rng() % 3), b = 2 + int(rng() % 3);
    std::vector<std::pair<int, int>> es;
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y)
            if (int(es.size()) < want && rng() % 2) es.push_back({x, a + y});
    if (es.empty()) es.push_back({0, a});
    int n = int(es.size());
    Trigraph t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (es[i].first == es[j].first || es[i].second == es[j].second)
                t.set_theta(i, j, kStrongEdge);
    std::vector<std::vector<int>> at(a + b);
    for (int i = 0; i < n; ++i) {
        at[es[i].first].push_back(i);
        at[es[i].second].push_back(i);
    }
    for (const auto& star : at)
        if (star.size() == 2 && rng() % 2) {
            t.set_theta(star[0], star[1], kSwitchable);
            break;
        }
    return t;
}

inline Trigraph gen_doubled(std::mt19937_64& rng, int xp, int yp, int singles) {
    std::vector<std::pair<int, int>> xc, yc;
    int n = 0;
    for (int i = 0; i < xp; ++i, n += 2) xc.push_back({n, n + 1});
    for (int i = 0; i < yp; ++i, n += 2) yc.push_back({n, n + 1});
    for (int i = 0; i < singles; ++i, ++n)
        (rng() % 2 ? xc : yc).push_back({n, -1});
    Trigraph t(n);
    for (auto [u, v] : xc)
        if (v != -1) t.set_theta(u, v, rng() % 2 ? kStrongEdge : kSwitchable);
    std::vector<int> yv;
    for (auto [u, v] : yc) {
        yv.push_back(u);
        if (v != -1) yv.push_back(v);
    }
    for (size_t i = 0; i < yv.size(); ++i)
        for (size_t j = i + 1; j < yv.size(); ++j) t.set_theta(yv[i], yv[j], kStrongEdge);
    for (auto [u, v] : yc)
        if (v != -1) t.set_theta(u, v, rng() % 2 ? kStrongAntiedge : kSwitchable);
    for (auto [xu, xv] : xc)
        for (auto [yu, yv2] : yc) {
            if (xv != -1 && yv2 != -1) {
                if (rng() % 2) {
                    t.set_theta(xu, yu, kStrongEdge);
                    t.set_theta(xv, yv2, kStrongEdge);
                } else {
                    t.set_theta(xu, yv2, kStrongEdge);
                    t.set_theta(xv, yu, kStrongEdge);
                }
            } else if (xv != -1) {
                t.set_theta(rng() % 2 ? xu : xv, yu, kStrongEdge);
            } else if (yv2 != -1) {
                t.set_theta(xu, rng() % 2 ? yu : yv2, kStrongEdge);
            } else if (rng() % 2) {
                t.set_theta(xu, yu, kStrongEdge);
            }
        }
    return t;
}

} // namespace detail

inline Trigraph generate(const GeneratorSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    Trigraph t;
    bool basic_only = spec.recipe == "basic";
    bool chain_only = spec.recipe == "chain";
    bool pick_basic = basic_only || (!chain_only && rng() % 4 == 0);
    if (pick_basic) {
        int n = std::max(2, spec.target_size);
        switch (rng() % 4) {
            case 0: t = detail::gen_bipartite(rng, n); break;
            case 1: t = complement(detail::gen_bipartite(rng, n)); break;
            case 2: t = detail::gen_line(rng, n); break;
            default:
                t = detail::gen_doubled(rng, 1 + int(rng() % 2), 1 + int(rng() % 2),
                                        std::max(0, n - 6));
                break;
        }
    } else {
        std::vector<detail::Piece> pieces;
        int target = std::max(7, spec.target_size);
        int used = 0, parity_sum = 0;
        while (true) {
            int remaining = target - used;
            if (!pieces.empty() && remaining <= 8) {
                // final piece fixes the total parity: the parity sum plus
                // the piece count must be even so every crossing hole is
                int want = parity_sum ^ (int(pieces.size() + 1) % 2);
                int len = want ? 3 : 2;
                if (remaining >= len + 3 && rng() % 2) len += 2;
                pieces.push_back(detail::piece_path(rng, len, true));
                break;
            }
            detail::Piece p = detail::make_piece(rng, true);
            parity_sum ^= p.parity;
            used += p.t.n;
            pieces.push_back(std::move(p));
        }
        t = detail::close_chain(pieces);
        if (!basic_only && rng() % 3 == 0) t = complement(t);
    }
    std::uniform_int_distribution<int> wdist(0, spec.max_weight);
    for (int v = 0; v < t.n; ++v) t.w[v] = wdist(rng);
    return t;
}

} // namespace perfect
