#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "trigraph.hpp"

namespace perfect {

struct ParseError {
    int line = 0;
    std::string msg;
};

struct ParseResult {
    std::optional<Trigraph> t;
    std::optional<ParseError> err;

    explicit operator bool() const { return t.has_value(); }
};

// Trigraph format, line based and diff friendly:
//   c <comment>
//   p tri <n>
//   w <v> <weight>     default weight is 1
//   e <u> <v>          strong edge
//   s <u> <v>          switchable pair
// Vertices are 1-indexed; unlisted pairs are strong antiedges; duplicate
// pair or weight lines are errors.
inline ParseResult parse_trigraph(std::istream& in) {
    ParseResult res;
    std::string line;
    int lineno = 0;
    std::optional<Trigraph> t;
    std::vector<char> w_seen;
    std::vector<char> pair_seen;
    auto fail = [&](const std::string& m) {
        res.t.reset();
        res.err = ParseError{lineno, m};
        return res;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long n;
            if (!(ls >> kind >> n) || kind != "tri") return fail("expected 'p tri <n>'");
            if (t) return fail("duplicate header");
            if (n < 0 || n > kMaxVertices) return fail("vertex count out of range");
            t = Trigraph(int(n));
            w_seen.assign(n, 0);
            pair_seen.assign(size_t(n) * n, 0);
            continue;
        }
        if (!t) return fail("missing 'p tri' header");
        if (tag == "w") {
            long long v, wt;
            if (!(ls >> v >> wt)) return fail("malformed weight line");
            if (v < 1 || v > t->n) return fail("vertex out of range");
            if (wt < 0) return fail("negative weight");
            if (w_seen[v - 1]) return fail("duplicate weight line");
            w_seen[v - 1] = 1;
            t->w[v - 1] = wt;
            continue;
        }
        if (tag == "e" || tag == "s") {
            long long u, v;
            if (!(ls >> u >> v)) return fail("malformed pair line");
            if (u < 1 || u > t->n || v < 1 || v > t->n) return fail("vertex out of range");
            if (u == v) return fail("self-pair");
            if (pair_seen[size_t(u - 1) * t->n + (v - 1)]) return fail("duplicate pair line");
            pair_seen[size_t(u - 1) * t->n + (v - 1)] = 1;
            pair_seen[size_t(v - 1) * t->n + (u - 1)] = 1;
            t->set_theta(int(u - 1), int(v - 1), tag == "e" ? kStrongEdge : kSwitchable);
            continue;
        }
        return fail("unknown line tag '" + tag + "'");
    }
    if (!t) return fail("empty input");
    res.t = std::move(t);
    return res;
}

// Standard DIMACS edge format; every edge becomes a strong edge.
inline ParseResult parse_dimacs(std::istream& in) {
    ParseResult res;
    std::string line;
    int lineno = 0;
    std::optional<Trigraph> t;
    auto fail = [&](const std::string& m) {
        res.t.reset();
        res.err = ParseError{lineno, m};
        return res;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long n, m;
            if (!(ls >> kind >> n) || (kind != "edge" && kind != "edges" && kind != "col"))
                return fail("expected 'p edge <n> <m>'");
            ls >> m;
            if (n < 0 || n > kMaxVertices) return fail("vertex count out of range");
            t = Trigraph(int(n));
            continue;
        }
        if (tag == "e") {
            if (!t) return fail("missing 'p edge' header");
            long long u, v;
            if (!(ls >> u >> v)) return fail("malformed edge line");
            if (u < 1 || u > t->n || v < 1 || v > t->n) return fail("vertex out of range");
            if (u == v) return fail("self-loop");
            t->set_theta(int(u - 1), int(v - 1), kStrongEdge);
            continue;
        }
        if (tag == "n") continue; // node lines of the coloring variant
        return fail("unknown line tag '" + tag + "'");
    }
    if (!t) return fail("empty input");
    res.t = std::move(t);
    return res;
}

// Normalized emission: weights differing from 1 first, then sorted edge and
// switchable lines; parse(emit(t)) reproduces t exactly.
inline void emit_trigraph(std::ostream& out, const Trigraph& t) {
    out << "p tri " << t.n << "\n";
    for (int v = 0; v < t.n; ++v)
        if (t.w[v] != 1) out << "w " << v + 1 << " " << t.w[v] << "\n";
    for (int u = 0; u < t.n; ++u)
        for (int v = u + 1; v < t.n; ++v)
            if (t.theta(u, v) == kStrongEdge) out << "e " << u + 1 << " " << v + 1 << "\n";
    for (int u = 0; u < t.n; ++u)
        for (int v = u + 1; v < t.n; ++v)
            if (t.theta(u, v) == kSwitchable) out << "s " << u + 1 << " " << v + 1 << "\n";
}

inline void emit_dimacs(std::ostream& out, const Trigraph& t) {
    long long m = 0;
    for (int u = 0; u < t.n; ++u)
        for (int v = u + 1; v < t.n; ++v)
            if (t.adjacent(u, v)) ++m;
    out << "p edge " << t.n << " " << m << "\n";
    for (int u = 0; u < t.n; ++u)
        for (int v = u + 1; v < t.n; ++v)
            if (t.adjacent(u, v)) out << "e " << u + 1 << " " << v + 1 << "\n";
}

} // namespace perfect
