#include <set>
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfect/basic.hpp"
#include "perfect/oracle.hpp"
#include "util.hpp"

using namespace perfect;
using namespace perfect::testutil;

namespace {

// Random members of each basic class, for closure and oracle sweeps.

Trigraph random_bipartite_trigraph(std::mt19937_64& rng, int n) {
    Trigraph t(n);
    std::vector<int> side(n);
    for (int v = 0; v < n; ++v) side[v] = int(rng() % 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (side[u] != side[v]) {
                int r = int(rng() % 4);
                t.set_theta(u, v, r == 0 ? kSwitchable : (r <= 2 ? kStrongEdge : kStrongAntiedge));
            }
    for (int v = 0; v < n; ++v) t.w[v] = rng() % 7;
    return t;
}

// Line trigraph of a random bipartite root; switchable pairs only at
// degree-2 root vertices so that no clique of size 3 meets them.
Trigraph random_line_trigraph(std::mt19937_64& rng, int edges) {
    int a = 2 + int(rng() % 3), b = 2 + int(rng() % 3);
    std::vector<std::pair<int, int>> es;
    std::set<std::pair<int, int>> seen;
    int guard = 0;
    while (int(es.size()) < edges && guard++ < 200) {
        int x = int(rng() % a), y = int(rng() % b);
        if (seen.insert({x, y}).second) es.push_back({x, a + y});
    }
    int n = int(es.size());
    Trigraph t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (es[i].first == es[j].first || es[i].second == es[j].second ||
                es[i].first == es[j].second || es[i].second == es[j].first)
                t.set_theta(i, j, kStrongEdge);
    // try one switchable pair at a degree-2 root vertex
    std::vector<std::vector<int>> at(a + b);
    for (int i = 0; i < n; ++i) {
        at[es[i].first].push_back(i);
        at[es[i].second].push_back(i);
    }
    for (const auto& star : at)
        if (star.size() == 2) {
            t.set_theta(star[0], star[1], kSwitchable);
            break;
        }
    for (int v = 0; v < n; ++v) t.w[v] = rng() % 7;
    return t;
}

// Doubled trigraph built from its good partition.
Trigraph random_doubled_trigraph(std::mt19937_64& rng, int xpairs, int ypairs, int singles) {
    std::vector<std::pair<int, int>> xc, yc; // components (second = -1 when singleton)
    int n = 0;
    for (int i = 0; i < xpairs; ++i) {
        xc.push_back({n, n + 1});
        n += 2;
    }
    for (int i = 0; i < ypairs; ++i) {
        yc.push_back({n, n + 1});
        n += 2;
    }
    for (int i = 0; i < singles; ++i) {
        if (rng() % 2)
            xc.push_back({n++, -1});
        else
            yc.push_back({n++, -1});
    }
    Trigraph t(n);
    for (auto [u, v] : xc)
        if (v != -1) t.set_theta(u, v, rng() % 2 ? kStrongEdge : kSwitchable);
    for (auto& [u, v] : yc)
        if (v != -1) t.set_theta(u, v, rng() % 2 ? kStrongAntiedge : kSwitchable);
    // all other Y-internal pairs are strong edges
    std::vector<int> yv;
    for (auto [u, v] : yc) {
        yv.push_back(u);
        if (v != -1) yv.push_back(v);
    }
    for (size_t i = 0; i < yv.size(); ++i)
        for (size_t j = i + 1; j < yv.size(); ++j)
            if (t.theta(yv[i], yv[j]) == -1 || t.theta(yv[i], yv[j]) == 0) {
                bool same_comp = false;
                for (auto [u, v] : yc)
                    if (v != -1 && ((u == yv[i] && v == yv[j]) || (u == yv[j] && v == yv[i])))
                        same_comp = true;
                if (!same_comp) t.set_theta(yv[i], yv[j], kStrongEdge);
            }
    // cross relations: between a 2-component and any component, each vertex
    // gets at most one strong edge and one strong antiedge
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
            } else if (xv != -1) { // |C_Y| = 1: y sees exactly one of the pair
                t.set_theta(rng() % 2 ? xu : xv, yu, kStrongEdge);
            } else if (yv2 != -1) { // |C_X| = 1
                t.set_theta(xu, rng() % 2 ? yu : yv2, kStrongEdge);
            } else {
                if (rng() % 2) t.set_theta(xu, yu, kStrongEdge);
            }
        }
    for (int v = 0; v < n; ++v) t.w[v] = rng() % 7;
    return t;
}

} // namespace

TEST_CASE("recognize C4, C5, C6") {
    Trigraph c4 = cycle(4);
    auto rep = recognize_basic(c4);
    REQUIRE(rep);
    CHECK(rep->cls == BasicClass::bipartite);
    CHECK(rep->part_x == VertexSet{0, 2});
    CHECK(rep->part_y == VertexSet{1, 3});
    // C4 also admits a doubled witness
    CHECK(validate_good_partition(c4, {2, 3}, {0, 1}));

    CHECK(!recognize_basic(cycle(5)));
    CHECK(recognize_basic(cycle(6)));  // bipartite
    CHECK(!recognize_basic(cycle(7)));
    CHECK(!recognize_basic(petersen())); // not basic
}

TEST_CASE("alpha_bipartite on P4") {
    Trigraph p4 = path_graph(4);
    CHECK(alpha_bipartite(p4).value == 2);

    p4.w = {3, 1, 1, 3};
    auto r = alpha_bipartite(p4);
    CHECK(r.value == 6);
    CHECK(r.set == VertexSet{0, 3});

    p4.w = {2, 5, 1, 1};
    r = alpha_bipartite(p4);
    CHECK(r.value == 6);
    std::sort(r.set.begin(), r.set.end());
    CHECK(r.set == VertexSet{1, 3});

    CHECK_THROWS_AS((void)alpha_bipartite(complete(3)), ContractViolation);
}

TEST_CASE("alpha_complement_bipartite") {
    Trigraph k4 = complete(4);
    CHECK(alpha_complement_bipartite(k4).value == 1);
    k4.w = {5, 1, 1, 1};
    CHECK(alpha_complement_bipartite(k4).value == 5);

    Trigraph cp4 = complement(path_graph(4));
    CHECK(alpha_complement_bipartite(cp4).value == 2);
    CHECK(alpha_complement_bipartite(cp4).value == alpha_bf(cp4));
}

TEST_CASE("line recognition and alpha") {
    // L(P4) = P3
    Trigraph p3 = path_graph(3);
    auto root = recognize_line_trigraph(p3);
    REQUIRE(root);
    CHECK(alpha_line(p3, *root).value == 2);

    Trigraph k1(1);
    k1.w[0] = 9;
    auto r1 = recognize_line_trigraph(k1);
    REQUIRE(r1);
    CHECK(alpha_line(k1, *r1).value == 9);

    // L(C6) = C6
    Trigraph c6 = cycle(6);
    auto r6 = recognize_line_trigraph(c6);
    REQUIRE(r6);
    CHECK(alpha_line(c6, *r6).value == 3);

    // C5 is not a line trigraph of a bipartite graph
    CHECK(!recognize_line_trigraph(cycle(5)));
    // K4 is L(K_{1,4})
    CHECK(recognize_line_trigraph(complete(4)));
    // the diamond is a line graph but its root is not bipartite
    Trigraph diamond = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(!recognize_line_trigraph(diamond));
    // switchable pair inside a clique of size three disqualifies
    Trigraph bad = complete(3);
    bad.set_theta(0, 1, kSwitchable);
    CHECK(!recognize_line_trigraph(bad));
}

TEST_CASE("alpha_complement_line") {
    // complement of L(P4): stable sets of t are stars of P4's root
    Trigraph t = complement(path_graph(3));
    auto croot = recognize_line_trigraph(complement(t));
    REQUIRE(croot);
    CHECK(alpha_complement_line(t, *croot).value == 2);
    CHECK(alpha_complement_line(t, *croot).value == alpha_bf(t));

    // star K_{1,3} as root: t = complement of K3 (empty graph on 3)
    Trigraph k3c = complement(complete(3));
    auto r = recognize_line_trigraph(complement(k3c));
    REQUIRE(r);
    CHECK(alpha_complement_line(k3c, *r).value == 3);

    Trigraph k1(1);
    k1.w[0] = 4;
    auto r1 = recognize_line_trigraph(complement(k1));
    REQUIRE(r1);
    CHECK(alpha_complement_line(k1, *r1).value == 4);
}

TEST_CASE("good partition search") {
    // C4: {v3,v4} / {v1,v2} is good
    Trigraph c4 = cycle(4);
    auto gp = good_partition(c4);
    REQUIRE(gp);
    CHECK(validate_good_partition(c4, gp->first, gp->second));

    // P4 is a split graph: clique {b,c}, stable {a,d}
    Trigraph p4 = path_graph(4);
    gp = good_partition(p4);
    REQUIRE(gp);
    CHECK(validate_good_partition(p4, gp->first, gp->second));

    // C6: the answer of the seeded search agrees with exhaustive partition
    // enumeration (C6 turns out to be doubled: X = two edges, Y = an
    // antiedge).
    Trigraph c6 = cycle(6);
    auto gp6 = good_partition(c6);
    bool any = false;
    for (uint32_t mask = 0; mask < (1u << 6); ++mask) {
        VertexSet xs, ys;
        for (int v = 0; v < 6; ++v)
            (mask >> v & 1 ? ys : xs).push_back(v);
        if (validate_good_partition(c6, xs, ys)) any = true;
    }
    CHECK(gp6.has_value() == any);
    if (gp6) CHECK(validate_good_partition(c6, gp6->first, gp6->second));

    // exhaustive agreement on random small trigraphs
    std::mt19937_64 rng(23);
    for (int it = 0; it < 80; ++it) {
        Trigraph t = random_trigraph(rng, 2 + int(rng() % 6), 0.5, 0.2);
        bool exhaustive = false;
        for (uint32_t mask = 0; mask < (1u << t.n) && !exhaustive; ++mask) {
            VertexSet xs, ys;
            for (int v = 0; v < t.n; ++v)
                (mask >> v & 1 ? ys : xs).push_back(v);
            if (validate_good_partition(t, xs, ys)) exhaustive = true;
        }
        auto found = good_partition(t);
        CHECK(found.has_value() == exhaustive);
        if (found) CHECK(validate_good_partition(t, found->first, found->second));
    }
}

TEST_CASE("alpha_doubled") {
    // X = {x1,x2} strong edge, Y = {y1}, y1 strongly adjacent to x1 only
    Trigraph t(3);
    t.set_theta(0, 1, kStrongEdge);  // x1 x2
    t.set_theta(0, 2, kStrongEdge);  // x1 y1
    t.set_theta(1, 2, kStrongAntiedge);
    auto r = alpha_doubled(t, {0, 1}, {2});
    CHECK(r.value == 2);
    std::sort(r.set.begin(), r.set.end());
    CHECK(r.set == VertexSet{1, 2});

    // Y empty: reduces to the X side
    Trigraph m(4);
    m.set_theta(0, 1, kStrongEdge);
    m.set_theta(2, 3, kSwitchable);
    m.w = {4, 2, 1, 7};
    CHECK(alpha_doubled(m, {0, 1, 2, 3}, {}).value == 11);

    // X empty, Y a strong clique: best single vertex
    Trigraph k3 = complete(3);
    k3.w = {2, 9, 4};
    CHECK(alpha_doubled(k3, {}, {0, 1, 2}).value == 9);
}

TEST_CASE("closure under semirealizations and complement") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 50; ++it) {
        Trigraph t;
        switch (it % 3) {
            case 0: t = random_bipartite_trigraph(rng, 4 + int(rng() % 6)); break;
            case 1: t = random_line_trigraph(rng, 4 + int(rng() % 5)); break;
            default: t = random_doubled_trigraph(rng, 1 + int(rng() % 2), 1 + int(rng() % 2), int(rng() % 3)); break;
        }
        auto rep = recognize_basic(t);
        REQUIRE(rep);
        CHECK(recognize_basic(complement(t)).has_value());
        Trigraph semi = random_semirealization(rng, t);
        CHECK(recognize_basic(semi).has_value());
    }
}

TEST_CASE("alpha matches brute force on random basic instances") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 120; ++it) {
        Trigraph t;
        switch (it % 5) {
            case 0: t = random_bipartite_trigraph(rng, 3 + int(rng() % 14)); break;
            case 1: t = complement(random_bipartite_trigraph(rng, 3 + int(rng() % 14))); break;
            case 2: t = random_line_trigraph(rng, 3 + int(rng() % 10)); break;
            case 3: t = complement(random_line_trigraph(rng, 3 + int(rng() % 10))); break;
            default:
                t = random_doubled_trigraph(rng, 1 + int(rng() % 3), 1 + int(rng() % 3),
                                            int(rng() % 5));
                break;
        }
        auto rep = recognize_basic(t);
        REQUIRE(rep);
        auto r = alpha_basic(t, *rep);
        CHECK(r.value == alpha_bf(t, 17));
        CHECK(t.is_strong_stable_set(r.set));
        CHECK(t.weight_of(r.set) == r.value);
    }
}

TEST_CASE("alpha invariant under vertex relabeling") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 30; ++it) {
        Trigraph t = random_bipartite_trigraph(rng, 7);
        std::vector<int> perm(7);
        for (int i = 0; i < 7; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Trigraph p(7);
        for (int u = 0; u < 7; ++u) {
            p.w[perm[u]] = t.w[u];
            for (int v = u + 1; v < 7; ++v) p.set_theta(perm[u], perm[v], t.theta(u, v));
        }
        auto ra = recognize_basic(t), rb = recognize_basic(p);
        REQUIRE(ra);
        REQUIRE(rb);
        CHECK(alpha_basic(t, *ra).value == alpha_basic(p, *rb).value);
    }
}
