#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfect/color.hpp"
#include "perfect/generator.hpp"
#include "perfect/oracle.hpp"
#include "util.hpp"

using namespace perfect;
using namespace perfect::testutil;

namespace {

bool proper_coloring(const Trigraph& g, const std::vector<int>& color_of) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adjacent(u, v) && color_of[u] == color_of[v]) return false;
    for (int v = 0; v < g.n; ++v)
        if (color_of[v] < 0) return false;
    return true;
}

} // namespace

TEST_CASE("omega_and_max_clique") {
    Trigraph k4 = complete(4);
    std::vector<Weight> unit(4, 1);
    auto r = omega_and_max_clique(k4, unit);
    REQUIRE(r.ok);
    CHECK(r.weight == 4);
    CHECK(k4.is_strong_clique(r.clique));

    Trigraph c4 = cycle(4);
    r = omega_and_max_clique(c4, {1, 1, 1, 1});
    REQUIRE(r.ok);
    CHECK(r.weight == 2);

    Trigraph c6 = cycle(6);
    r = omega_and_max_clique(c6, {3, 1, 1, 1, 1, 1});
    REQUIRE(r.ok);
    CHECK(r.weight == 4);
}

TEST_CASE("stable_hitting_cliques") {
    Trigraph c4 = cycle(4);
    CliqueList ks;
    ks.cliques = {{0, 1}, {2, 3}};
    auto r = stable_hitting_cliques(c4, ks);
    REQUIRE(r.ok);
    CHECK(r.y_weight == 2);

    Trigraph k4 = complete(4);
    ks.cliques = {{0, 1, 2, 3}};
    r = stable_hitting_cliques(k4, ks);
    REQUIRE(r.ok);
    CHECK(r.y_weight == 1);

    Trigraph c6 = cycle(6);
    ks.cliques = {{0, 1}, {2, 3}, {4, 5}};
    r = stable_hitting_cliques(c6, ks);
    REQUIRE(r.ok);
    CHECK(r.y_weight == 3);
}

TEST_CASE("color small graphs") {
    auto out = color(complete(4));
    REQUIRE(std::holds_alternative<ColoringResult>(out));
    CHECK(std::get<ColoringResult>(out).num_colors == 4);

    out = color(cycle(6));
    REQUIRE(std::holds_alternative<ColoringResult>(out));
    auto& c6res = std::get<ColoringResult>(out);
    CHECK(c6res.num_colors == 2);
    CHECK(proper_coloring(cycle(6), c6res.color_of));

    out = color(cycle(8));
    CHECK(std::get<ColoringResult>(out).num_colors == 2);

    out = color(complete_bipartite(3, 4));
    CHECK(std::get<ColoringResult>(out).num_colors == 2);

    out = color(complement(cycle(6)));
    CHECK(std::get<ColoringResult>(out).num_colors == 3);

    // Petersen: never a valid coloring claim
    auto pout = color(petersen());
    CHECK(!std::holds_alternative<ColoringResult>(pout));
}

TEST_CASE("coloring matches chi on corpus graphs, with the iteration bound") {
    int colored = 0;
    for (uint64_t seed = 200; seed <= 260; ++seed) {
        Trigraph t = generate({seed, 11, 1, "mixed"});
        if (!t.is_graph() || t.n > 13) continue;
        for (int v = 0; v < t.n; ++v) t.w[v] = 1;
        auto out = color(t);
        if (!std::holds_alternative<ColoringResult>(out)) continue;
        ++colored;
        const auto& res = std::get<ColoringResult>(out);
        CHECK(proper_coloring(t, res.color_of));
        CHECK(res.num_colors == chi_bf(t));
        CHECK(res.num_colors == omega_bf(t));
        // iteration bound and full row rank of every clique list
        for (const auto& ks : res.cliques_per_class) {
            CHECK(int(ks.cliques.size()) <= t.n);
            if (ks.cliques.empty()) continue;
            std::vector<std::vector<long long>> m;
            for (const auto& k : ks.cliques) {
                std::vector<long long> row(t.n, 0);
                for (int v : k) row[v] = 1;
                m.push_back(row);
            }
            CHECK(rational_rank(m) == int(ks.cliques.size()));
        }
    }
    CHECK(colored >= 20);
}

TEST_CASE("robust_solve") {
    // C6: stable set of 3 plus 3 cliques covering
    auto out = robust_solve(cycle(6));
    REQUIRE(std::holds_alternative<RobustPair>(out));
    auto& pair = std::get<RobustPair>(out);
    CHECK(pair.stable_set.size() == 3);
    CHECK(pair.cliques.size() == 3);

    // duality: each cover clique contains exactly one stable-set vertex
    Bits inset = Bits::from(6, pair.stable_set);
    for (const auto& k : pair.cliques) {
        int hits = 0;
        for (int v : k)
            if (inset.get(v)) ++hits;
        CHECK(hits == 1);
    }

    out = robust_solve(complete(4));
    REQUIRE(std::holds_alternative<RobustPair>(out));
    CHECK(std::get<RobustPair>(out).stable_set.size() == 1);
    CHECK(std::get<RobustPair>(out).cliques.size() == 1);

    // C5: certificate (alpha = 2 but any clique cover needs 3)
    auto c5out = robust_solve(cycle(5));
    CHECK(!std::holds_alternative<RobustPair>(c5out));

    auto pout = robust_solve(petersen());
    CHECK(!std::holds_alternative<RobustPair>(pout));
}

TEST_CASE("robust pairs on corpus graphs") {
    for (uint64_t seed = 300; seed <= 330; ++seed) {
        Trigraph t = generate({seed, 10, 1, "chain"});
        if (!t.is_graph() || t.n > 12) continue;
        auto out = robust_solve(t);
        if (const auto* pair = std::get_if<RobustPair>(&out)) {
            CHECK(Weight(pair->stable_set.size()) == [&] {
                Trigraph u = t;
                for (int v = 0; v < t.n; ++v) u.w[v] = 1;
                return alpha_bf(u);
            }());
            CHECK(pair->cliques.size() == pair->stable_set.size());
            // cover partitions V into cliques
            std::vector<int> seen(t.n, 0);
            for (const auto& k : pair->cliques) {
                CHECK(complement(t).is_strong_stable_set(k));
                for (int v : k) seen[v]++;
            }
            for (int v = 0; v < t.n; ++v) CHECK(seen[v] == 1);
        }
    }
}
