#pragma once

#include <random>

#include "perfect/trigraph.hpp"

namespace perfect::testutil {

inline Trigraph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                           const std::vector<std::pair<int, int>>& switchable = {}) {
    Trigraph t(n);
    for (auto [u, v] : edges) t.set_theta(u, v, kStrongEdge);
    for (auto [u, v] : switchable) t.set_theta(u, v, kSwitchable);
    return t;
}

inline Trigraph cycle(int n) {
    Trigraph t(n);
    for (int i = 0; i < n; ++i) t.set_theta(i, (i + 1) % n, kStrongEdge);
    return t;
}

inline Trigraph path_graph(int n) {
    Trigraph t(n);
    for (int i = 0; i + 1 < n; ++i) t.set_theta(i, i + 1, kStrongEdge);
    return t;
}

inline Trigraph complete(int n) {
    Trigraph t(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) t.set_theta(u, v, kStrongEdge);
    return t;
}

inline Trigraph complete_bipartite(int a, int b) {
    Trigraph t(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) t.set_theta(u, v, kStrongEdge);
    return t;
}

inline Trigraph petersen() {
    Trigraph t(10);
    for (int i = 0; i < 5; ++i) {
        t.set_theta(i, (i + 1) % 5, kStrongEdge);
        t.set_theta(i, i + 5, kStrongEdge);
        t.set_theta(5 + i, 5 + (i + 2) % 5, kStrongEdge);
    }
    return t;
}

// Uniformly random trigraph; sigma_prob of a pair being switchable.
inline Trigraph random_trigraph(std::mt19937_64& rng, int n, double edge_prob = 0.5,
                                double sigma_prob = 0.15, int max_weight = 5) {
    Trigraph t(n);
    std::uniform_real_distribution<double> real(0.0, 1.0);
    std::uniform_int_distribution<int> wdist(0, max_weight);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double x = real(rng);
            if (x < sigma_prob)
                t.set_theta(u, v, kSwitchable);
            else if (x < sigma_prob + (1.0 - sigma_prob) * edge_prob)
                t.set_theta(u, v, kStrongEdge);
        }
    for (int v = 0; v < n; ++v) t.w[v] = wdist(rng);
    return t;
}

// Random semirealization: each switchable pair stays, or becomes a strong
// edge or strong antiedge.
inline Trigraph random_semirealization(std::mt19937_64& rng, const Trigraph& t) {
    Trigraph r = t;
    std::uniform_int_distribution<int> pick(-1, 1);
    for (int u = 0; u < t.n; ++u)
        for (int v = u + 1; v < t.n; ++v)
            if (t.theta(u, v) == 0) r.set_theta(u, v, int8_t(pick(rng)));
    return r;
}

// Exact rank over the rationals of a small integer matrix, by fraction-free
// Gaussian elimination (entries stay below Hadamard's bound at test sizes).
inline int rational_rank(std::vector<std::vector<long long>> m) {
    int rows = int(m.size());
    if (rows == 0) return 0;
    int cols = int(m[0].size());
    int rank = 0;
    long long prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int cc = c + 1; cc < cols; ++cc)
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

} // namespace perfect::testutil
