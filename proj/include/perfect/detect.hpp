#pragma once

#include <optional>
#include <string>

#include "trigraph.hpp"

namespace perfect {

struct ProperQuadruple {
    int a1, b1, a2, b2;
};

inline bool is_proper_quadruple(const Trigraph& t, const ProperQuadruple& z) {
    int v[4] = {z.a1, z.b1, z.a2, z.b2};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] == v[j]) return false;
    return t.theta(z.a1, z.a2) == 1 && t.theta(z.b1, z.b2) == 1 &&
           t.theta(z.a1, z.b2) == -1 && t.theta(z.b1, z.a2) == -1;
}

inline std::vector<ProperQuadruple> enumerate_quadruples(const Trigraph& t) {
    std::vector<ProperQuadruple> out;
    for (int a1 = 0; a1 < t.n; ++a1)
        for (int b1 = 0; b1 < t.n; ++b1)
            for (int a2 = 0; a2 < t.n; ++a2)
                for (int b2 = 0; b2 < t.n; ++b2) {
                    ProperQuadruple z{a1, b1, a2, b2};
                    if (is_proper_quadruple(t, z)) out.push_back(z);
                }
    return out;
}

enum class FragmentKind { two_join, complement_two_join, homogeneous_pair };

struct WeakFragmentSplit {
    VertexSet A1, B1, C1, D1, A2, B2, C2, D2;
    FragmentKind kind;

    VertexSet side() const {
        VertexSet x = A1;
        x.insert(x.end(), B1.begin(), B1.end());
        x.insert(x.end(), C1.begin(), C1.end());
        x.insert(x.end(), D1.begin(), D1.end());
        std::sort(x.begin(), x.end());
        return x;
    }
};

enum class ForcingState { unknown, two_join, complement_two_join };

// Result detail so callers can skip hopeless third seeds: an abort means no
// compatible fragment contains r0 at all, so larger seeds abort too.
enum class ForcingOutcome { fragment, aborted, side_too_small, rest_too_small, invalid };

struct ForcingResult {
    ForcingOutcome outcome = ForcingOutcome::aborted;
    std::optional<WeakFragmentSplit> split;
    Bits closure; // final R (valid also when too small)
    long long pair_reads = 0;
};

// Reusable buffers so a detection sweep does not allocate per forcing call.
struct ForcingScratch {
    Bits R, S, A, B, tmp, tmp2;
    std::vector<uint8_t> mark;
    std::vector<int> work;

    void resize(int n) {
        if (R.n != n) {
            R = Bits(n);
            S = Bits(n);
            A = Bits(n);
            B = Bits(n);
            tmp = Bits(n);
            tmp2 = Bits(n);
            mark.assign(n, 0);
        }
        work.clear();
    }
};

// The forcing procedure: grows R from r0 with the moves each rule makes
// necessary, and either aborts (no weak fragment compatible with z contains
// r0) or stops with R closed under all rules.  When the final R and its
// complement both have at least four vertices, R is a weak fragment
// compatible with z, minimal among all those containing r0.
inline ForcingResult forcing_run(const Trigraph& t, const TrigraphBits& tb,
                                 const ProperQuadruple& z, const VertexSet& r0,
                                 ForcingState state, ForcingScratch& sc) {
    const int n = t.n;
    ForcingResult res;
    assert(is_proper_quadruple(t, z));
    sc.resize(n);
    Bits& R = sc.R;
    Bits& S = sc.S;
    Bits& A = sc.A;
    Bits& B = sc.B;
    R.clear();
    for (int v : r0) R.set(v);
    assert(R.get(z.a1) && R.get(z.b1) && !R.get(z.a2) && !R.get(z.b2));
    S.set_all();
    S.subtract(R);
    A = tb.eta[z.a1];
    A &= S;
    B = tb.eta[z.b1];
    B &= S;
    long long reads = 0;

    // marks: 0 quadruple member, 1 alpha-beta, 2 alpha, 3 beta, 4 epsilon
    std::vector<uint8_t>& mark = sc.mark;
    std::fill(mark.begin(), mark.end(), uint8_t(4));
    tb.eta[z.a2].for_each([&](int v) { mark[v] = tb.eta[z.b2].get(v) ? 1 : 2; });
    tb.eta[z.b2].for_each([&](int v) {
        if (mark[v] == 4) mark[v] = 3;
    });
    mark[z.a1] = mark[z.b1] = mark[z.a2] = mark[z.b2] = 0;
    reads += 2 * n;

    std::vector<int>& work = sc.work;
    work.clear();
    R.for_each([&](int v) {
        if (mark[v] != 0) work.push_back(v);
    });

    bool dead = false;
    // moves sc.tmp & S into R
    auto move_tmp = [&]() {
        if (dead) return;
        Bits& y = sc.tmp;
        y &= S;
        reads += n;
        if (y.get(z.a2) || y.get(z.b2)) {
            dead = true;
            return;
        }
        y.for_each([&](int v) {
            R.set(v);
            if (mark[v] != 0) work.push_back(v);
        });
        S.subtract(y);
        A.subtract(y);
        B.subtract(y);
        reads += 3 * n;
    };
    auto move_set = [&](const Bits& y0) {
        sc.tmp = y0;
        move_tmp();
    };
    auto move_transition = [&](ForcingState st) {
        if (st == ForcingState::two_join) {
            sc.tmp = A;
            sc.tmp &= B;
        } else { // complement: S \ (A | B)
            sc.tmp2 = A;
            sc.tmp2 |= B;
            sc.tmp = S;
            sc.tmp.subtract(sc.tmp2);
        }
        move_tmp();
    };

    // A pre-set state performs the transition move up front.
    if (state != ForcingState::unknown) move_transition(state);
    move_set(tb.sigma[z.a1]);
    move_set(tb.sigma[z.b1]);

    while (!dead && !work.empty()) {
        int x = work.back();
        work.pop_back();
        uint8_t m = mark[x];
        reads += n;
        if (m == 1) {
            if (state == ForcingState::unknown) {
                state = ForcingState::complement_two_join;
                move_transition(state);
            }
            if (state == ForcingState::complement_two_join) move_set(tb.anti[x]);
            if (state == ForcingState::two_join) dead = true;
        } else if (m == 2) {
            sc.tmp = tb.eta[x];
            sc.tmp &= S;
            sc.tmp ^= A;
            move_tmp();
            move_set(tb.sigma[x]);
        } else if (m == 3) {
            sc.tmp = tb.eta[x];
            sc.tmp &= S;
            sc.tmp ^= B;
            move_tmp();
            move_set(tb.sigma[x]);
        } else if (m == 4) {
            if (state == ForcingState::unknown) {
                state = ForcingState::two_join;
                move_transition(state);
            }
            if (state == ForcingState::two_join) move_set(tb.nbr[x]);
            if (state == ForcingState::complement_two_join) dead = true;
        }
    }
    res.pair_reads = reads;
    res.closure = R;
    if (dead) {
        res.outcome = ForcingOutcome::aborted;
        return res;
    }
    if (R.count() < 4) {
        res.outcome = ForcingOutcome::side_too_small;
        return res;
    }
    if (S.count() < 4) {
        res.outcome = ForcingOutcome::rest_too_small;
        return res;
    }

    // R is closed: derive the split and validate the weak-fragment bullets.
    Bits A1 = R & andnot(tb.eta[z.a2], tb.eta[z.b2]);
    Bits B1 = R & andnot(tb.eta[z.b2], tb.eta[z.a2]);
    Bits D1 = R & tb.eta[z.a2] & tb.eta[z.b2];
    Bits C1 = andnot(andnot(R, tb.eta[z.a2]), tb.eta[z.b2]);
    Bits A2 = andnot(A, B), B2 = andnot(B, A), D2 = A & B;
    Bits C2 = andnot(S, A | B);

    WeakFragmentSplit w;
    w.A1 = A1.to_vector();
    w.B1 = B1.to_vector();
    w.C1 = C1.to_vector();
    w.D1 = D1.to_vector();
    w.A2 = A2.to_vector();
    w.B2 = B2.to_vector();
    w.C2 = C2.to_vector();
    w.D2 = D2.to_vector();

    bool hp = C1.none() && D1.none() && C2.any() && D2.any();
    bool tj = D1.none() && D2.none();
    bool ctj = C1.none() && C2.none();
    if (state == ForcingState::two_join && !tj) {
        res.outcome = ForcingOutcome::invalid;
        return res;
    }
    if (state == ForcingState::complement_two_join && !ctj) {
        res.outcome = ForcingOutcome::invalid;
        return res;
    }
    if (!hp && !tj && !ctj) {
        res.outcome = ForcingOutcome::invalid;
        return res;
    }
    if (state == ForcingState::two_join)
        w.kind = FragmentKind::two_join;
    else if (state == ForcingState::complement_two_join)
        w.kind = FragmentKind::complement_two_join;
    else
        w.kind = tj ? FragmentKind::two_join
                    : (ctj ? FragmentKind::complement_two_join : FragmentKind::homogeneous_pair);

    // Full bullet validation (the procedure guarantees it; keep it cheap and
    // reject rather than trust on out-of-contract inputs).
    bool ok = A1.get(z.a1) && B1.get(z.b1) && A2.get(z.a2) && B2.get(z.b2);
    Bits need_a = A2 | D2, need_b = B2 | D2, abd = A2 | B2 | D2, abc = A2 | B2 | C2;
    A1.for_each([&](int v) {
        if ((tb.eta[v] & S) == need_a && !(tb.sigma[v] & S).any()) return;
        ok = false;
    });
    B1.for_each([&](int v) {
        if ((tb.eta[v] & S) == need_b && !(tb.sigma[v] & S).any()) return;
        ok = false;
    });
    C1.for_each([&](int v) {
        if (!(tb.nbr[v] & abc).any() && !(tb.sigma[v] & S).any()) return;
        ok = false;
    });
    D1.for_each([&](int v) {
        if ((tb.eta[v] & abd) == abd && !(tb.sigma[v] & S).any()) return;
        ok = false;
    });
    reads += 4 * n;
    res.pair_reads = reads;
    if (!ok) {
        res.outcome = ForcingOutcome::invalid;
        return res;
    }
    res.outcome = ForcingOutcome::fragment;
    res.split = std::move(w);
    return res;
}

inline ForcingResult forcing_run(const Trigraph& t, const TrigraphBits& tb,
                                 const ProperQuadruple& z, const VertexSet& r0,
                                 ForcingState state = ForcingState::unknown) {
    ForcingScratch sc;
    return forcing_run(t, tb, z, r0, state, sc);
}

// Public entry per the operation contract: fragment or absent.
inline std::optional<WeakFragmentSplit> forcing(const Trigraph& t, const ProperQuadruple& z,
                                                const VertexSet& r0,
                                                ForcingState state = ForcingState::unknown) {
    TrigraphBits tb(t);
    auto res = forcing_run(t, tb, z, r0, state);
    return res.split;
}

// ---------------------------------------------------------------------------
// 2-join splits and their validation

struct TwoJoinSplit {
    VertexSet A1, B1, C1, A2, B2, C2;
    bool complemented = false;
    Parity parity = Parity::not_found;

    VertexSet side(int i) const {
        const VertexSet *a = i == 1 ? &A1 : &A2, *b = i == 1 ? &B1 : &B2,
                        *c = i == 1 ? &C1 : &C2;
        VertexSet x = *a;
        x.insert(x.end(), b->begin(), b->end());
        x.insert(x.end(), c->begin(), c->end());
        std::sort(x.begin(), x.end());
        return x;
    }
};

// Checks the 2-join definition plus properness; with require_class_invariants
// additionally the structural consequences that hold for class-F trigraphs
// with no balanced skew-partition (every split of a 2-join satisfies them).
inline std::vector<std::string> verify_2join(const Trigraph& t0, const TwoJoinSplit& s,
                                             bool require_class_invariants = false) {
    std::vector<std::string> bad;
    Trigraph tc;
    const Trigraph& t = s.complemented ? (tc = complement(t0)) : t0;
    int n = t.n;
    std::vector<int> where(n, -1); // 0..5 = A1,B1,C1,A2,B2,C2
    const VertexSet* sets[6] = {&s.A1, &s.B1, &s.C1, &s.A2, &s.B2, &s.C2};
    for (int i = 0; i < 6; ++i)
        for (int v : *sets[i]) {
            if (v < 0 || v >= n || where[v] != -1) {
                bad.push_back("sets are not disjoint subsets of V");
                return bad;
            }
            where[v] = i;
        }
    for (int v = 0; v < n; ++v)
        if (where[v] == -1) {
            bad.push_back("sets do not cover V");
            return bad;
        }
    if (s.A1.empty() || s.B1.empty() || s.A2.empty() || s.B2.empty())
        bad.push_back("A1, B1, A2, B2 must be non-empty");
    auto in_x1 = [&](int v) { return where[v] <= 2; };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (in_x1(u) == in_x1(v)) continue;
            int8_t th = t.theta(u, v);
            if (th == 0) {
                bad.push_back("switchable pair meets both X1 and X2");
                continue;
            }
            int wu = where[u] % 3, wv = where[v] % 3;
            bool should_edge = (wu == 0 && wv == 0) || (wu == 1 && wv == 1);
            if (should_edge && th != 1) bad.push_back("missing strong edge between A1/A2 or B1/B2");
            if (!should_edge && th == 1) bad.push_back("extra strong edge between the sides");
        }
    for (int i = 1; i <= 2; ++i) {
        VertexSet x = s.side(i);
        const VertexSet& a = i == 1 ? s.A1 : s.A2;
        const VertexSet& b = i == 1 ? s.B1 : s.B2;
        const VertexSet& c = i == 1 ? s.C1 : s.C2;
        if (int(x.size()) < 3) bad.push_back("|X_i| < 3");
        if (a.size() == 1 && b.size() == 1 && x.size() == 3) {
            int m = -1;
            for (int v : x)
                if (v != a[0] && v != b[0]) m = v;
            if (m != -1 && t.adjacent(a[0], m) && t.adjacent(m, b[0]) && !t.adjacent(a[0], b[0]))
                bad.push_back("side realizes a path of length two joining A_i and B_i");
        }
        // properness: every component of T|X_i meets both A_i and B_i
        Bits xi = Bits::from(n, x);
        Bits done(n);
        for (int sx : x) {
            if (done.get(sx)) continue;
            std::vector<int> comp{sx}, stack{sx};
            done.set(sx);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : x)
                    if (!done.get(v) && t.adjacent(u, v)) {
                        done.set(v);
                        stack.push_back(v);
                        comp.push_back(v);
                    }
            }
            bool hits_a = false, hits_b = false;
            for (int v : comp) {
                if (where[v] % 3 == 0) hits_a = true;
                if (where[v] % 3 == 1) hits_b = true;
            }
            if (!hits_a || !hits_b) bad.push_back("2-join is not proper");
        }
        if (require_class_invariants) {
            if (int(x.size()) < 4) bad.push_back("|X_i| < 4");
            if (c.empty() && (a.size() < 2 || b.size() < 2))
                bad.push_back("C_i empty but |A_i| or |B_i| < 2");
            for (int v : x) {
                bool nb = false;
                for (int u : x)
                    if (u != v && t.adjacent(u, v)) nb = true;
                if (!nb) bad.push_back("vertex of X_i with no neighbor in X_i");
            }
            for (int v : a) {
                bool anti = false, nb = false;
                for (int u : b)
                    if (t.antiadjacent(v, u)) anti = true;
                for (int u : b)
                    if (t.adjacent(v, u)) nb = true;
                for (int u : c)
                    if (t.adjacent(v, u)) nb = true;
                if (!anti) bad.push_back("A_i vertex with no antineighbor in B_i");
                if (!nb) bad.push_back("A_i vertex with no neighbor in B_i or C_i");
            }
            for (int v : b) {
                bool anti = false, nb = false;
                for (int u : a)
                    if (t.antiadjacent(v, u)) anti = true;
                for (int u : a)
                    if (t.adjacent(v, u)) nb = true;
                for (int u : c)
                    if (t.adjacent(v, u)) nb = true;
                if (!anti) bad.push_back("B_i vertex with no antineighbor in A_i");
                if (!nb) bad.push_back("B_i vertex with no neighbor in A_i or C_i");
            }
        }
    }
    return bad;
}

namespace detail {

// Attach parity; both sides must agree (they do on Berge trigraphs).
inline bool assign_parity(const Trigraph& t0, TwoJoinSplit& s) {
    const Trigraph t = s.complemented ? complement(t0) : t0;
    Parity p1 = find_path_parity(t, s.A1, s.B1, s.C1);
    Parity p2 = find_path_parity(t, s.A2, s.B2, s.C2);
    if (p1 == Parity::not_found || p1 != p2) return false;
    s.parity = p1;
    return true;
}

inline std::optional<TwoJoinSplit> weak_to_two_join(const Trigraph& t, const WeakFragmentSplit& w,
                                                    bool complemented,
                                                    bool require_class_invariants) {
    if (!w.D1.empty() || !w.D2.empty()) return std::nullopt;
    TwoJoinSplit s;
    s.A1 = w.A1;
    s.B1 = w.B1;
    s.C1 = w.C1;
    s.A2 = w.A2;
    s.B2 = w.B2;
    s.C2 = w.C2;
    s.complemented = complemented;
    // verify_2join complements internally; the split sets are already in the
    // complement's terms when `complemented` is set, so verify against the
    // trigraph the caller searched.
    if (!verify_2join(t, s, require_class_invariants).empty()) return std::nullopt;
    if (!assign_parity(t, s)) return std::nullopt;
    return s;
}

// Core search shared by the plain and complement detectors: enumerate proper
// 4-tuples lexicographically and run the forcing with the 2-join state
// pre-set on {a1,b1}; third seeds {a1,b1,u} (needed only for the degenerate
// sides) run as a second pass when the whole first pass found nothing.
// `host` is the trigraph the splits should be reported against.
inline std::optional<TwoJoinSplit> find_2join_in(const Trigraph& host, const Trigraph& t,
                                                 bool complemented,
                                                 bool require_class_invariants) {
    TrigraphBits tb(t);
    ForcingScratch sc;
    int n = t.n;
    if (n < 6) return std::nullopt;
    std::vector<ProperQuadruple> second_pass;
    for (int a1 = 0; a1 < n; ++a1)
        for (int b1 = 0; b1 < n; ++b1) {
            if (b1 == a1) continue;
            Bits a2c = tb.eta[a1] & tb.nu[b1];
            Bits b2c = tb.eta[b1] & tb.nu[a1];
            if (!a2c.any() || !b2c.any()) continue;
            std::vector<int> a2s = a2c.to_vector(), b2s = b2c.to_vector();
            for (int a2 : a2s)
                for (int b2 : b2s) {
                    if (b2 == a2) continue;
                    ProperQuadruple z{a1, b1, a2, b2};
                    auto base = forcing_run(t, tb, z, {a1, b1}, ForcingState::two_join, sc);
                    if (base.outcome == ForcingOutcome::fragment)
                        if (auto s = weak_to_two_join(host, *base.split, complemented,
                                                      require_class_invariants))
                            return s;
                    // An abort means no compatible fragment contains {a1,b1}
                    // at all; a too-small rest only shrinks further.
                    if (base.outcome != ForcingOutcome::aborted &&
                        base.outcome != ForcingOutcome::rest_too_small)
                        second_pass.push_back(z);
                }
        }
    for (const ProperQuadruple& z : second_pass) {
        auto base = forcing_run(t, tb, z, {z.a1, z.b1}, ForcingState::two_join, sc);
        Bits closure = base.closure;
        for (int u = 0; u < n; ++u) {
            if (u == z.a1 || u == z.b1 || u == z.a2 || u == z.b2) continue;
            if (closure.get(u)) continue; // same closure again
            auto res = forcing_run(t, tb, z, {z.a1, z.b1, u}, ForcingState::two_join, sc);
            if (res.outcome == ForcingOutcome::fragment)
                if (auto s = weak_to_two_join(host, *res.split, complemented,
                                              require_class_invariants))
                    return s;
        }
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<TwoJoinSplit> find_proper_2join(const Trigraph& t,
                                                     bool require_class_invariants = false) {
    return detail::find_2join_in(t, t, false, require_class_invariants);
}

inline std::optional<TwoJoinSplit> find_proper_complement_2join(const Trigraph& t,
                                                                bool require_class_invariants = false) {
    return detail::find_2join_in(t, complement(t), true, require_class_invariants);
}

// ---------------------------------------------------------------------------
// Homogeneous pairs

struct HomogeneousPairSplit {
    VertexSet A, B, C, D, E, F; // C = A-complete/B-anticomplete, D mirrored,
                                // E = complete to both, F anticomplete to both

    VertexSet side() const {
        VertexSet x = A;
        x.insert(x.end(), B.begin(), B.end());
        std::sort(x.begin(), x.end());
        return x;
    }
};

inline std::vector<std::string> verify_homogeneous_pair(const Trigraph& t,
                                                        const HomogeneousPairSplit& s) {
    std::vector<std::string> bad;
    if (s.A.size() < 2 || s.B.size() < 2) bad.push_back("|A| or |B| < 2");
    if (s.C.empty() || s.D.empty() || s.E.empty() || s.F.empty())
        bad.push_back("one of the four outside regions is empty");
    Bits a = Bits::from(t.n, s.A), b = Bits::from(t.n, s.B);
    Bits rest(t.n);
    rest.set_all();
    rest.subtract(a);
    rest.subtract(b);
    auto classify = [&](int v, const VertexSet& side) {
        int plus = 0, minus = 0;
        for (int u : side) {
            if (t.theta(u, v) == 1) ++plus;
            if (t.theta(u, v) == -1) ++minus;
        }
        if (plus == int(side.size())) return +1;
        if (minus == int(side.size())) return -1;
        return 0;
    };
    rest.for_each([&](int v) {
        int ca = classify(v, s.A), cb = classify(v, s.B);
        if (ca == 0 || cb == 0) {
            bad.push_back("outside vertex neither strongly complete nor anticomplete");
            return;
        }
        const VertexSet& expect = ca == 1 ? (cb == 1 ? s.E : s.C) : (cb == 1 ? s.D : s.F);
        if (std::find(expect.begin(), expect.end(), v) == expect.end())
            bad.push_back("outside vertex in the wrong region");
    });
    // every A vertex mixed on B and vice versa
    for (int v : s.A)
        if (classify(v, s.B) != 0) bad.push_back("A vertex not mixed on B");
    for (int v : s.B)
        if (classify(v, s.A) != 0) bad.push_back("B vertex not mixed on A");
    return bad;
}

// Forcing analogue for weak homogeneous pairs: grow (A,B) from the seed;
// every vertex not strongly classifiable against the current pair must join,
// on the side its relation to a2 dictates.  Minimal for the same reason as
// the 2-join forcing: every move is necessary.
inline std::optional<HomogeneousPairSplit> forcing_homogeneous(const Trigraph& t, int a1, int b1,
                                                               int a2, const VertexSet& r0) {
    int n = t.n;
    if (t.theta(a1, a2) != 1 || t.theta(b1, a2) != -1) return std::nullopt;
    std::vector<int> side(n, 0); // 0 outside, 1 = A, 2 = B
    std::vector<int> queue;
    auto assign = [&](int v) -> bool {
        if (v == a2) return false;
        int8_t th = t.theta(a2, v);
        if (th == 0) return false;
        side[v] = th == 1 ? 1 : 2;
        queue.push_back(v);
        return true;
    };
    for (int v : r0) {
        if (v == a2) return std::nullopt;
        if (side[v] == 0 && !assign(v)) return std::nullopt;
    }
    if (side[a1] != 1 || side[b1] != 2) return std::nullopt;
    // fixpoint: outside vertices mixed on A or on B must join
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (side[v] != 0 || v == a2) continue;
            for (int s = 1; s <= 2 && side[v] == 0; ++s) {
                bool some_nonedge = false, some_nonanti = false;
                for (int u = 0; u < n; ++u) {
                    if (side[u] != s || u == v) continue;
                    if (t.theta(u, v) != 1) some_nonedge = true;
                    if (t.theta(u, v) != -1) some_nonanti = true;
                }
                if (some_nonedge && some_nonanti) {
                    if (!assign(v)) return std::nullopt;
                    changed = true;
                }
            }
        }
        // a2 itself must stay strongly classifiable (it is by construction:
        // strongly complete to A, strongly anticomplete to B).
        for (int u = 0; u < n; ++u)
            if (side[u] != 0 && t.theta(a2, u) == 0) return std::nullopt;
    }
    HomogeneousPairSplit s;
    for (int v = 0; v < n; ++v) {
        if (side[v] == 1) s.A.push_back(v);
        if (side[v] == 2) s.B.push_back(v);
    }
    if (s.A.size() + s.B.size() < 3) return std::nullopt;
    if (s.A.size() < 2 || s.B.size() < 2) return std::nullopt; // not promoted to proper
    if (int(s.A.size() + s.B.size()) > n - 1) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        if (side[v] != 0) continue;
        int plus_a = 0, minus_a = 0, plus_b = 0, minus_b = 0;
        for (int u : s.A) {
            if (t.theta(u, v) == 1) ++plus_a;
            if (t.theta(u, v) == -1) ++minus_a;
        }
        for (int u : s.B) {
            if (t.theta(u, v) == 1) ++plus_b;
            if (t.theta(u, v) == -1) ++minus_b;
        }
        bool ca = plus_a == int(s.A.size()), aa = minus_a == int(s.A.size());
        bool cb = plus_b == int(s.B.size()), ab = minus_b == int(s.B.size());
        if ((!ca && !aa) || (!cb && !ab)) return std::nullopt;
        if (ca && cb)
            s.E.push_back(v);
        else if (ca)
            s.C.push_back(v);
        else if (cb)
            s.D.push_back(v);
        else
            s.F.push_back(v);
    }
    if (!verify_homogeneous_pair(t, s).empty()) return std::nullopt;
    return s;
}

// ---------------------------------------------------------------------------
// Ends

struct EndResult {
    FragmentKind kind;
    VertexSet fragment;
    std::optional<TwoJoinSplit> two_join;
    std::optional<HomogeneousPairSplit> homogeneous;
};

// Minimum-cardinality proper fragment over the three kind-specific searches
// (2-join, complement 2-join, homogeneous pair), each run over all proper
// seeds with all third seeds.
inline std::optional<EndResult> find_end_fragment(const Trigraph& t) {
    int n = t.n;
    std::optional<EndResult> best;
    auto consider = [&](EndResult r) {
        if (!best || r.fragment.size() < best->fragment.size()) best = std::move(r);
    };
    auto sweep_2join = [&](const Trigraph& g, bool complemented) {
        TrigraphBits tb(g);
        ForcingScratch sc;
        for (int a1 = 0; a1 < n; ++a1)
            for (int b1 = 0; b1 < n; ++b1) {
                if (b1 == a1) continue;
                Bits a2c = tb.eta[a1] & tb.nu[b1];
                Bits b2c = tb.eta[b1] & tb.nu[a1];
                if (!a2c.any() || !b2c.any()) continue;
                for (int a2 : a2c.to_vector())
                    for (int b2 : b2c.to_vector()) {
                        if (b2 == a2) continue;
                        ProperQuadruple z{a1, b1, a2, b2};
                        auto handle = [&](const ForcingResult& fr) {
                            if (fr.outcome != ForcingOutcome::fragment) return;
                            if (best && fr.split->side().size() >= best->fragment.size()) return;
                            if (auto s = detail::weak_to_two_join(t, *fr.split, complemented, false)) {
                                EndResult r;
                                r.kind = complemented ? FragmentKind::complement_two_join
                                                      : FragmentKind::two_join;
                                r.fragment = s->side(1);
                                r.two_join = std::move(s);
                                consider(std::move(r));
                            }
                        };
                        auto base = forcing_run(g, tb, z, {a1, b1}, ForcingState::two_join, sc);
                        Bits closure = base.closure;
                        handle(base);
                        if (base.outcome == ForcingOutcome::aborted ||
                            base.outcome == ForcingOutcome::rest_too_small)
                            continue;
                        for (int u = 0; u < n; ++u) {
                            if (u == a1 || u == b1 || u == a2 || u == b2) continue;
                            if (closure.get(u)) continue;
                            handle(forcing_run(g, tb, z, {a1, b1, u}, ForcingState::two_join, sc));
                        }
                    }
            }
    };
    if (n >= 8) {
        sweep_2join(t, false);
        sweep_2join(complement(t), true);
        for (int a1 = 0; a1 < n; ++a1)
            for (int b1 = 0; b1 < n; ++b1) {
                if (b1 == a1) continue;
                for (int a2 = 0; a2 < n; ++a2) {
                    if (a2 == a1 || a2 == b1) continue;
                    if (t.theta(a1, a2) != 1 || t.theta(b1, a2) != -1) continue;
                    auto handle = [&](std::optional<HomogeneousPairSplit> s) {
                        if (!s) return;
                        EndResult r;
                        r.kind = FragmentKind::homogeneous_pair;
                        r.fragment = s->side();
                        r.homogeneous = std::move(s);
                        consider(std::move(r));
                    };
                    handle(forcing_homogeneous(t, a1, b1, a2, {a1, b1}));
                    for (int u = 0; u < n; ++u) {
                        if (u == a1 || u == b1 || u == a2) continue;
                        handle(forcing_homogeneous(t, a1, b1, a2, {a1, b1, u}));
                    }
                }
            }
    }
    return best;
}

} // namespace perfect
