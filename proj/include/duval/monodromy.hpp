#ifndef DUVAL_MONODROMY_HPP
#define DUVAL_MONODROMY_HPP

/*
 * Exhaustive braid-monodromy enumeration at a cusp of the branch curve.
 *
 * Near a cusp the complement of the branch curve has fundamental group
 * generated by two meridians a, b subject to the braid relation
 * aba = bab.  For a generic covering the ramification divisor is reduced,
 * so meridians act as involutions; the covering germ is connected, so the
 * two involutions generate a transitive subgroup of S_N.  This module
 * enumerates all such pairs for small N and groups them under simultaneous
 * conjugation: exactly the degree-2, degree-3 and degree-6 local models
 * survive, and no model exists in degrees 4, 5, 7, 8.
 */

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "duval/errors.hpp"

namespace duval {

/* A permutation of {0, .., n-1} stored as its image vector.  Composition
 * is right-to-left: (a * b)(i) = a(b(i)), i.e. b acts first. */
using Permutation = std::vector<int>;

inline Permutation perm_identity(int n) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

inline bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int img : p) {
        if (img < 0 || img >= static_cast<int>(p.size()) || seen[img])
            return false;
        seen[img] = true;
    }
    return true;
}

/* (a * b)(i) = a(b(i)): apply b first, then a. */
inline Permutation perm_compose(const Permutation& a, const Permutation& b) {
    check(a.size() == b.size(), "composing permutations of different degree");
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
}

inline Permutation perm_inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
    return out;
}

/* g p g^{-1}. */
inline Permutation perm_conjugate(const Permutation& p, const Permutation& g) {
    check(p.size() == g.size(), "conjugating by a permutation of different degree");
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[g[i]] = g[p[i]];
    return out;
}

inline bool is_identity(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

inline bool is_involution(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[p[i]] != static_cast<int>(i)) return false;
    return true;
}

inline bool is_fixed_point_free(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == static_cast<int>(i)) return false;
    return true;
}

/* Cycle lengths in decreasing order, fixed points included. */
inline std::vector<int> cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> type;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

/* One-based cycle notation, fixed points suppressed; "id" when trivial. */
inline std::string cycle_notation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) {
            seen[i] = true;
            continue;
        }
        out += "(";
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

/* The braid relation a b a = b a b, elementwise without temporaries. */
inline bool braid_relation_holds(const Permutation& a, const Permutation& b) {
    check(a.size() == b.size(), "braid relation needs equal degrees");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[b[a[i]]] != b[a[b[i]]]) return false;
    return true;
}

/* Whether <a, b> acts transitively on {0, .., n-1}. */
inline bool pair_transitive(const Permutation& a, const Permutation& b) {
    check(a.size() == b.size() && !a.empty(), "transitivity needs equal degrees");
    std::vector<bool> seen(a.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : {a[v], b[v]}) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == a.size();
}

/* All involutions of S_n, the identity excluded: an unbranched local
 * covering would contradict the base point lying on the branch curve. */
inline std::vector<Permutation> nontrivial_involutions(int n) {
    std::vector<Permutation> out;
    Permutation work(n, -1);
    auto rec = [&](auto&& self, int i) -> void {
        while (i < n && work[i] != -1) ++i;
        if (i == n) {
            if (!is_identity(work)) out.push_back(work);
            return;
        }
        work[i] = i; /* fixed point */
        self(self, i + 1);
        work[i] = -1;
        for (int j = i + 1; j < n; ++j) {
            if (work[j] != -1) continue;
            work[i] = j;
            work[j] = i;
            self(self, i + 1);
            work[i] = work[j] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/* A conjugacy class of admissible meridian pairs. */
struct MonodromyClass {
    int degree;
    std::string label;  /* "F2", "F3", "F6" or "Unexpected" */
    std::size_t size;   /* pairs in the class                */
    Permutation rep_a, rep_b; /* lexicographically least member */
};

namespace detail {

/* F2: degree 2.  F3: degree 3, meridians are transpositions with one
 * fixed point.  F6: degree 6, meridians fixed-point-free involutions.
 * Everything else would contradict the local classification. */
inline std::string classify_local_model(int n, const Permutation& a,
                                        const Permutation& b) {
    std::vector<int> two_one{2, 1}, three_twos{2, 2, 2};
    if (n == 2) return "F2";
    if (n == 3 && cycle_type(a) == two_one && cycle_type(b) == two_one)
        return "F3";
    if (n == 6 && cycle_type(a) == three_twos && cycle_type(b) == three_twos)
        return "F6";
    return "Unexpected";
}

} // namespace detail

/* Enumerates all pairs of non-identity involutions (a, b) in S_N with
 * a b a = b a b and <a, b> transitive, grouped into classes under
 * simultaneous conjugation.  Classes are sorted by their representative. */
inline std::vector<MonodromyClass> enumerate_cusp_monodromies(int n,
                                                              int cap = 8) {
    if (n > cap)
        throw degree_too_large("monodromy degree " + std::to_string(n) +
                               " exceeds the cap " + std::to_string(cap));
    if (n < 2)
        throw input_error("monodromy degree must be at least 2");

    std::vector<Permutation> invols = nontrivial_involutions(n);
    std::set<std::pair<Permutation, Permutation>> admissible;
    for (const auto& a : invols)
        for (const auto& b : invols)
            if (braid_relation_holds(a, b) && pair_transitive(a, b))
                admissible.insert({a, b});

    std::vector<MonodromyClass> classes;
    std::set<std::pair<Permutation, Permutation>> visited;
    for (const auto& pair : admissible) {
        if (visited.count(pair)) continue;
        /* Sweep the full conjugation orbit of this pair. */
        std::set<std::pair<Permutation, Permutation>> orbit;
        Permutation g = perm_identity(n);
        do {
            auto conj = std::make_pair(perm_conjugate(pair.first, g),
                                       perm_conjugate(pair.second, g));
            check(admissible.count(conj) != 0,
                  "conjugation must preserve admissibility");
            orbit.insert(std::move(conj));
        } while (std::next_permutation(g.begin(), g.end()));
        visited.insert(orbit.begin(), orbit.end());
        const auto& rep = *orbit.begin(); /* lexicographically least */
        classes.push_back(MonodromyClass{
            n, detail::classify_local_model(n, rep.first, rep.second),
            orbit.size(), rep.first, rep.second});
    }
    std::sort(classes.begin(), classes.end(),
              [](const MonodromyClass& x, const MonodromyClass& y) {
                  return std::tie(x.rep_a, x.rep_b) <
                         std::tie(y.rep_a, y.rep_b);
              });
    return classes;
}

} // namespace duval

#endif
