#ifndef DUVAL_COVER_HPP
#define DUVAL_COVER_HPP

/*
 * Double cover of the resolved arrangement, canonical cycle, contraction to
 * the minimal resolution, Dynkin classification and the local defect.
 *
 * Input: an Arrangement whose branch divisor (strict germ transform plus the
 * odd-multiplicity exceptional curves) is smooth and disjoint.  The double
 * cover branched over that divisor is smooth; over each exceptional curve E
 * of the base it contains:
 *   - one curve Lbar with Lbar^2 = E^2 / 2, when E has odd multiplicity
 *     (E lies in the branch divisor);
 *   - one curve L with L^2 = 2 E^2, when E has even multiplicity and meets
 *     the branch divisor in k >= 2 points (the preimage is connected);
 *   - a disjoint pair L', L'' with L'^2 = L''^2 = E^2, when E has even
 *     multiplicity and k = 0 (the cover splits over E).
 * The canonical cycle Z has coefficient alpha on Lbar and alpha/2 on each
 * even-curve preimage; it is re-derived independently by solving M z = -r,
 * where r records the intersections with the preimage of the strict germ
 * transform, and the two results are required to agree.
 */

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "duval/ade.hpp"
#include "duval/matrix.hpp"
#include "duval/resolution.hpp"

namespace duval {

enum class SheetType { branch, even_single, even_split };

struct CoverVertex {
    int down_id;    /* downstairs exceptional curve id */
    int member;     /* 0; or 0/1 for the two members of a split pair */
    SheetType type;
    BigInt self;
    BigInt coeff;   /* canonical-cycle coefficient from the covering formula */
    std::string label;
};

struct CoverGraph {
    std::vector<CoverVertex> verts;
    IntMatrix m;            /* full intersection matrix */
    std::vector<BigInt> r;  /* intersections with the ramification transform */
    std::vector<BigInt> z;  /* canonical cycle, verified against the solver */
};

struct MinimalModel {
    std::vector<CoverVertex> verts; /* surviving curves, self = -2 */
    IntMatrix m;
    std::vector<BigInt> r;
    std::vector<BigInt> z;
    std::vector<BigInt> rz_trace;   /* R.Z after the initial graph and each contraction */
    int contractions = 0;
};

namespace detail {

inline void require_disjoint_branch(const Arrangement& arr) {
    if (arr.branch_nodes != 0)
        throw branch_not_disjoint("the strict germ transform still has a node");
    for (const auto& c : arr.curves) {
        if (!arr.is_odd(c.id)) continue;
        if (arr.bbar_of(c.id) != 0)
            throw branch_not_disjoint(
                "an odd-multiplicity curve still meets the strict germ transform");
        for (const auto& d : arr.curves)
            if (d.id > c.id && arr.is_odd(d.id) && arr.edge(c.id, d.id) != 0)
                throw branch_not_disjoint(
                    "two odd-multiplicity curves still intersect");
    }
}

/* number of branch-divisor points on an even-multiplicity curve */
inline BigInt branch_point_count(const Arrangement& arr, int id) {
    BigInt k = arr.bbar_of(id);
    for (const auto& d : arr.curves)
        if (d.id != id && arr.is_odd(d.id)) k += arr.edge(id, d.id);
    return k;
}

} // namespace detail

/* ------------------------------------------------------------------ */
/* Dynkin classification of a configuration of (-2)-curves.            */
/* ------------------------------------------------------------------ */

inline AdeType classify_dynkin(const IntMatrix& m) {
    const int n = m.rows();
    check(n >= 1 && m.is_square(), "classify_dynkin needs a square matrix");
    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) != -2)
            throw not_dynkin("a curve of the minimal graph is not a (-2)-curve");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m.at(i, j) != 0 && m.at(i, j) != 1)
                throw not_dynkin("the minimal graph has a multiple edge");
        }
    }
    if (!is_negative_definite(m))
        throw not_dynkin("the minimal graph is not negative definite");

    /* connectivity and degrees */
    std::vector<int> deg(n, 0);
    int edge_count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) == 1) {
                ++deg[i];
                ++deg[j];
                ++edge_count;
            }
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j)
            if (j != v && m.at(v, j) == 1 && !seen[j]) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
    }
    if (reached != n) throw not_dynkin("the minimal graph is not connected");
    if (edge_count != n - 1) throw not_dynkin("the minimal graph contains a cycle");

    int branch_vertex = -1;
    for (int i = 0; i < n; ++i) {
        if (deg[i] > 3) throw not_dynkin("a vertex of the minimal graph has degree > 3");
        if (deg[i] == 3) {
            if (branch_vertex >= 0)
                throw not_dynkin("the minimal graph has two branch vertices");
            branch_vertex = i;
        }
    }
    if (branch_vertex < 0) return AdeType{AdeSeries::A, n};

    /* star with three legs: measure leg lengths */
    std::vector<int> legs;
    for (int j = 0; j < n; ++j) {
        if (j == branch_vertex || m.at(branch_vertex, j) != 1) continue;
        int len = 1, prev = branch_vertex, cur = j;
        for (;;) {
            int next = -1;
            for (int k = 0; k < n; ++k)
                if (k != prev && k != cur && m.at(cur, k) == 1) {
                    check(next == -1, "unexpected branching in a leg");
                    next = k;
                }
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        legs.push_back(len);
    }
    check(legs.size() == 3, "branch vertex degree mismatch");
    std::sort(legs.begin(), legs.end());
    check(legs[0] + legs[1] + legs[2] == n - 1, "leg lengths do not cover the graph");
    if (legs[0] == 1 && legs[1] == 1) return AdeType{AdeSeries::D, legs[2] + 3};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
        return AdeType{AdeSeries::E, legs[2] + 4};
    throw not_dynkin("the minimal graph is not of type A, D or E");
}

/* ------------------------------------------------------------------ */
/* Contraction of (-1)-curves down to the minimal resolution.          */
/* ------------------------------------------------------------------ */

inline MinimalModel contract_to_minimal(const CoverGraph& g) {
    MinimalModel mm;
    mm.verts = g.verts;
    mm.m = g.m;
    mm.r = g.r;
    mm.z = g.z;

    auto rz = [&]() {
        BigInt s(0);
        for (std::size_t i = 0; i < mm.r.size(); ++i) s += mm.r[i] * mm.z[i];
        return s;
    };
    auto assert_cycle_equation = [&]() {
        const int n = mm.m.rows();
        for (int i = 0; i < n; ++i) {
            BigInt s(0);
            for (int j = 0; j < n; ++j) s += mm.m.at(i, j) * mm.z[static_cast<std::size_t>(j)];
            check(s == -mm.r[static_cast<std::size_t>(i)],
                  "canonical cycle equation failed");
        }
    };

    assert_cycle_equation();
    mm.rz_trace.push_back(rz());

    for (;;) {
        int e = -1;
        const int n = mm.m.rows();
        for (int i = 0; i < n; ++i)
            if (mm.m.at(i, i) == -1) {
                e = i;
                break;
            }
        if (e < 0) break;

        /* contract vertex e */
        BigInt rz_before = rz();
        IntMatrix m2(n - 1, n - 1);
        std::vector<BigInt> r2, z2;
        std::vector<CoverVertex> v2;
        auto old_of = [&](int i) { return i < e ? i : i + 1; };
        for (int i = 0; i + 1 < n; ++i) {
            int oi = old_of(i);
            for (int j = 0; j + 1 < n; ++j) {
                int oj = old_of(j);
                m2.at(i, j) = mm.m.at(oi, oj) + mm.m.at(oi, e) * mm.m.at(oj, e);
            }
            r2.push_back(mm.r[static_cast<std::size_t>(oi)] +
                         mm.r[static_cast<std::size_t>(e)] * mm.m.at(oi, e));
            z2.push_back(mm.z[static_cast<std::size_t>(oi)]);
            v2.push_back(mm.verts[static_cast<std::size_t>(oi)]);
            v2.back().self = m2.at(i, i);
        }
        BigInt re = mm.r[static_cast<std::size_t>(e)];
        mm.m = std::move(m2);
        mm.r = std::move(r2);
        mm.z = std::move(z2);
        mm.verts = std::move(v2);
        ++mm.contractions;

        /* R.Z drops by exactly (R.E)^2 at each contraction */
        BigInt rz_after = rz();
        check(rz_after == rz_before - re * re, "ramification pairing update failed");
        check(rz_after <= rz_before, "ramification pairing increased");
        assert_cycle_equation();
    }

    for (std::size_t i = 0; i < mm.z.size(); ++i)
        check(mm.z[i] > 0, "canonical cycle must be positive on the minimal graph");
    return mm;
}

/* ------------------------------------------------------------------ */
/* Double cover construction.                                          */
/* ------------------------------------------------------------------ */

namespace detail {

struct SplitCrossing {
    int va0, va1; /* vertex indices of the two members over curve a */
    int vb0, vb1;
};

inline bool dynkin_valid(const CoverGraph& g) {
    try {
        MinimalModel mm = contract_to_minimal(g);
        classify_dynkin(mm.m);
        return true;
    } catch (const not_dynkin&) {
        return false;
    } catch (const singular_matrix&) {
        return false;
    }
}

} // namespace detail

inline CoverGraph build_double_cover(const Arrangement& arr) {
    detail::require_disjoint_branch(arr);

    CoverGraph g;
    std::vector<std::vector<int>> verts_of(arr.curves.size() + 1);
    for (const auto& c : arr.curves) {
        if (arr.is_odd(c.id)) {
            if (c.self_int % 2 != 0)
                throw odd_self_intersection(
                    "a branch-divisor curve has odd self-intersection");
            verts_of[static_cast<std::size_t>(c.id)].push_back(
                static_cast<int>(g.verts.size()));
            g.verts.push_back({c.id, 0, SheetType::branch, c.self_int / 2, c.alpha,
                               "Lbar(E" + std::to_string(c.id) + ")"});
        } else {
            BigInt k = detail::branch_point_count(arr, c.id);
            check(k % 2 == 0, "even-multiplicity curve meets the branch divisor "
                              "in an odd number of points");
            check(c.alpha % 2 == 0, "parity bookkeeping failed");
            if (k >= 2) {
                verts_of[static_cast<std::size_t>(c.id)].push_back(
                    static_cast<int>(g.verts.size()));
                g.verts.push_back({c.id, 0, SheetType::even_single, 2 * c.self_int,
                                   c.alpha / 2, "L(E" + std::to_string(c.id) + ")"});
            } else {
                verts_of[static_cast<std::size_t>(c.id)].push_back(
                    static_cast<int>(g.verts.size()));
                g.verts.push_back({c.id, 0, SheetType::even_split, c.self_int,
                                   c.alpha / 2, "L'(E" + std::to_string(c.id) + ")"});
                verts_of[static_cast<std::size_t>(c.id)].push_back(
                    static_cast<int>(g.verts.size()));
                g.verts.push_back({c.id, 1, SheetType::even_split, c.self_int,
                                   c.alpha / 2, "L''(E" + std::to_string(c.id) + ")"});
            }
        }
    }

    const int n = static_cast<int>(g.verts.size());
    g.m = IntMatrix(n, n);
    for (int i = 0; i < n; ++i) g.m.at(i, i) = g.verts[static_cast<std::size_t>(i)].self;
    g.r.assign(static_cast<std::size_t>(n), BigInt(0));
    for (const auto& [id, cnt] : arr.bbar) {
        const auto& vs = verts_of[static_cast<std::size_t>(id)];
        check(vs.size() == 1, "branch count on a split curve");
        const CoverVertex& v = g.verts[static_cast<std::size_t>(vs[0])];
        check(v.type == SheetType::even_single,
              "residual branch crossing on a non-even curve");
        g.r[static_cast<std::size_t>(vs[0])] = cnt;
    }

    std::vector<detail::SplitCrossing> ambiguous;
    for (const auto& [key, cnt] : arr.edges) {
        const auto& va = verts_of[static_cast<std::size_t>(key.first)];
        const auto& vb = verts_of[static_cast<std::size_t>(key.second)];
        SheetType ta = g.verts[static_cast<std::size_t>(va[0])].type;
        SheetType tb = g.verts[static_cast<std::size_t>(vb[0])].type;
        auto add = [&](int i, int j, const BigInt& d) {
            g.m.at(i, j) += d;
            g.m.at(j, i) += d;
        };
        if (ta == SheetType::branch && tb == SheetType::branch) {
            throw branch_not_disjoint("two branch-divisor curves intersect");
        } else if (ta == SheetType::even_split && tb == SheetType::even_split) {
            long long c = to_long_checked(cnt);
            for (long long t = 0; t < c; ++t)
                ambiguous.push_back({va[0], va[1], vb[0], vb[1]});
        } else if (ta == SheetType::even_split || tb == SheetType::even_split) {
            const auto& split = ta == SheetType::even_split ? va : vb;
            const auto& other = ta == SheetType::even_split ? vb : va;
            SheetType to = ta == SheetType::even_split ? tb : ta;
            check(to == SheetType::even_single,
                  "a split curve meets the branch divisor");
            add(split[0], other[0], cnt);
            add(split[1], other[0], cnt);
        } else if (ta == SheetType::even_single && tb == SheetType::even_single) {
            add(va[0], vb[0], 2 * cnt);
        } else {
            /* branch with even-single */
            add(va[0], vb[0], cnt);
        }
    }

    /* canonical cycle from the covering formula */
    g.z.reserve(static_cast<std::size_t>(n));
    for (const auto& v : g.verts) g.z.push_back(v.coeff);

    /* resolve split-split sheet assignments if present */
    if (!ambiguous.empty()) {
        const std::size_t bits = ambiguous.size();
        check(bits <= 16, "too many ambiguous sheet crossings");
        std::vector<unsigned> valid;
        std::vector<IntMatrix> valid_m;
        for (unsigned mask = 0; mask < (1u << bits); ++mask) {
            CoverGraph cand = g;
            for (std::size_t t = 0; t < bits; ++t) {
                const auto& sc = ambiguous[t];
                bool crossed = (mask >> t) & 1u;
                int p = crossed ? sc.vb1 : sc.vb0;
                int q = crossed ? sc.vb0 : sc.vb1;
                cand.m.at(sc.va0, p) += 1;
                cand.m.at(p, sc.va0) += 1;
                cand.m.at(sc.va1, q) += 1;
                cand.m.at(q, sc.va1) += 1;
            }
            if (detail::dynkin_valid(cand)) {
                valid.push_back(mask);
                valid_m.push_back(cand.m);
            }
        }
        check(!valid.empty(), "no sheet assignment yields a rational double point");

        /* all valid assignments must agree up to swapping split-pair members */
        std::vector<std::pair<int, int>> pairs;
        for (const auto& vs : verts_of)
            if (vs.size() == 2) pairs.push_back({vs[0], vs[1]});
        auto equivalent = [&](const IntMatrix& a, const IntMatrix& b) {
            const std::size_t np = pairs.size();
            check(np <= 16, "too many split pairs");
            for (unsigned sm = 0; sm < (1u << np); ++sm) {
                std::vector<int> perm(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
                for (std::size_t p = 0; p < np; ++p)
                    if ((sm >> p) & 1u) {
                        perm[static_cast<std::size_t>(pairs[p].first)] = pairs[p].second;
                        perm[static_cast<std::size_t>(pairs[p].second)] = pairs[p].first;
                    }
                bool same = true;
                for (int i = 0; i < n && same; ++i)
                    for (int j = 0; j < n && same; ++j)
                        if (a.at(i, j) !=
                            b.at(perm[static_cast<std::size_t>(i)],
                                 perm[static_cast<std::size_t>(j)]))
                            same = false;
                if (same) return true;
            }
            return false;
        };
        for (std::size_t i = 1; i < valid_m.size(); ++i)
            check(equivalent(valid_m[0], valid_m[i]),
                  "sheet assignment is genuinely ambiguous");
        g.m = valid_m[0];
    }

    /* pullback compatibility: the pullbacks of downstairs curves must satisfy
     * pullback(a) . pullback(b) = 2 (a . b) for every pair, and likewise for
     * self-intersections. */
    {
        auto pullback_dot = [&](int a, int b) {
            BigInt s(0);
            const auto& va = verts_of[static_cast<std::size_t>(a)];
            const auto& vb = verts_of[static_cast<std::size_t>(b)];
            BigInt wa = g.verts[static_cast<std::size_t>(va[0])].type == SheetType::branch
                            ? 2 : 1;
            BigInt wb = g.verts[static_cast<std::size_t>(vb[0])].type == SheetType::branch
                            ? 2 : 1;
            for (int i : va)
                for (int j : vb) s += wa * wb * g.m.at(i, j);
            return s;
        };
        for (const auto& ca : arr.curves) {
            check(pullback_dot(ca.id, ca.id) == 2 * ca.self_int,
                  "pullback self-intersection mismatch");
            for (const auto& cb : arr.curves)
                if (cb.id > ca.id)
                    check(pullback_dot(ca.id, cb.id) == 2 * arr.edge(ca.id, cb.id),
                          "pullback intersection mismatch");
        }
    }

    /* independent derivation of the canonical cycle: solve M z = -r */
    {
        std::vector<BigInt> rhs;
        rhs.reserve(g.r.size());
        for (const auto& v : g.r) rhs.push_back(-v);
        std::vector<BigRational> sol = solve_linear_exact(g.m, rhs);
        for (std::size_t i = 0; i < sol.size(); ++i) {
            if (!is_integer(sol[i]))
                throw non_integral_solution("canonical cycle is not integral");
            check(to_integer(sol[i]) == g.z[i],
                  "canonical cycle solver disagrees with the covering formula");
        }
    }
    return g;
}

/* ------------------------------------------------------------------ */
/* Full germ pipeline.                                                 */
/* ------------------------------------------------------------------ */

struct GroupedCoeff {
    int down_id;
    BigInt value;
    bool from_pair; /* both members of a split pair survive with equal coefficient */
};

struct GermAnalysis {
    AdeType type;
    Arrangement phase1;
    Arrangement full;
    CoverGraph cover;
    MinimalModel minimal;
    AdeType dynkin;
    BigInt delta;
    std::vector<GroupedCoeff> grouped;
};

inline GermAnalysis analyze_germ(const AdeType& t, int cap = 60) {
    GermAnalysis out;
    out.type = t;
    out.phase1 = resolve(standard_germ(t), cap);
    if (out.phase1.curves.empty() && out.phase1.branch_nodes == 0)
        throw not_singular("the germ is smooth");
    out.full = out.phase1;
    make_branch_disjoint(out.full);
    out.cover = build_double_cover(out.full);
    out.minimal = contract_to_minimal(out.cover);
    out.dynkin = classify_dynkin(out.minimal.m);
    check(out.dynkin == t, "minimal graph type disagrees with the input germ");

    BigInt rz(0);
    for (std::size_t i = 0; i < out.minimal.r.size(); ++i)
        rz += out.minimal.r[i] * out.minimal.z[i];
    if (rz % 2 != 0)
        throw non_integral_defect("ramification pairing is odd");
    out.delta = rz / 2;
    check(out.delta > 0, "defect must be positive");

    /* -Z^2 = 2 delta on the minimal graph */
    BigInt z2(0);
    const int n = out.minimal.m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            z2 += out.minimal.z[static_cast<std::size_t>(i)] * out.minimal.m.at(i, j) *
                  out.minimal.z[static_cast<std::size_t>(j)];
    check(-z2 == 2 * out.delta, "defect disagrees with -Z^2");
    check(out.delta == defect_closed_form(t), "defect disagrees with the closed form");

    /* group surviving canonical-cycle coefficients by downstairs curve */
    for (const auto& c : out.full.curves) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < out.minimal.verts.size(); ++i)
            if (out.minimal.verts[i].down_id == c.id) idx.push_back(i);
        if (idx.empty()) continue;
        if (idx.size() == 2) {
            check(out.minimal.z[idx[0]] == out.minimal.z[idx[1]],
                  "split pair with unequal coefficients");
            out.grouped.push_back({c.id, out.minimal.z[idx[0]], true});
        } else {
            check(idx.size() == 1, "more than two curves over one downstairs curve");
            out.grouped.push_back({c.id, out.minimal.z[idx[0]], false});
        }
    }
    return out;
}

/* Expected grouped canonical-cycle multiset on the minimal resolution. */
inline std::vector<BigInt> expected_cycle_multiset(const AdeType& t) {
    validate_ade(t);
    std::vector<BigInt> v;
    switch (t.series) {
    case AdeSeries::A:
        for (int i = 1; i <= (t.index + 1) / 2; ++i) v.push_back(i);
        break;
    case AdeSeries::D: {
        if (t.index % 2 == 0) {
            int k = (t.index - 2) / 2;
            for (int i = 1; i <= k; ++i) v.push_back(2 * i + 1);
            for (int i = 1; i <= k; ++i) v.push_back(2 * i);
            v.push_back(k + 1);
            v.push_back(k + 1);
        } else {
            int k = (t.index - 3) / 2;
            for (int i = 1; i <= k; ++i) v.push_back(2 * i + 1);
            for (int i = 1; i <= k; ++i) v.push_back(2 * i);
            v.push_back(2 * k + 2);
            v.push_back(k + 1); /* split pair, printed once */
        }
        break;
    }
    case AdeSeries::E:
        if (t.index == 6) v = {BigInt(3), BigInt(2), BigInt(4), BigInt(6)};
        else if (t.index == 7)
            v = {BigInt(3), BigInt(5), BigInt(9), BigInt(6),
                 BigInt(5), BigInt(8), BigInt(3)};
        else
            v = {BigInt(3), BigInt(5), BigInt(9), BigInt(15),
                 BigInt(10), BigInt(8), BigInt(12), BigInt(6)};
        break;
    }
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace duval

#endif
