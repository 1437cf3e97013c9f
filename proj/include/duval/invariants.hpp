#ifndef DUVAL_INVARIANTS_HPP
#define DUVAL_INVARIANTS_HPP

/*
 * Numerical invariants of a generic degree-N covering f: X -> P^2 branched
 * along a curve B of even degree d whose singularities are A-D-E germs.
 *
 * Singularities of B split into two classes: those lying under singular
 * points of X ("s-type") and those produced by the projection itself
 * ("p-type").  Only nodes and cusps can be p-type; all higher singularities
 * are s-type.  From these counts the module computes defects, genera,
 * self-intersections of the ramification divisor, Chern numbers, the Euler
 * characteristic of the structure sheaf, degree bounds, and the degree of
 * the dual curve of B.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "duval/ade.hpp"
#include "duval/errors.hpp"
#include "duval/rational.hpp"

namespace duval {

/* ------------------------------------------------------------------ */
/* Singularity profiles                                               */
/* ------------------------------------------------------------------ */

/* Counts of A-D-E singular points on the branch curve B:
 * a[k] singularities of type A_k (k >= 1), d[k] of type D_k (k >= 4),
 * e[k] of type E_k (k in {6,7,8}).  Zero counts may be present or absent. */
struct SingularityProfile {
    std::map<int, BigInt> a;
    std::map<int, BigInt> d;
    std::map<int, BigInt> e;

    /* Number of nodes (A_1 points). */
    BigInt nodes() const {
        auto it = a.find(1);
        return it == a.end() ? BigInt(0) : it->second;
    }
    /* Number of cusps (A_2 points). */
    BigInt cusps() const {
        auto it = a.find(2);
        return it == a.end() ? BigInt(0) : it->second;
    }

    /* All (type, count) pairs in canonical order, zero counts skipped. */
    std::vector<std::pair<AdeType, BigInt>> entries() const {
        std::vector<std::pair<AdeType, BigInt>> out;
        for (const auto& [k, c] : a)
            if (c != 0) out.push_back({AdeType{AdeSeries::A, k}, c});
        for (const auto& [k, c] : d)
            if (c != 0) out.push_back({AdeType{AdeSeries::D, k}, c});
        for (const auto& [k, c] : e)
            if (c != 0) out.push_back({AdeType{AdeSeries::E, k}, c});
        return out;
    }
};

inline void validate_profile(const SingularityProfile& p) {
    for (const auto& [k, c] : p.a) {
        if (k < 1) throw profile_error("A-series index must be >= 1, got " + std::to_string(k));
        if (c < 0) throw profile_error("negative count for A" + std::to_string(k));
    }
    for (const auto& [k, c] : p.d) {
        if (k < 4) throw profile_error("D-series index must be >= 4, got " + std::to_string(k));
        if (c < 0) throw profile_error("negative count for D" + std::to_string(k));
    }
    for (const auto& [k, c] : p.e) {
        if (k < 6 || k > 8)
            throw profile_error("E-series index must be 6, 7 or 8, got " + std::to_string(k));
        if (c < 0) throw profile_error("negative count for E" + std::to_string(k));
    }
}

/* Total defect delta of B: the sum of the local defects of all its
 * singular points (nodes and cusps each contribute 1). */
inline BigInt total_defect(const SingularityProfile& p) {
    validate_profile(p);
    BigInt sum = 0;
    for (const auto& [t, c] : p.entries()) sum += c * defect_closed_form(t);
    return sum;
}

/* Defect delta_0 of the higher singularities only (everything except
 * nodes and cusps), so that delta = n + c + delta_0. */
inline BigInt higher_defect(const SingularityProfile& p) {
    validate_profile(p);
    BigInt sum = 0;
    for (const auto& [t, c] : p.entries()) {
        if (t.series == AdeSeries::A && t.index <= 2) continue;
        sum += c * defect_closed_form(t);
    }
    return sum;
}

/* ------------------------------------------------------------------ */
/* Covering profiles                                                  */
/* ------------------------------------------------------------------ */

/* A generic covering of the plane: degree N, branch curve of degree d
 * with the given singularity profile, and the s/p split of its nodes
 * and cusps.  Validated eagerly: construct via make_covering_profile. */
struct CoveringProfile {
    BigInt N;               /* degree of the covering                  */
    BigInt d;               /* degree of the branch curve B (even)     */
    BigInt n_s, n_p;        /* nodes under Sing X / extra nodes        */
    BigInt c_s, c_p;        /* cusps under Sing X / extra cusps        */
    SingularityProfile sing;/* full profile of B (includes A1 and A2)  */

    BigInt d_bar() const { return d / 2; }
    BigInt nodes() const { return n_s + n_p; }
    BigInt cusps() const { return c_s + c_p; }
};

inline CoveringProfile make_covering_profile(BigInt N, BigInt d,
                                             BigInt n_s, BigInt n_p,
                                             BigInt c_s, BigInt c_p,
                                             SingularityProfile sing) {
    validate_profile(sing);
    if (N < 1) throw profile_error("covering degree must be positive");
    if (d < 2) throw profile_error("branch curve degree must be at least 2");
    if (d % 2 != 0)
        throw profile_error("branch curve degree must be even, got " + d.str());
    if (n_s < 0 || n_p < 0 || c_s < 0 || c_p < 0)
        throw profile_error("negative node/cusp count");
    if (n_s + n_p != sing.nodes())
        throw profile_error("node split n_s + n_p = " + BigInt(n_s + n_p).str() +
                            " does not match a1 = " + sing.nodes().str());
    if (c_s + c_p != sing.cusps())
        throw profile_error("cusp split c_s + c_p = " + BigInt(c_s + c_p).str() +
                            " does not match a2 = " + sing.cusps().str());
    if (n_p % 4 != 0)
        throw profile_error("extra-node count must be divisible by 4, got " + n_p.str());
    if (c_p % 3 != 0)
        throw profile_error("extra-cusp count must be divisible by 3, got " + c_p.str());
    return CoveringProfile{std::move(N), std::move(d), std::move(n_s),
                           std::move(n_p), std::move(c_s), std::move(c_p),
                           std::move(sing)};
}

/* ------------------------------------------------------------------ */
/* Invariant formulas                                                 */
/* ------------------------------------------------------------------ */

/* Defect delta_X of the covering surface: only s-type singularities
 * contribute.  Computed as n_s + c_s + delta_0 and cross-checked against
 * the equivalent form delta - n_p - c_p. */
inline BigInt defect_of_surface(const CoveringProfile& cp) {
    BigInt dx = cp.n_s + cp.c_s + higher_defect(cp.sing);
    BigInt alt = total_defect(cp.sing) - cp.n_p - cp.c_p;
    check(dx == alt, "surface defect: the two defining forms disagree");
    return dx;
}

/* Geometric genus of B: (d-1)(d-2)/2 - delta. */
inline BigInt genus_of_B(const BigInt& d, const BigInt& delta) {
    BigInt g = (d - 1) * (d - 2) / 2 - delta;
    if (g < 0)
        throw negative_genus("genus (d-1)(d-2)/2 - delta = " + g.str() +
                             " is negative: inconsistent profile");
    return g;
}

/* Arithmetic genus of the reduced ramification curve R:
 * p_a(R) = (d-1)(d-2)/2 - n_p - c_p. */
inline BigInt arithmetic_genus_R(const BigInt& d, const BigInt& n_p,
                                 const BigInt& c_p) {
    return (d - 1) * (d - 2) / 2 - n_p - c_p;
}

/* Profile form: computes p_a(R) and asserts it equals g + delta_X. */
inline BigInt arithmetic_genus_R(const CoveringProfile& cp) {
    BigInt pa = arithmetic_genus_R(cp.d, cp.n_p, cp.c_p);
    BigInt g = genus_of_B(cp.d, total_defect(cp.sing));
    check(pa == g + defect_of_surface(cp),
          "arithmetic genus of R does not equal g + delta_X");
    return pa;
}

struct SelfIntersections {
    BigInt r_bar_sq;        /* (R-bar)^2 on the resolved surface   */
    BigInt r_bar_plus_z_sq; /* (R-bar + Z)^2, Z the canonical cycle */
};

/* (R-bar)^2 = 3 d-bar + g - 1 - delta_X and
 * (R-bar + Z)^2 = 3 d-bar + p_a(R) - 1 with p_a(R) = g + delta_X. */
inline SelfIntersections self_intersections(const BigInt& d_bar,
                                            const BigInt& g,
                                            const BigInt& delta_X) {
    BigInt base = 3 * d_bar + g - 1;
    return SelfIntersections{base - delta_X, base + delta_X};
}

struct ChernEuler {
    BigInt k_sq;  /* self-intersection of the canonical class K^2 */
    BigInt euler; /* topological Euler number e                   */
    BigInt chi;   /* Euler characteristic of the structure sheaf  */
};

/* K^2 = 9N - 9 d-bar + p_a(R) - 1  (equivalently 9N + d(d-12)/2 - n_p - c_p),
 * e = 3N + 2g - 2 + 2 delta_X - c_p,
 * chi = N + d-bar (d-bar - 3)/2 - n_p/4 - c_p/3.
 * The two forms of K^2 and the Noether identity K^2 + e = 12 chi are
 * asserted exactly. */
inline ChernEuler chern_and_euler(const BigInt& N, const BigInt& d_bar,
                                  const BigInt& p_a, const BigInt& g,
                                  const BigInt& delta_X, const BigInt& n_p,
                                  const BigInt& c_p) {
    if (n_p % 4 != 0)
        throw non_integral_chi("chi is not an integer: extra-node count " +
                               n_p.str() + " is not divisible by 4");
    if (c_p % 3 != 0)
        throw non_integral_chi("chi is not an integer: extra-cusp count " +
                               c_p.str() + " is not divisible by 3");
    BigInt k_sq = 9 * N - 9 * d_bar + p_a - 1;
    BigInt d = 2 * d_bar;
    check(k_sq == 9 * N + d * (d - 12) / 2 - n_p - c_p,
          "the two closed forms of K^2 disagree");
    BigInt euler = 3 * N + 2 * g - 2 + 2 * delta_X - c_p;
    BigRational chi_q = BigRational(N) + big_rat(d_bar * (d_bar - 3), 2) -
                        big_rat(n_p, 4) - big_rat(c_p, 3);
    if (!is_integer(chi_q))
        throw non_integral_chi("chi = " + format_rational(chi_q) +
                               " is not an integer");
    BigInt chi = to_integer(chi_q);
    check(k_sq + euler == 12 * chi, "Noether identity K^2 + e = 12 chi failed");
    return ChernEuler{k_sq, euler, chi};
}

struct DegreeBoundReport {
    BigInt linear_bound;          /* d-bar + 1                                */
    BigRational canonical_bound;  /* 4 d-bar^2 / (3 d-bar + g - 1 + delta_X)  */
    bool linear_equality;         /* N attains the linear bound               */
    bool canonical_equality;      /* N attains the canonical-class bound      */
};

/* Checks N <= d-bar + 1 and N <= 4 d-bar^2 / (3 d-bar + g - 1 + delta_X)
 * with exact rational comparison.  Violation of either bound means the
 * profile cannot come from a generic covering.  Equality attainment is
 * reported as a flag only (it corresponds to the ramification class being
 * numerically proportional to the canonical class, which the numerical
 * data cannot certify). */
inline DegreeBoundReport degree_bounds(const BigInt& N, const BigInt& d_bar,
                                       const BigInt& g, const BigInt& delta_X) {
    BigInt linear = d_bar + 1;
    BigInt denom = 3 * d_bar + g - 1 + delta_X;
    check(denom > 0, "degree bound denominator must be positive");
    BigRational canonical = big_rat(4 * d_bar * d_bar, denom);
    if (N > linear)
        throw bound_violated("covering degree " + N.str() +
                             " exceeds the linear bound " + linear.str());
    if (BigRational(N) > canonical)
        throw bound_violated("covering degree " + N.str() +
                             " exceeds the canonical bound " +
                             format_rational_human(canonical));
    return DegreeBoundReport{linear, canonical, N == linear,
                             BigRational(N) == canonical};
}

struct NuPair {
    BigInt nu;       /* total count of branch-fixed vanishing cycles  */
    BigInt nu_prime; /* contribution of the higher singularities only */
};

/* nu = sum over all singular points of nu_invariant(type); nu' is the
 * same sum restricted to the higher singularities, so nu = c + nu'. */
inline NuPair nu_of_profile(const SingularityProfile& p) {
    validate_profile(p);
    BigInt nu = 0, nu_prime = 0;
    for (const auto& [t, c] : p.entries()) {
        BigInt contrib = c * nu_invariant(t);
        nu += contrib;
        if (!(t.series == AdeSeries::A && t.index <= 2)) nu_prime += contrib;
    }
    check(nu == p.cusps() + nu_prime, "nu decomposition nu = c + nu' failed");
    return NuPair{nu, nu_prime};
}

/* Degree of the dual curve of B: d-hat = 2d + (2g - 2) - nu. */
inline BigInt plucker_dual_degree(const BigInt& d, const BigInt& g,
                                  const BigInt& nu) {
    BigInt dual = 2 * d + 2 * g - 2 - nu;
    if (dual <= 0)
        throw invalid_dual("dual curve degree " + dual.str() +
                           " must be positive");
    return dual;
}

/* ------------------------------------------------------------------ */
/* Full report                                                        */
/* ------------------------------------------------------------------ */

struct InvariantReport {
    BigInt N, d, d_bar;
    BigInt delta_B;  /* total defect of B               */
    BigInt delta_0;  /* defect of higher singularities  */
    BigInt delta_X;  /* defect of the covering surface  */
    BigInt genus;    /* geometric genus of B            */
    BigInt p_a_R;    /* arithmetic genus of R           */
    SelfIntersections self_ints;
    ChernEuler chern;
    NuPair nu;
    BigInt dual_degree;
    DegreeBoundReport bounds;
};

/* Computes every numerical invariant of the covering with all built-in
 * consistency checks (defect decomposition, genus formulas, Chern forms,
 * the Noether identity, degree bounds, dual degree). */
inline InvariantReport analyze_covering(const CoveringProfile& cp) {
    InvariantReport rep;
    rep.N = cp.N;
    rep.d = cp.d;
    rep.d_bar = cp.d_bar();
    rep.delta_B = total_defect(cp.sing);
    rep.delta_0 = higher_defect(cp.sing);
    check(rep.delta_B == cp.nodes() + cp.cusps() + rep.delta_0,
          "defect decomposition delta = n + c + delta_0 failed");
    rep.delta_X = defect_of_surface(cp);
    rep.genus = genus_of_B(cp.d, rep.delta_B);
    rep.p_a_R = arithmetic_genus_R(cp);
    rep.self_ints = self_intersections(rep.d_bar, rep.genus, rep.delta_X);
    rep.chern = chern_and_euler(cp.N, rep.d_bar, rep.p_a_R, rep.genus,
                                rep.delta_X, cp.n_p, cp.c_p);
    rep.nu = nu_of_profile(cp.sing);
    rep.dual_degree = plucker_dual_degree(cp.d, rep.genus, rep.nu.nu);
    rep.bounds = degree_bounds(cp.N, rep.d_bar, rep.genus, rep.delta_X);
    return rep;
}

} // namespace duval

#endif
