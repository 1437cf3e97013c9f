#ifndef DUVAL_CHISINI_HPP
#define DUVAL_CHISINI_HPP

/*
 * Uniqueness criteria for generic coverings with a common branch curve.
 *
 * Given two generic coverings f1, f2 of the plane branched along the same
 * curve B, each node and cusp of B carries a two-letter class: the first
 * letter says whether the point is s- or p-type for f1, the second for f2.
 * The fiber-product intersection calculus turns these counts into exact
 * intersection numbers on a resolution of the fiber product, and the main
 * inequality bounds the degree N2 of the second covering.  A second
 * criterion specializes the bound to m-canonical coverings with invariants
 * K^2 = k and e(S) = e.
 */

#include <optional>
#include <string>
#include <utility>

#include "duval/errors.hpp"
#include "duval/invariants.hpp"
#include "duval/rational.hpp"

namespace duval {

/* ------------------------------------------------------------------ */
/* Pairwise point classification                                      */
/* ------------------------------------------------------------------ */

enum class PointKind { node, cusp };
enum class PairClass { ss, sp, ps, pp };

/* Counts of nodes and cusps of B by their (f1, f2) type pair, together
 * with the context the main inequality needs: the defect delta_0 of the
 * higher singularities (all of which are ss), the degree N2 of the second
 * covering, the half-degree d-bar of B, and g1 = p_a(R_1), the arithmetic
 * genus of the first covering's ramification curve. */
struct PairClassification {
    BigInt n_ss, n_sp, n_ps, n_pp; /* nodes  */
    BigInt c_ss, c_sp, c_ps, c_pp; /* cusps  */
    BigInt delta_0;
    BigInt N2;
    BigInt d_bar;
    BigInt g1;

    BigInt nodes() const { return n_ss + n_sp + n_ps + n_pp; }
    BigInt cusps() const { return c_ss + c_sp + c_ps + c_pp; }
};

/* Validates counts and context; when the two coverings are known to share
 * (K^2, chi), the cross classes must be symmetric: n_ps = n_sp and
 * c_ps = c_sp. */
inline void validate_pair_classification(const PairClassification& cls,
                                         bool shared_invariants = false) {
    auto nonneg = [](const BigInt& v, const char* name) {
        if (v < 0) throw profile_error(std::string("negative count ") + name);
    };
    nonneg(cls.n_ss, "n_ss"); nonneg(cls.n_sp, "n_sp");
    nonneg(cls.n_ps, "n_ps"); nonneg(cls.n_pp, "n_pp");
    nonneg(cls.c_ss, "c_ss"); nonneg(cls.c_sp, "c_sp");
    nonneg(cls.c_ps, "c_ps"); nonneg(cls.c_pp, "c_pp");
    nonneg(cls.delta_0, "delta_0");
    if (cls.N2 < 2)
        throw profile_error("second covering degree must be at least 2");
    if (cls.d_bar < 1)
        throw profile_error("half-degree of the branch curve must be positive");
    if (cls.g1 < 0) throw profile_error("negative arithmetic genus g1");
    if (shared_invariants) {
        if (cls.n_ps != cls.n_sp)
            throw profile_error("coverings with equal invariants need n_ps = n_sp");
        if (cls.c_ps != cls.c_sp)
            throw profile_error("coverings with equal invariants need c_ps = c_sp");
    }
}

/* The same pair seen in the opposite order: sp and ps classes swap, the
 * context switches to the other covering's degree N1 and genus g2. */
inline PairClassification reversed_classification(const PairClassification& cls,
                                                  const BigInt& N1,
                                                  const BigInt& g2) {
    PairClassification rev = cls;
    std::swap(rev.n_sp, rev.n_ps);
    std::swap(rev.c_sp, rev.c_ps);
    rev.N2 = N1;
    rev.g1 = g2;
    return rev;
}

/* ------------------------------------------------------------------ */
/* Local intersection contributions and iota                          */
/* ------------------------------------------------------------------ */

/* Local intersection number of the ramification curve R of f1 with the
 * residual curve C of f2 at a node or cusp of the given class. */
inline int local_rc_contribution(PointKind kind, PairClass cls) {
    switch (cls) {
    case PairClass::ss: return 0;
    case PairClass::sp: return 2;
    case PairClass::ps: return 0;
    case PairClass::pp: return kind == PointKind::cusp ? 1 : 0;
    }
    throw internal_error("unknown pair class");
}

/* iota_1 = R~ . C~ = 2 n_sp + 2 c_sp + c_pp, cross-checked against the
 * sum of the local contributions. */
inline BigInt iota(const PairClassification& cls) {
    validate_pair_classification(cls);
    BigInt value = 2 * cls.n_sp + 2 * cls.c_sp + cls.c_pp;
    BigInt from_local =
        cls.n_ss * local_rc_contribution(PointKind::node, PairClass::ss) +
        cls.n_sp * local_rc_contribution(PointKind::node, PairClass::sp) +
        cls.n_ps * local_rc_contribution(PointKind::node, PairClass::ps) +
        cls.n_pp * local_rc_contribution(PointKind::node, PairClass::pp) +
        cls.c_ss * local_rc_contribution(PointKind::cusp, PairClass::ss) +
        cls.c_sp * local_rc_contribution(PointKind::cusp, PairClass::sp) +
        cls.c_ps * local_rc_contribution(PointKind::cusp, PairClass::ps) +
        cls.c_pp * local_rc_contribution(PointKind::cusp, PairClass::pp);
    check(value == from_local,
          "iota closed form disagrees with the local contribution sum");
    return value;
}

/* ------------------------------------------------------------------ */
/* Fiber-product intersection numbers                                 */
/* ------------------------------------------------------------------ */

struct FiberIntersections {
    BigInt rz_sq;  /* (R~ + Z_R)^2 = 2(3 d-bar + g1 - 1) - iota_1        */
    BigInt cz_sq;  /* (C~ + Z_C)^2 = (N2 - 2)(3 d-bar + g1 - 1) - iota_1 */
    BigInt cross;  /* (R~ + Z_R).(C~ + Z_C) = iota_1                     */
};

inline FiberIntersections fiber_intersections(const BigInt& d_bar,
                                              const BigInt& g1,
                                              const BigInt& iota1,
                                              const BigInt& N2) {
    check(N2 >= 2, "fiber product needs a second covering of degree >= 2");
    BigInt t = 3 * d_bar + g1 - 1;
    return FiberIntersections{2 * t - iota1, (N2 - 2) * t - iota1, iota1};
}

/* Determinant of the intersection matrix of (R~ + Z_R, C~ + Z_C); by the
 * Hodge index theorem it is <= 0 whenever both curves exist on the fiber
 * product surface.  The factored form T(N2(2T - iota) - 4T) ties its sign
 * directly to the main inequality and is asserted. */
inline BigInt pair_matrix_determinant(const BigInt& d_bar, const BigInt& g1,
                                      const BigInt& iota1, const BigInt& N2) {
    FiberIntersections fi = fiber_intersections(d_bar, g1, iota1, N2);
    BigInt det = fi.rz_sq * fi.cz_sq - fi.cross * fi.cross;
    BigInt t = 3 * d_bar + g1 - 1;
    check(det == t * (N2 * (2 * t - iota1) - 4 * t),
          "fiber-product determinant identity failed");
    return det;
}

/* ------------------------------------------------------------------ */
/* Defects on the fiber product                                       */
/* ------------------------------------------------------------------ */

/* Number of singular points lying over B on the two resolved factors:
 * delta_1 must equal delta_0 + n_sp + c_sp + n_ss + c_ss (it is the
 * surface defect of the first covering).  Then
 *   delta_R = 2(delta_1 - n_sp - c_sp),
 *   delta_C = (N2 - 2) delta_1 - 2 n_sp - c_sp. */
inline std::pair<BigInt, BigInt> delta_R_delta_C(const PairClassification& cls,
                                                 const BigInt& delta_1) {
    validate_pair_classification(cls);
    BigInt expected = cls.delta_0 + cls.n_sp + cls.c_sp + cls.n_ss + cls.c_ss;
    if (delta_1 != expected)
        throw negative_delta("delta_1 = " + delta_1.str() +
                             " inconsistent with classification (expected " +
                             expected.str() + ")");
    BigInt delta_R = 2 * (delta_1 - cls.n_sp - cls.c_sp);
    BigInt delta_C = (cls.N2 - 2) * delta_1 - 2 * cls.n_sp - cls.c_sp;
    if (delta_R < 0 || delta_C < 0)
        throw negative_delta("negative fiber-product defect (delta_R = " +
                             delta_R.str() + ", delta_C = " + delta_C.str() +
                             ")");
    return {delta_R, delta_C};
}

/* ------------------------------------------------------------------ */
/* Positivity of (R~ + Z_R)^2                                         */
/* ------------------------------------------------------------------ */

struct PositivityVerdict {
    BigInt value;  /* d + d-hat + 2 delta_0 + nu' + (c - c_pp) */
    bool positive;
};

/* Decomposition of (R~ + Z_R)^2 into manifestly nonnegative geometric
 * terms.  Always positive for data coming from an actual covering pair;
 * a non-positive value flags inconsistent input. */
inline PositivityVerdict positivity_check(const BigInt& d, const BigInt& d_hat,
                                          const BigInt& delta_0,
                                          const BigInt& nu_prime,
                                          const BigInt& c, const BigInt& c_pp) {
    BigInt value = d + d_hat + 2 * delta_0 + nu_prime + (c - c_pp);
    return PositivityVerdict{value, value > 0};
}

/* ------------------------------------------------------------------ */
/* The main inequality                                                */
/* ------------------------------------------------------------------ */

struct MainBound {
    bool unbounded;    /* denominator 2T - iota_1 <= 0: criterion vacuous */
    BigRational value; /* 4T / (2T - iota_1) when bounded                 */
};

inline MainBound main_bound(const BigInt& d_bar, const BigInt& g1,
                            const BigInt& iota1) {
    BigInt t = 3 * d_bar + g1 - 1;
    if (t <= 0)
        throw invalid_context("3 d-bar + g1 - 1 = " + t.str() +
                              " must be positive");
    BigInt denom = 2 * t - iota1;
    if (denom <= 0) return MainBound{true, BigRational(0)};
    return MainBound{false, big_rat(4 * t, denom)};
}

enum class Verdict { Unique, Inconclusive };

inline std::string verdict_name(Verdict v) {
    return v == Verdict::Unique ? "unique" : "inconclusive";
}

/* The covering is the only one with its branch curve and degree when N2
 * strictly exceeds the bound.  Equality or N2 = 2 never decides: a double
 * covering branched along B always exists, and the inequality tolerates
 * equality.  (The bound is always >= 2, so N2 = 2 falls out naturally.) */
inline Verdict uniqueness_verdict(const BigInt& N2, const MainBound& bound) {
    if (bound.unbounded) return Verdict::Inconclusive;
    check(bound.value >= 2, "main bound below 2 is impossible");
    if (BigRational(N2) > bound.value) return Verdict::Unique;
    return Verdict::Inconclusive;
}

/* ------------------------------------------------------------------ */
/* Full fiber-product report                                          */
/* ------------------------------------------------------------------ */

struct FiberProductReport {
    BigInt iota1;
    BigInt r_dot_c;     /* R~ . C~ (equals iota_1)      */
    FiberIntersections inters;
    BigInt delta_R, delta_C;
    PositivityVerdict positivity;
    MainBound bound;
    Verdict verdict;
};

/* Assembles the whole calculus for one ordering of the pair.  nu_prime is
 * the branch-fixed vanishing-cycle count of the higher singularities of B
 * (needed only for the positivity decomposition). */
inline FiberProductReport analyze_pair(const PairClassification& cls,
                                       const BigInt& nu_prime,
                                       bool shared_invariants = false) {
    validate_pair_classification(cls, shared_invariants);
    FiberProductReport rep;
    rep.iota1 = iota(cls);
    rep.r_dot_c = rep.iota1;
    rep.inters = fiber_intersections(cls.d_bar, cls.g1, rep.iota1, cls.N2);
    BigInt delta_1 = cls.delta_0 + cls.n_sp + cls.c_sp + cls.n_ss + cls.c_ss;
    std::tie(rep.delta_R, rep.delta_C) = delta_R_delta_C(cls, delta_1);
    BigInt d = 2 * cls.d_bar;
    BigInt n = cls.nodes(), c = cls.cusps();
    BigInt g = genus_of_B(d, n + c + cls.delta_0);
    /* g1 is the arithmetic genus of the first ramification curve, which
     * the classification already determines: only singularities of B
     * that are s-type for f1 survive on R_1, so p_a(R_1) = g + delta_1. */
    if (cls.g1 != g + delta_1)
        throw profile_error(
            "g1 = " + cls.g1.str() + " inconsistent with the classification"
            ": p_a of the ramification curve must be " +
            BigInt(g + delta_1).str());
    BigInt d_hat = plucker_dual_degree(d, g, c + nu_prime);
    rep.positivity =
        positivity_check(d, d_hat, cls.delta_0, nu_prime, c, cls.c_pp);
    /* Exact link between the decomposition and the intersection number:
     * (R~ + Z_R)^2 = d + d-hat + 2 delta_0 + nu' + (c - c_pp)
     *                + 2(n_ss + c_ss),
     * so positivity of the decomposition value implies the positivity of
     * the self-intersection. */
    check(rep.positivity.value + 2 * (cls.n_ss + cls.c_ss) ==
              rep.inters.rz_sq,
          "positivity decomposition does not reproduce (R~ + Z_R)^2");
    rep.bound = main_bound(cls.d_bar, cls.g1, rep.iota1);
    rep.verdict = uniqueness_verdict(cls.N2, rep.bound);
    return rep;
}

/* ------------------------------------------------------------------ */
/* m-canonical coverings                                              */
/* ------------------------------------------------------------------ */

struct MCanonicalInvariants {
    BigInt N;            /* covering degree m^2 k                   */
    BigInt d;            /* branch curve degree m(3m+1)k            */
    BigInt d_bar;        /* d / 2                                   */
    BigInt p_a_minus_1;  /* p_a(R) - 1 = (3m+1)(3m+2)k / 2          */
    BigInt T;            /* 3 d-bar + p_a(R) - 1 = (3m+1)^2 k       */
    bool degenerate;     /* N = 1: not a covering in any real sense */
};

/* Invariants of the generic covering induced by the m-canonical map of a
 * surface with K^2 = k. */
inline MCanonicalInvariants mcanonical_invariants(const BigInt& m,
                                                  const BigInt& k) {
    if (m < 1 || k < 1)
        throw profile_error("m-canonical level and K^2 must be positive");
    MCanonicalInvariants inv;
    inv.N = m * m * k;
    inv.d = m * (3 * m + 1) * k;
    check(inv.d % 2 == 0, "m-canonical branch degree must be even");
    inv.d_bar = inv.d / 2;
    BigInt pa2 = (3 * m + 1) * (3 * m + 2) * k;
    check(pa2 % 2 == 0, "m-canonical p_a(R) - 1 must be integral");
    inv.p_a_minus_1 = pa2 / 2;
    inv.T = 3 * inv.d_bar + inv.p_a_minus_1;
    check(inv.T == (3 * m + 1) * (3 * m + 1) * k,
          "T must equal (3m+1)^2 k for an m-canonical covering");
    inv.degenerate = inv.N == 1;
    return inv;
}

/* Exact upper bound for iota_1 = R~ . C~ of a pair of m-canonical
 * coverings.  With the Euler number e known,
 *   iota <= (4/9)(3e - k) + 3N + 2 p_a(R) - 2 - e;
 * without it, the largest Euler number allowed by the Noether-type bound
 * e <= 5k + 36 is substituted, giving (11/9)k + 12 + 3N + 2 p_a(R) - 2. */
inline BigRational iota_estimate(const BigInt& m, const BigInt& k,
                                 const std::optional<BigInt>& e = std::nullopt) {
    MCanonicalInvariants inv = mcanonical_invariants(m, k);
    BigRational base = BigRational(3 * inv.N + 2 * inv.p_a_minus_1);
    if (e) {
        if (k > 3 * *e)
            throw invalid_invariants("K^2 = " + k.str() +
                                     " exceeds three times the Euler number");
        if (*e > 5 * k + 36)
            throw invalid_invariants("Euler number " + e->str() +
                                     " exceeds the bound 5 K^2 + 36");
        return big_rat(4 * (3 * *e - k), 9) + base - BigRational(*e);
    }
    return big_rat(11 * k, 9) + BigRational(12) + base;
}

/* ------------------------------------------------------------------ */
/* The m-canonical uniqueness criterion                               */
/* ------------------------------------------------------------------ */

struct CriterionVerdict {
    bool holds;
    BigRational lhs;     /* 3m(2m+1)                                */
    BigRational rhs;     /* 11/9 + (1/k)(12 + 4(3 + 1/m)^2)         */
    BigRational margin;  /* lhs - rhs, positive exactly when it holds */
};

struct ChisiniCriterionReport {
    CriterionVerdict general;                  /* Euler number unknown */
    std::optional<CriterionVerdict> sharper;   /* with the Euler number */
};

namespace detail {

inline CriterionVerdict make_verdict(const BigRational& lhs,
                                     const BigRational& rhs) {
    return CriterionVerdict{lhs > rhs, lhs, rhs, lhs - rhs};
}

} // namespace detail

/* Sufficient condition for an m-canonical generic covering to be the only
 * generic covering with its branch curve and degree:
 *   3m(2m+1) > 11/9 + (1/k)(12 + 4(3 + 1/m)^2)
 * (exact rationals).  This is N2 > main bound with iota replaced by its
 * estimate; when e is supplied the sharper estimate replaces the
 * Noether-saturated one and the sharper verdict is reported as well. */
inline ChisiniCriterionReport chisini_criterion(
    const BigInt& m, const BigInt& k,
    const std::optional<BigInt>& e = std::nullopt) {
    if (m < 1 || k < 1)
        throw profile_error("m-canonical level and K^2 must be positive");
    BigRational lhs = BigRational(3 * m * (2 * m + 1));
    BigRational three_plus = BigRational(3) + big_rat(1, m);
    BigRational rhs = big_rat(11, 9) + (BigRational(12) +
                      4 * three_plus * three_plus) / BigRational(k);
    ChisiniCriterionReport rep;
    rep.general = detail::make_verdict(lhs, rhs);
    if (e) {
        /* Same reduction with the e-based iota estimate: the additive
         * constant 11/9 + 12/k tightens to (3e - 4k) / (9k). */
        iota_estimate(m, k, e); /* validates the (k, e) sanity bounds */
        BigRational rhs_sharp = big_rat(3 * *e - 4 * k, 9 * k) +
                                4 * three_plus * three_plus / BigRational(k);
        rep.sharper = detail::make_verdict(lhs, rhs_sharp);
    }
    return rep;
}

} // namespace duval

#endif
