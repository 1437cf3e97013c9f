#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "duval/chisini.hpp"

using namespace duval;

namespace {

PairClassification cubic_pair() {
    PairClassification cls;
    cls.c_pp = 6;
    cls.N2 = 3;
    cls.d_bar = 3;
    cls.g1 = 4;
    return cls;
}

} // namespace

TEST_CASE("local contributions to the ramification intersection") {
    CHECK(local_rc_contribution(PointKind::node, PairClass::ss) == 0);
    CHECK(local_rc_contribution(PointKind::node, PairClass::sp) == 2);
    CHECK(local_rc_contribution(PointKind::node, PairClass::ps) == 0);
    CHECK(local_rc_contribution(PointKind::node, PairClass::pp) == 0);
    CHECK(local_rc_contribution(PointKind::cusp, PairClass::ss) == 0);
    CHECK(local_rc_contribution(PointKind::cusp, PairClass::sp) == 2);
    CHECK(local_rc_contribution(PointKind::cusp, PairClass::ps) == 0);
    CHECK(local_rc_contribution(PointKind::cusp, PairClass::pp) == 1);
}

TEST_CASE("iota aggregates the local contributions") {
    PairClassification cls;
    cls.n_sp = 2;
    cls.c_sp = 1;
    cls.c_pp = 3;
    cls.N2 = 3;
    cls.d_bar = 5;
    cls.g1 = 2;
    CHECK(iota(cls) == 2 * 2 + 2 * 1 + 3);
    PairClassification zero;
    zero.N2 = 2;
    zero.d_bar = 3;
    zero.g1 = 0;
    CHECK(iota(zero) == 0);
    CHECK(iota(cubic_pair()) == 6);
}

TEST_CASE("iota equals the pointwise sum on random classifications") {
    std::mt19937 rng(90125);
    for (int trial = 0; trial < 200; ++trial) {
        PairClassification cls;
        cls.n_ss = static_cast<int>(rng() % 5);
        cls.n_sp = static_cast<int>(rng() % 5);
        cls.n_ps = static_cast<int>(rng() % 5);
        cls.n_pp = static_cast<int>(rng() % 5);
        cls.c_ss = static_cast<int>(rng() % 5);
        cls.c_sp = static_cast<int>(rng() % 5);
        cls.c_ps = static_cast<int>(rng() % 5);
        cls.c_pp = static_cast<int>(rng() % 5);
        cls.N2 = 3;
        cls.d_bar = 9;
        cls.g1 = 1;
        BigInt pointwise =
            cls.n_ss * local_rc_contribution(PointKind::node, PairClass::ss) +
            cls.n_sp * local_rc_contribution(PointKind::node, PairClass::sp) +
            cls.n_ps * local_rc_contribution(PointKind::node, PairClass::ps) +
            cls.n_pp * local_rc_contribution(PointKind::node, PairClass::pp) +
            cls.c_ss * local_rc_contribution(PointKind::cusp, PairClass::ss) +
            cls.c_sp * local_rc_contribution(PointKind::cusp, PairClass::sp) +
            cls.c_ps * local_rc_contribution(PointKind::cusp, PairClass::ps) +
            cls.c_pp * local_rc_contribution(PointKind::cusp, PairClass::pp);
        CHECK(iota(cls) == pointwise);
    }
}

TEST_CASE("fiber intersection fixture") {
    FiberIntersections fi = fiber_intersections(40, 137, 9, 25);
    CHECK(fi.rz_sq == 503);
    CHECK(fi.cz_sq == 5879);
    CHECK(fi.cross == 9);
    FiberIntersections d2 = fiber_intersections(3, 4, 6, 2);
    CHECK(d2.cz_sq == -6); /* N2 = 2: residual class is below zero */
    CHECK_THROWS_AS(fiber_intersections(3, 4, 0, 1), internal_error);
}

TEST_CASE("pair determinant matches the two-by-two expansion") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        BigInt d_bar = 2 + static_cast<int>(rng() % 20);
        BigInt g1 = static_cast<int>(rng() % 30);
        BigInt iota1 = static_cast<int>(rng() % 40);
        BigInt N2 = 2 + static_cast<int>(rng() % 8);
        FiberIntersections fi = fiber_intersections(d_bar, g1, iota1, N2);
        BigInt direct = fi.rz_sq * fi.cz_sq - fi.cross * fi.cross;
        CHECK(pair_matrix_determinant(d_bar, g1, iota1, N2) == direct);
    }
}

TEST_CASE("determinant sign flips exactly at the degree bound") {
    /* T = 3*5 + 2 - 1 = 16, iota = 8: bound = 64 / 24 = 8/3 */
    BigInt d_bar = 5, g1 = 2, iota1 = 8;
    MainBound b = main_bound(d_bar, g1, iota1);
    REQUIRE_FALSE(b.unbounded);
    CHECK(b.value == big_rat(8, 3));
    /* Strictly below the bound both curves may coexist, so the Hodge
     * index theorem forces det <= 0; strictly above it det > 0. */
    CHECK(pair_matrix_determinant(d_bar, g1, iota1, 2) < 0);
    CHECK(pair_matrix_determinant(d_bar, g1, iota1, 3) > 0);
}

TEST_CASE("delta pair splits") {
    auto [dr, dc] = delta_R_delta_C(cubic_pair(), 0);
    CHECK(dr == 0);
    CHECK(dc == 0);
    PairClassification cls;
    cls.n_sp = 1;
    cls.c_sp = 1;
    cls.n_ss = 2;
    cls.c_ss = 1;
    cls.delta_0 = 1;
    cls.N2 = 4;
    cls.d_bar = 6;
    cls.g1 = 3;
    BigInt delta1 = cls.delta_0 + cls.n_sp + cls.c_sp + cls.n_ss + cls.c_ss;
    auto [dr2, dc2] = delta_R_delta_C(cls, delta1);
    CHECK(dr2 == 2 * (delta1 - cls.n_sp - cls.c_sp));
    CHECK(dc2 == (cls.N2 - 2) * delta1 - 2 * cls.n_sp - cls.c_sp);
    CHECK_THROWS_AS(delta_R_delta_C(cls, delta1 + 1), negative_delta);
}

TEST_CASE("main bound is exactly two when iota vanishes") {
    std::mt19937 rng(1984);
    for (int trial = 0; trial < 100; ++trial) {
        BigInt d_bar = 1 + static_cast<int>(rng() % 30);
        BigInt g1 = static_cast<int>(rng() % 40);
        MainBound b = main_bound(d_bar, g1, 0);
        REQUIRE_FALSE(b.unbounded);
        CHECK(b.value == BigRational(2));
    }
}

TEST_CASE("main bound edge cases") {
    MainBound b = main_bound(3, 4, 6); /* T = 12, 48/18 = 8/3 */
    CHECK(b.value == big_rat(8, 3));
    CHECK(main_bound(3, 4, 24).unbounded); /* iota = 2T */
    CHECK(main_bound(3, 4, 30).unbounded);
    CHECK_THROWS_AS(main_bound(0, 1, 0), invalid_context);
}

TEST_CASE("verdicts require strict excess over the bound") {
    MainBound b = main_bound(3, 4, 6);
    CHECK(uniqueness_verdict(3, b) == Verdict::Unique);     /* 3 > 8/3 */
    CHECK(uniqueness_verdict(2, b) == Verdict::Inconclusive);
    MainBound two = main_bound(5, 1, 0);
    CHECK(uniqueness_verdict(2, two) == Verdict::Inconclusive);
    CHECK(uniqueness_verdict(3, two) == Verdict::Unique);
    MainBound vac{true, BigRational(0)};
    CHECK(uniqueness_verdict(100, vac) == Verdict::Inconclusive);
}

TEST_CASE("full pair analysis of the cubic fixture") {
    FiberProductReport rep = analyze_pair(cubic_pair(), 0);
    CHECK(rep.iota1 == 6);
    CHECK(rep.inters.rz_sq == 18);
    CHECK(rep.delta_R == 0);
    CHECK(rep.delta_C == 0);
    CHECK(rep.positivity.positive);
    CHECK(rep.bound.value == big_rat(8, 3));
    CHECK(rep.verdict == Verdict::Unique);
}

TEST_CASE("positivity decomposition tracks the self-intersection") {
    PairClassification cls;
    cls.n_ss = 2;
    cls.c_ss = 1;
    cls.c_pp = 6;
    cls.N2 = 3;
    cls.d_bar = 4;
    /* g(B) = 21 - 9 = 12 and delta_1 = 3, so p_a(R_1) = 15. */
    cls.g1 = 15;
    FiberProductReport rep = analyze_pair(cls, 0);
    CHECK(rep.positivity.value + 2 * (cls.n_ss + cls.c_ss) ==
          rep.inters.rz_sq);
}

TEST_CASE("analysis rejects a genus inconsistent with the classification") {
    PairClassification cls = cubic_pair();
    cls.g1 = 5; /* the all-pp sextic forces p_a(R_1) = g = 4 */
    CHECK_THROWS_AS(analyze_pair(cls, 0), profile_error);
}

TEST_CASE("reversed classification swaps the mixed classes") {
    PairClassification cls = cubic_pair();
    cls.n_sp = 2;
    cls.n_ps = 5;
    cls.c_sp = 1;
    cls.c_ps = 3;
    PairClassification rev = reversed_classification(cls, 7, 9);
    CHECK(rev.n_sp == 5);
    CHECK(rev.n_ps == 2);
    CHECK(rev.c_sp == 3);
    CHECK(rev.c_ps == 1);
    CHECK(rev.N2 == 7);
    CHECK(rev.g1 == 9);
    CHECK(rev.n_ss == cls.n_ss);
    CHECK(rev.n_pp == cls.n_pp);
}

TEST_CASE("shared invariants force symmetric mixed counts") {
    PairClassification cls = cubic_pair();
    cls.n_sp = 1; /* n_ps stays 0 */
    cls.N2 = 4;   /* keeps delta_C = (N2-2)*delta_1 - 2*n_sp >= 0 */
    CHECK_THROWS_AS(analyze_pair(cls, 0, true), profile_error);
    CHECK_NOTHROW(analyze_pair(cls, 0, false));
}

TEST_CASE("m-canonical invariants") {
    MCanonicalInvariants inv = mcanonical_invariants(5, 1);
    CHECK(inv.N == 25);
    CHECK(inv.d == 80);
    CHECK(inv.d_bar == 40);
    CHECK(inv.p_a_minus_1 == 136);
    CHECK(inv.T == 256);
    CHECK_FALSE(inv.degenerate);
    CHECK(mcanonical_invariants(1, 1).degenerate);
    MCanonicalInvariants i32 = mcanonical_invariants(3, 2);
    CHECK(i32.T == 200); /* (3m+1)^2 k = 100 * 2 */
    CHECK_THROWS_AS(mcanonical_invariants(0, 1), profile_error);
    CHECK_THROWS_AS(mcanonical_invariants(2, 0), profile_error);
}

TEST_CASE("iota estimate with and without the euler number") {
    /* m = 2, k = 2: base = 3N + 2(p_a - 1) = 24 + 112 = 136 */
    CHECK(iota_estimate(2, 2) == big_rat(22, 9) + 12 + 136);
    CHECK(iota_estimate(2, 2, BigInt(30)) ==
          big_rat(4 * (90 - 2), 9) + 136 - 30);
    /* saturation: at e = 5k + 36 both forms agree */
    CHECK(iota_estimate(2, 2, BigInt(46)) == iota_estimate(2, 2));
    CHECK_THROWS_AS(iota_estimate(2, 2, BigInt(47)), invalid_invariants);
    CHECK_THROWS_AS(iota_estimate(2, 30, BigInt(9)), invalid_invariants);
}

TEST_CASE("criterion boundary cases") {
    ChisiniCriterionReport r31 = chisini_criterion(3, 1);
    CHECK(r31.general.holds);
    CHECK(r31.general.lhs == BigRational(63));
    CHECK(r31.general.rhs == big_rat(173, 3));
    CHECK(r31.general.margin == big_rat(16, 3));
    CHECK_FALSE(r31.sharper.has_value());

    CHECK_FALSE(chisini_criterion(2, 2).general.holds);
    CHECK(chisini_criterion(2, 3).general.holds);
    CHECK_FALSE(chisini_criterion(1, 9).general.holds);
    CHECK(chisini_criterion(1, 10).general.holds);
    for (int k = 1; k <= 50; ++k) CHECK(chisini_criterion(3, k).general.holds);
}

TEST_CASE("euler-aware criterion can rescue borderline cases") {
    ChisiniCriterionReport rep = chisini_criterion(2, 2, BigInt(30));
    CHECK_FALSE(rep.general.holds);
    REQUIRE(rep.sharper.has_value());
    CHECK(rep.sharper->holds);
    CHECK(rep.sharper->rhs == big_rat(41, 9) + big_rat(49, 2));
    /* At the saturation value the sharper bound coincides with the
     * general one. */
    ChisiniCriterionReport sat = chisini_criterion(2, 2, BigInt(46));
    CHECK(sat.sharper->rhs == sat.general.rhs);
}
